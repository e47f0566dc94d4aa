#include "harnack/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace harnack {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

}  // namespace

std::string render_svg(const PlotSpec& spec) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : spec.series) {
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    if (xmax == xmin) xmin -= 0.5, xmax += 0.5;
    if (ymax == ymin) ymin -= 0.5, ymax += 0.5;
    const double pad_y = 0.05 * (ymax - ymin);
    ymin -= pad_y;
    ymax += pad_y;

    const double left = 70, right = 20, top = 36, bottom = 50;
    const double W = spec.width, H = spec.height;
    const double pw = W - left - right, ph = H - top - bottom;
    auto X = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
    auto Y = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << num(W / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(spec.title) << "</text>\n";
    o << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw)
      << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double fx = xmin + (xmax - xmin) * k / 4.0;
        const double fy = ymin + (ymax - ymin) * k / 4.0;
        o << "<line x1=\"" << num(X(fx)) << "\" y1=\"" << num(top + ph) << "\" x2=\"" << num(X(fx))
          << "\" y2=\"" << num(top + ph + 5) << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << num(X(fx)) << "\" y=\"" << num(top + ph + 18)
          << "\" text-anchor=\"middle\" font-size=\"11\">" << tick_label(fx) << "</text>\n";
        o << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(Y(fy)) << "\" x2=\"" << num(left)
          << "\" y2=\"" << num(Y(fy)) << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << num(left - 8) << "\" y=\"" << num(Y(fy) + 4)
          << "\" text-anchor=\"end\" font-size=\"11\">" << tick_label(fy) << "</text>\n";
    }
    o << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(H - 10)
      << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(spec.x_label) << "</text>\n";
    o << "<text x=\"16\" y=\"" << num(top + ph / 2) << "\" text-anchor=\"middle\" font-size=\"13\""
      << " transform=\"rotate(-90 16 " << num(top + ph / 2) << ")\">" << escape(spec.y_label)
      << "</text>\n";

    for (std::size_t k = 0; k < spec.series.size(); ++k) {
        const auto& s = spec.series[k];
        const char* color = kPalette[k % std::size(kPalette)];
        std::string pts;
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            pts += num(X(s.x[i])) + "," + num(Y(s.y[i])) + " ";
            if (s.markers) {
                o << "<circle cx=\"" << num(X(s.x[i])) << "\" cy=\"" << num(Y(s.y[i]))
                  << "\" r=\"3\" fill=\"" << color << "\"/>\n";
            }
        }
        if (!pts.empty()) {
            pts.pop_back();
            o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
              << pts << "\"/>\n";
        }
        const double ly = top + 14 + 16 * static_cast<double>(k);
        o << "<line x1=\"" << num(left + pw - 150) << "\" y1=\"" << num(ly) << "\" x2=\""
          << num(left + pw - 130) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
          << "\" stroke-width=\"2\"/>\n";
        o << "<text x=\"" << num(left + pw - 125) << "\" y=\"" << num(ly + 4)
          << "\" font-size=\"11\">" << escape(s.label) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace harnack
