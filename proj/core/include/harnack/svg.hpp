#pragma once

#include <string>
#include <vector>

namespace harnack {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool markers = false;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    int width = 640;
    int height = 420;
};

/// Static polyline plot with axes, ticks and a legend. Series values that are
/// not finite are skipped.
std::string render_svg(const PlotSpec& spec);

}  // namespace harnack
