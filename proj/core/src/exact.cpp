#include "harnack/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "harnack/errors.hpp"
#include "harnack/weak_form.hpp"

namespace harnack {

double BarenblattParams::alpha() const { return 1.0 / (2.0 * (p - 1.0)); }

double BarenblattParams::k() const {
    if (k_override) return *k_override;
    return ((2.0 - p) / p) * std::pow(alpha(), 1.0 / (p - 1.0));
}

void BarenblattParams::validate() const {
    if (!(p > 1.0 && p < 2.0)) throw InvalidInput("barenblatt: need 1 < p < 2");
    if (!(C > 0.0)) throw InvalidInput("barenblatt: need C > 0");
    if (!(t0 >= 0.0)) throw InvalidInput("barenblatt: need t0 >= 0");
    if (!std::isfinite(center)) throw InvalidInput("barenblatt: center not finite");
    if (!(k() > 0.0)) throw InvalidInput("barenblatt: need k > 0");
}

double barenblatt_eval(const BarenblattParams& bp, double x, double t) {
    const double s = t + bp.t0;
    if (!(s > 0.0)) throw DomainError("barenblatt_eval: t + t0 must be positive");
    const double p = bp.p;
    const double a = bp.alpha();
    const double scale = std::pow(s, -a);
    const double xi = std::abs(x - bp.center) * scale;
    const double base = bp.C + bp.k() * std::pow(xi, p / (p - 1.0));
    return scale * std::pow(base, -(p - 1.0) / (2.0 - p));
}

Field barenblatt_field(const BarenblattParams& bp, const Grid& grid, double t) {
    Field f{std::vector<double>(grid.n_nodes()), t};
    for (std::size_t i = 0; i < grid.n_nodes(); ++i) f.values[i] = barenblatt_eval(bp, grid.node(i), t);
    return f;
}

BoundarySpec barenblatt_boundary(const BarenblattParams& bp, const Grid& grid) {
    const double xl = grid.domain().alpha;
    const double xr = grid.domain().beta;
    BoundarySpec bc;
    bc.left = EndCondition::dirichlet([bp, xl](double t) { return barenblatt_eval(bp, xl, t); });
    bc.right = EndCondition::dirichlet([bp, xr](double t) { return barenblatt_eval(bp, xr, t); });
    bc.description = "dirichlet(barenblatt)/dirichlet(barenblatt)";
    return bc;
}

Trajectory barenblatt_trajectory(const BarenblattParams& bp, const Grid& grid,
                                 std::span<const double> times) {
    bp.validate();
    Trajectory traj(grid, barenblatt_boundary(bp, grid));
    for (double t : times) traj.push_back(barenblatt_field(bp, grid, t));
    return traj;
}

double barenblatt_residual(const BarenblattParams& bp, const Grid& grid, double t, double dt) {
    bp.validate();
    if (!(dt >= 0.0)) throw InvalidInput("barenblatt_residual: need dt >= 0");
    if (dt == 0.0) return 0.0;
    const std::vector<double> times{t, t + dt};
    const Trajectory traj = barenblatt_trajectory(bp, grid, times);
    const double radius = grid.domain().length() / 8.0;
    double worst = 0.0;
    for (const auto& phi : bump_basis(grid, t, t + dt, 9, radius)) {
        worst = std::max(worst, std::abs(weak_residual(traj, phi, WeakEquation{bp.p, 1.0, 0.0}).normalized));
    }
    return worst;
}

DecayFit fit_decay_exponent(std::span<const double> x, std::span<const double> u, double center,
                            double window_lo, double window_hi) {
    if (x.size() != u.size()) throw InvalidInput("fit_decay_exponent: size mismatch");
    if (!(window_lo > 0.0) || !(window_hi > window_lo)) {
        throw InvalidInput("fit_decay_exponent: need 0 < window_lo < window_hi");
    }
    std::vector<double> lx, lu;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = std::abs(x[i] - center);
        if (d < window_lo || d > window_hi) continue;
        if (!(u[i] > 0.0)) {
            throw DomainError("fit_decay_exponent: non-positive value at x = " + std::to_string(x[i]));
        }
        lx.push_back(std::log(d));
        lu.push_back(std::log(u[i]));
    }
    const std::size_t n = lx.size();
    if (n < 8) throw InvalidInput("fit_decay_exponent: window holds fewer than 8 nodes");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += lu[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (lu[i] - my);
        syy += (lu[i] - my) * (lu[i] - my);
    }
    if (sxx == 0.0) throw InvalidInput("fit_decay_exponent: degenerate window");
    DecayFit fit;
    fit.slope = sxy / sxx;
    fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    fit.points = n;
    return fit;
}

DecayFit fit_decay_exponent(const Field& field, const Grid& grid, double center, double window_lo,
                            double window_hi) {
    field.validate(grid);
    return fit_decay_exponent(grid.nodes(), field.values, center, window_lo, window_hi);
}

}  // namespace harnack
