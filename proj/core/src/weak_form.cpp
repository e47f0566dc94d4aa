#include "harnack/weak_form.hpp"

#include <algorithm>
#include <cmath>

#include "harnack/errors.hpp"
#include "harnack/flux.hpp"

namespace harnack {

namespace {

double time_factor(const TestFunction& f, double t) {
    const double span = f.t_end - f.t_begin;
    if (span <= 0.0) return 1.0;
    return 1.0 + f.time_slope * (t - f.t_begin) / span;
}

}  // namespace

double TestFunction::value(double x, double t) const {
    const double q = (x - x_center) / x_radius;
    if (std::abs(q) >= 1.0) return 0.0;
    const double b = 1.0 - q * q;
    return scale * b * b * time_factor(*this, t);
}

double TestFunction::dx(double x, double t) const {
    const double q = (x - x_center) / x_radius;
    if (std::abs(q) >= 1.0) return 0.0;
    return scale * (-4.0 * q * (1.0 - q * q) / x_radius) * time_factor(*this, t);
}

double TestFunction::dt(double x, double /*t*/) const {
    const double q = (x - x_center) / x_radius;
    const double span = t_end - t_begin;
    if (std::abs(q) >= 1.0 || span <= 0.0) return 0.0;
    const double b = 1.0 - q * q;
    return scale * b * b * time_slope / span;
}

WeakResidual weak_residual(const Trajectory& traj, const TestFunction& phi,
                           const WeakEquation& eq) {
    const Grid& grid = traj.grid();
    if (!(phi.x_radius > 0.0)) throw InvalidInput("test function radius must be positive");
    if (phi.t_end < phi.t_begin) throw InvalidInput("test function time window is reversed");
    const auto [i_lo, i_hi] = grid.covering(phi.x_center - phi.x_radius, phi.x_center + phi.x_radius);

    const auto times = traj.times();
    // Outward snap: last level <= t_begin, first level >= t_end.
    auto lo_it = std::upper_bound(times.begin(), times.end(), phi.t_begin + 1e-12 * (1.0 + std::abs(phi.t_begin)));
    std::size_t n1 = lo_it == times.begin() ? 0 : static_cast<std::size_t>(lo_it - times.begin()) - 1;
    auto hi_it = std::lower_bound(times.begin(), times.end(), phi.t_end - 1e-12 * (1.0 + std::abs(phi.t_end)));
    std::size_t n2 = hi_it == times.end() ? times.size() - 1 : static_cast<std::size_t>(hi_it - times.begin());
    n2 = std::max(n1, n2);

    WeakResidual out;
    out.t1 = times[n1];
    out.t2 = times[n2];
    if (phi.is_zero()) return out;

    const double h = grid.h();
    const auto w = grid.mass_weights();
    auto mass = [&](std::size_t n) {
        const auto& u = traj.field(n).values;
        const double t = times[n];
        double s = 0.0;
        for (std::size_t i = i_lo; i <= i_hi; ++i) s += w[i] * u[i] * phi.value(grid.node(i), t);
        return s;
    };
    // Integrand in time of -u phi_t + kappa A(u_x) phi_x - r u phi.
    auto slab_density = [&](std::size_t n) {
        const auto& u = traj.field(n).values;
        const double t = times[n];
        double s = 0.0;
        for (std::size_t i = i_lo; i <= i_hi; ++i) {
            const double x = grid.node(i);
            s -= w[i] * u[i] * (phi.dt(x, t) + eq.reaction * phi.value(x, t));
        }
        for (std::size_t c = i_lo; c < i_hi; ++c) {
            const double g = (u[c + 1] - u[c]) / h;
            s += eq.diffusion * prototype_flux(g, eq.p) * phi.dx(grid.midpoint(c), t) * h;
        }
        return s;
    };

    double r = mass(n2) - mass(n1);
    if (n2 > n1) {
        double prev = slab_density(n1);
        for (std::size_t n = n1 + 1; n <= n2; ++n) {
            const double cur = slab_density(n);
            r += 0.5 * (times[n] - times[n - 1]) * (prev + cur);
            prev = cur;
        }
    }
    out.raw = r;
    const double measure = 2.0 * phi.x_radius * (out.t2 - out.t1);
    out.normalized = measure > 0.0 ? r / measure : 0.0;
    return out;
}

std::vector<TestFunction> bump_basis(const Grid& grid, double t1, double t2, int count,
                                     double radius) {
    if (count <= 0) throw InvalidInput("bump_basis: count must be positive");
    const Interval d = grid.domain();
    const double lo = d.alpha + radius + grid.h();
    const double hi = d.beta - radius - grid.h();
    if (!(radius > 0.0) || lo > hi) throw InvalidInput("bump_basis: radius too large for the grid");
    std::vector<TestFunction> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double c = count == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * k / (count - 1);
        out.push_back(TestFunction{c, radius, t1, t2, 0.5, 1.0});
    }
    return out;
}

}  // namespace harnack
