#pragma once

#include <vector>

#include "harnack/types.hpp"

namespace harnack {

/// Non-negative test function phi(x, t) = psi((x - xc) / r) * (1 + s (t - t_a) / (t_b - t_a))
/// with psi(q) = (1 - q^2)^2 on |q| < 1. Compactly supported in space,
/// C^1 and vanishing on the edge of K = [xc - r, xc + r].
struct TestFunction {
    double x_center = 0.0;
    double x_radius = 1.0;
    double t_begin = 0.0;
    double t_end = 1.0;
    double time_slope = 0.5;
    /// Overall multiplier; 0 gives the identically-zero function.
    double scale = 1.0;

    double value(double x, double t) const;
    double dx(double x, double t) const;
    double dt(double x, double t) const;
    bool is_zero() const noexcept { return scale == 0.0; }
};

/// Coefficients of u_t - kappa (|u_x|^{p-2} u_x)_x = reaction * u.
struct WeakEquation {
    double p = 1.5;
    double diffusion = 1.0;
    double reaction = 0.0;
};

struct WeakResidual {
    /// int_K u phi |_{t1}^{t2} + int int [-u phi_t + kappa A(u_x) phi_x - r u phi].
    double raw = 0.0;
    /// raw divided by |K| (t2 - t1); zero when t2 == t1.
    double normalized = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
};

/// Discrete weak form on the trajectory's own grid and levels: trapezoid
/// nodes for u phi, cell midpoints with two-point gradients for the flux,
/// trapezoid rule over the recorded levels in time. The time window snaps
/// outward to recorded levels. Throws InvalidInput when supp phi leaves the grid.
WeakResidual weak_residual(const Trajectory& traj, const TestFunction& phi,
                           const WeakEquation& eq);

/// `count` bumps of radius `radius` with centers spread evenly so that every
/// support stays strictly inside the grid, all on the time window [t1, t2].
std::vector<TestFunction> bump_basis(const Grid& grid, double t1, double t2, int count,
                                     double radius);

}  // namespace harnack
