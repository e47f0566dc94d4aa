#pragma once

#include <optional>
#include <span>
#include <vector>

#include "harnack/types.hpp"

namespace harnack {

/// Source-type self-similar solution of u_t = (|u_x|^{p-2} u_x)_x, 1 < p < 2:
///
///   u(x, t) = s^{-alpha} (C + k |xi|^{p/(p-1)})^{-(p-1)/(2-p)},
///   s = t + t0,  xi = (x - center) s^{-alpha},
///   alpha = 1 / (2 (p - 1)),  k = ((2 - p) / p) alpha^{1/(p-1)}.
///
/// Far from the center u ~ |x|^{-p/(2-p)}. `k_override` replaces the formula
/// value of k (used for negative controls).
struct BarenblattParams {
    double p = 1.5;
    double C = 1.0;
    double t0 = 0.0;
    double center = 0.0;
    std::optional<double> k_override;

    double alpha() const;
    double k() const;
    void validate() const;
};

double barenblatt_eval(const BarenblattParams& bp, double x, double t);

Field barenblatt_field(const BarenblattParams& bp, const Grid& grid, double t);

/// Dirichlet data equal to the exact solution at both ends of `grid`.
BoundarySpec barenblatt_boundary(const BarenblattParams& bp, const Grid& grid);

/// Exact solution sampled at the given increasing times.
Trajectory barenblatt_trajectory(const BarenblattParams& bp, const Grid& grid,
                                 std::span<const double> times);

/// Largest normalized weak-form residual of the exact solution on the slab
/// [t, t + dt] over a basis of bump test functions. Zero when dt == 0.
double barenblatt_residual(const BarenblattParams& bp, const Grid& grid, double t, double dt);

struct DecayFit {
    double slope = 0.0;
    double r2 = 0.0;
    std::size_t points = 0;
};

/// Least-squares slope of log u against log |x - center| over the nodes with
/// |x - center| in [window_lo, window_hi]. Needs >= 8 nodes, all with u > 0
/// (DomainError otherwise).
DecayFit fit_decay_exponent(std::span<const double> x, std::span<const double> u, double center,
                            double window_lo, double window_hi);

DecayFit fit_decay_exponent(const Field& field, const Grid& grid, double center,
                            double window_lo, double window_hi);

}  // namespace harnack
