#pragma once

#include <vector>

#include "harnack/types.hpp"

namespace harnack {

struct StepStats {
    int newton_iters = 0;
    double final_residual = 0.0;
    double energy_decrease = 0.0;
    double dt = 0.0;
};

struct StepResult {
    Field field;
    StepStats stats;
};

/// Proximal functional minimized by one implicit step:
///
///   J(u) = sum_i w_i (u_i - prev_i)^2 / (2 dt)
///        + sum_cells (1/p) ((du/h)^2 + eps^2)^{p/2} h
///        - (reaction / 2) sum_i w_i u_i^2
///
/// with trapezoid weights w_i. Exposed for the descent tests.
double proximal_energy(const Grid& grid, std::span<const double> u,
                       std::span<const double> prev, double dt, double p,
                       double eps, double reaction);

/// One implicit Euler step of u_t = (|u_x|^{p-2} u_x)_x + reaction * u.
///
/// Minimizes the proximal functional by damped Newton on its gradient. The
/// Hessian is symmetric tridiagonal; Dirichlet ends and interior pins are
/// equality constraints (row replacement). Convergence is declared when every
/// row of the discrete Euler-Lagrange system is below `params.newton_tol`
/// relative to the magnitude of its own terms or
/// implies a Newton correction below that fraction of u_i. The step is convex only for
/// reaction * dt < 1. Throws StepFailure on non-convergence.
StepResult step_implicit(const Grid& grid, const Field& prev, double dt,
                         const Params& params, const BoundarySpec& bc,
                         double reaction = 0.0);

struct SolveOptions {
    double reaction = 0.0;
    int max_halvings = 10;
    /// Keep every k-th level (the initial and final levels are always kept).
    std::size_t record_stride = 1;
};

struct Solution {
    Trajectory trajectory;
    std::vector<StepStats> stats;
};

/// Marches u0 from u0.time to t_end with step params.dt (the last step is
/// shortened to land on t_end). A failing step is retried as two half steps,
/// recursively up to `max_halvings` times; past that the failure propagates
/// with the failing time level.
Solution solve(const Params& params, const Grid& grid, const Field& u0,
               const BoundarySpec& bc, double t_end, const SolveOptions& options = {});

/// Symmetry of the prototype equation: v(x, t) = A u(B x, A^{p-2} B^p t).
///
/// The output lives on the grid x / B; its level n sits at time
/// t_n / (A^{p-2} B^p), i.e. the time argument of u is A^{p-2} B^p times the
/// time of v. Boundary values are transported the same way.
Trajectory scaling_transform(const Trajectory& traj, double A, double B, double p);

/// Transports a boundary spec through the same symmetry (pins keep their node).
BoundarySpec scale_boundary(const BoundarySpec& bc, double A, double B, double p);

}  // namespace harnack
