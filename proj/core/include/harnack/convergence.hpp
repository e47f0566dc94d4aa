#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "harnack/types.hpp"

namespace harnack {

struct ConvergenceOptions {
    double p = 1.5;
    int levels = 4;
    Interval domain{-10.0, 10.0};
    double C = 1.0;
    double t0 = 1.0;
    double duration = 1.0;
    double eps_reg = 1e-8;
    /// Space ladder: n_cells = space_n0 * 2^k with dt = space_dt0 * 4^{-k}
    /// so that both error sources shrink like h^2.
    std::size_t space_n0 = 64;
    double space_dt0 = 0.05;
    /// Time ladder on a fixed fine mesh: dt = time_dt0 * 2^{-k}.
    std::size_t time_n = 2048;
    double time_dt0 = 0.04;
};

struct LadderLevel {
    std::size_t n_cells = 0;
    double dt = 0.0;
    double error = 0.0;
    std::optional<double> order;
};

struct ConvergenceResult {
    std::vector<LadderLevel> space;
    std::vector<LadderLevel> time;
    double space_order = 0.0;
    double time_order = 0.0;
    bool monotone = false;
    bool passed = false;
};

inline constexpr double kRequiredSpaceOrder = 1.6;
inline constexpr double kRequiredTimeOrder = 0.8;

/// Max-norm error against the Barenblatt solution over every recorded level
/// of a solve on [t0, t0 + duration] (exact Dirichlet data at both ends).
double barenblatt_linf_error(const ConvergenceOptions& opt, std::size_t n_cells, double dt,
                             double eps_reg);

/// Both ladders; passes iff the terminal observed orders reach
/// kRequiredTimeOrder and kRequiredSpaceOrder. levels < 2 throws InvalidInput.
ConvergenceResult run_convergence(const ConvergenceOptions& opt);

struct EpsSweepPoint {
    double eps = 0.0;
    double error = 0.0;
};

struct EpsSweepResult {
    std::vector<EpsSweepPoint> points;
    /// Relative change of the error between eps = 1e-6 and eps = 1e-8.
    double relative_change = 0.0;
    bool passed = false;
};

/// Regularization study at eps in {1e-4, 1e-6, 1e-8} on the fine time mesh;
/// passes iff relative_change < 1%.
EpsSweepResult run_eps_sweep(const ConvergenceOptions& opt, std::size_t n_cells, double dt);

}  // namespace harnack
