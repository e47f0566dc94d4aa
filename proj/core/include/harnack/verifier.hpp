#pragma once

#include <span>
#include <vector>

#include "harnack/constants.hpp"
#include "harnack/cutoff.hpp"
#include "harnack/report.hpp"
#include "harnack/types.hpp"
#include "harnack/weak_form.hpp"

namespace harnack {

/// 0.1 (h + dt_max) max|u|: the default weak-form tolerance for a trajectory.
double default_weak_tolerance(const Trajectory& traj);

/// Minimum over phi of the normalized discrete weak form; a super-solution
/// keeps it >= -tol for every non-negative phi.
CheckReport check_weak_supersolution(const Trajectory& traj, std::span<const TestFunction> tests,
                                     double p, double tol);

/// Constant in the energy estimate obtained by following Young's inequality
/// through the test-function argument with G(u) zeta^p:
/// gamma(p) = (2/(p-1)) max(2^{p-1}, p/(2-p)).
double energy_gamma(double p);

struct EnergyInputs {
    double p = 1.5;
    double a = 0.5;
    double omega = 1.0;
    double H = 0.5;
    double mu_minus = 0.0;
};

/// The four integrals of the energy estimate over Q(y) = B_rho(y) x (t0, t0+T]
/// restricted to A = {u < mu_- + (1-a) H omega}; midpoint rule in space,
/// trapezoid in time. Passes iff LHS <= gamma RHS. Details carry every
/// integral and the empirical gamma* = LHS / RHS.
CheckReport check_energy_estimate(const Trajectory& traj, const Cutoff& cutoff,
                                  const EnergyInputs& in, double gamma);

/// dt-weighted count of levels t in (0, T/2] at which min over B_{rho/2}(y)
/// drops below `threshold`.
double measure_bad_times(const Trajectory& traj, double y, double rho, double threshold, double T);

/// Bad-time-set bound: with L = min{M/2, (T/rho^p)^{1/(2-p)}} and s_o from the
/// chain, |{t : min_{B_{rho/2}} u < L/2^{s_o}}| <= nu T/2. Throws
/// HypothesisFailed unless u(y, t) > M at every recorded t in (0, T/2].
CheckReport check_log_lemma(const Trajectory& traj, const Params& params,
                            const ConstantChain& chain, double rho);

struct DeGiorgiOptions {
    std::size_t steps = 2000;
    int bisection_iters = 20;
};

/// Persistence of a lower bound: u0 = M on B_{2rho}(y), zero elsewhere on
/// B_{8rho}(y) with homogeneous Dirichlet data. Passes iff u >= M/2 on
/// B_rho(y) x (0, theta (2rho)^p], theta = delta M^{2-p}. Details carry
/// delta_max from bisection on delta in (0, 1].
CheckReport check_degiorgi(const Params& params, double M, double rho, double delta,
                           const DeGiorgiOptions& options = {});

/// Sidewise lower bound on B_rho(x_bar) x [T/4, T/2], x_bar = y +- 2 rho:
/// log inf u >= log sigma_bar + log M + (p/(2-p)) (log rho_bar - log rho).
/// Throws HypothesisFailed if u(y, .) <= M somewhere on (0, T/2] and
/// InvalidInput when rho < 4 rho_bar or B_{4rho}(y) leaves the grid.
CheckReport check_harnack(const Trajectory& traj, const Params& params,
                          const ConstantChain& chain, double rho);

/// Default tau window of the transformed checks: t <= (T/2)(1 - e^{-2}).
inline constexpr double kTransformedTauMax = 2.0;

/// Pushes a trajectory through the change of variables (levels with
/// 0 <= t < T/2 and tau <= tau_max) onto a z-grid and tau-levels.
Trajectory to_transformed_trajectory(const Trajectory& traj, const Params& params,
                                     double tau_max = kTransformedTauMax);

/// Weak residual of v_tau - kappa (|v_z|^{p-2} v_z)_z = v/(2-p) for the
/// transformed trajectory, relative to max |v|; passes iff <= tol.
CheckReport check_transformed_equation(const Trajectory& traj, const Params& params,
                                       const ConstantChain& chain, double tol,
                                       double tau_max = kTransformedTauMax);

/// Same residual along a refinement ladder (coarse to fine): passes iff the
/// finest residual is <= tol and every successive ratio is >= min_ratio.
CheckReport check_transformed_refinement(std::span<const Trajectory> ladder, const Params& params,
                                         const ConstantChain& chain, double tol,
                                         double min_ratio = 1.5,
                                         double tau_max = kTransformedTauMax);

/// v(0, tau) >= e^{tau/(2-p)} at every sampled tau > 0 (log-space margin).
CheckReport check_hypothesis_transport(const Trajectory& traj, const Params& params);

}  // namespace harnack
