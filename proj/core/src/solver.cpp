#include "harnack/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "harnack/errors.hpp"
#include "harnack/tridiagonal.hpp"

namespace harnack {

namespace {

// Floor for g^2 + eps^2 so that the Newton curvature stays finite when
// eps = 0 and a cell gradient vanishes exactly.
constexpr double kMinSquare = 1e-200;

struct CellFlux {
    double flux;
    double slope;  // d flux / d g
};

CellFlux regularized_flux(double g, double eps, double p) {
    const double q = std::max(g * g + eps * eps, kMinSquare);
    const double m = std::pow(q, 0.5 * (p - 2.0));
    const double num = std::max((p - 1.0) * g * g + eps * eps, (p - 1.0) * kMinSquare);
    return {m * g, m * num / q};
}

double cell_energy(double g, double eps, double p) {
    return std::pow(g * g + eps * eps, 0.5 * p) / p;
}

/// Per-node constraint flags and values at the new time level.
struct Constraints {
    std::vector<char> fixed;
    std::vector<double> value;
};

Constraints constraints_at(const Grid& grid, const BoundarySpec& bc, double t) {
    const std::size_t n = grid.n_nodes();
    Constraints c{std::vector<char>(n, 0), std::vector<double>(n, 0.0)};
    auto fix = [&](std::size_t i, double v) {
        if (!std::isfinite(v)) throw InvalidInput("boundary value is not finite");
        c.fixed[i] = 1;
        c.value[i] = v;
    };
    if (bc.left.kind == EndCondition::Kind::dirichlet) fix(0, bc.left.value(t));
    if (bc.right.kind == EndCondition::Kind::dirichlet) fix(n - 1, bc.right.value(t));
    for (const auto& pin : bc.interior_pins) {
        if (pin.node >= n) throw InvalidInput("interior pin outside the grid");
        fix(pin.node, pin.value(t));
    }
    return c;
}

class NewtonStep {
public:
    NewtonStep(const Grid& grid, std::span<const double> prev, double dt, double p, double eps,
               double reaction)
        : grid_(grid), prev_(prev), dt_(dt), p_(p), eps_(eps), r_(reaction),
          w_(grid.mass_weights()), n_(grid.n_nodes()) {
        flux_.resize(n_ - 1);
        slope_.resize(n_ - 1);
        grad_.resize(n_);
        scale_.resize(n_);
    }

    /// Fills cell fluxes, the gradient of J and per-row magnitudes.
    void evaluate(std::span<const double> u) {
        const double h = grid_.h();
        for (std::size_t c = 0; c + 1 < n_; ++c) {
            const auto cf = regularized_flux((u[c + 1] - u[c]) / h, eps_, p_);
            flux_[c] = cf.flux;
            slope_[c] = cf.slope;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            const double left = i > 0 ? flux_[i - 1] : 0.0;
            const double right = i + 1 < n_ ? flux_[i] : 0.0;
            const double tm = w_[i] * (u[i] - prev_[i]) / dt_;
            const double rm = r_ * w_[i] * u[i];
            grad_[i] = tm + left - right - rm;
            // Either the row balances relative to its own terms, or the
            // Newton correction it implies is small relative to u_i.
            double curv = w_[i] * (1.0 / dt_ - r_);
            if (i > 0) curv += slope_[i - 1] / h;
            if (i + 1 < n_) curv += slope_[i] / h;
            scale_[i] = std::max(std::abs(tm) + std::abs(left) + std::abs(right) + std::abs(rm),
                                 curv * std::abs(u[i]));
        }
    }

    double relative_residual(const std::vector<char>& fixed) const {
        double worst = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (fixed[i]) continue;
            if (grad_[i] == 0.0) continue;
            worst = std::max(worst, std::abs(grad_[i]) / scale_[i]);
        }
        return worst;
    }

    /// Newton direction with fixed rows replaced by the identity.
    std::vector<double> direction(const std::vector<char>& fixed) const {
        const double h = grid_.h();
        std::vector<double> lower(n_, 0.0), diag(n_, 0.0), upper(n_, 0.0), rhs(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            if (fixed[i]) {
                diag[i] = 1.0;
                continue;
            }
            double d = w_[i] * (1.0 / dt_ - r_);
            if (i > 0) {
                d += slope_[i - 1] / h;
                if (!fixed[i - 1]) lower[i] = -slope_[i - 1] / h;
            }
            if (i + 1 < n_) {
                d += slope_[i] / h;
                if (!fixed[i + 1]) upper[i] = -slope_[i] / h;
            }
            diag[i] = d;
            rhs[i] = -grad_[i];
        }
        solve_tridiagonal(lower, diag, upper, rhs);
        return rhs;
    }

    double directional_derivative(std::span<const double> dir) const {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i) s += grad_[i] * dir[i];
        return s;
    }

    /// J and the sum of magnitudes of its terms (for a round-off slack).
    std::pair<double, double> energy(std::span<const double> u) const {
        const double h = grid_.h();
        double j = 0.0;
        double mag = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            const double d = u[i] - prev_[i];
            const double a = w_[i] * d * d / (2.0 * dt_);
            const double b = 0.5 * r_ * w_[i] * u[i] * u[i];
            j += a - b;
            mag += a + std::abs(b);
        }
        for (std::size_t c = 0; c + 1 < n_; ++c) {
            const double e = cell_energy((u[c + 1] - u[c]) / h, eps_, p_) * h;
            j += e;
            mag += e;
        }
        return {j, mag};
    }

private:
    const Grid& grid_;
    std::span<const double> prev_;
    double dt_, p_, eps_, r_;
    std::vector<double> w_;
    std::size_t n_;
    std::vector<double> flux_, slope_, grad_, scale_;
};

}  // namespace

double proximal_energy(const Grid& grid, std::span<const double> u, std::span<const double> prev,
                       double dt, double p, double eps, double reaction) {
    if (u.size() != grid.n_nodes() || prev.size() != grid.n_nodes()) {
        throw InvalidInput("proximal_energy: size mismatch");
    }
    NewtonStep ns(grid, prev, dt, p, eps, reaction);
    return ns.energy(u).first;
}

StepResult step_implicit(const Grid& grid, const Field& prev, double dt, const Params& params,
                         const BoundarySpec& bc, double reaction) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidInput("step_implicit: need dt > 0");
    if (!std::isfinite(reaction)) throw InvalidInput("step_implicit: reaction not finite");
    if (reaction * dt >= 1.0) {
        throw InvalidInput("step_implicit: reaction * dt >= 1 makes the step non-convex");
    }
    prev.validate(grid);

    const double t_new = prev.time + dt;
    const Constraints cons = constraints_at(grid, bc, t_new);
    std::vector<double> u = prev.values;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (cons.fixed[i]) u[i] = cons.value[i];
    }

    NewtonStep ns(grid, prev.values, dt, params.p, params.eps_reg, reaction);
    ns.evaluate(u);
    auto [j, mag] = ns.energy(u);
    const double j_start = j;
    double res = ns.relative_residual(cons.fixed);

    StepStats stats;
    stats.dt = dt;
    std::vector<double> trial(u.size());
    int it = 0;
    while (res > params.newton_tol) {
        if (it >= params.newton_max_iter) {
            throw StepFailure("Newton did not converge: residual " + std::to_string(res), t_new,
                              res);
        }
        ++it;
        const auto dir = ns.direction(cons.fixed);
        const double slope = ns.directional_derivative(dir);
        double lambda = 1.0;
        bool accepted = false;
        for (int k = 0; k < 60; ++k) {
            for (std::size_t i = 0; i < u.size(); ++i) trial[i] = u[i] + lambda * dir[i];
            const auto [jt, magt] = ns.energy(trial);
            const double slack = 1e-14 * std::max(mag, magt);
            const bool armijo = jt <= j + 1e-4 * lambda * slope;
            bool flat = false;
            if (!armijo && jt <= j + slack) {
                // J is flat to round-off; fall back to the residual as merit.
                NewtonStep probe = ns;
                probe.evaluate(trial);
                flat = probe.relative_residual(cons.fixed) < res;
            }
            if (armijo || flat) {
                u.swap(trial);
                j = jt;
                mag = magt;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!accepted) {
            throw StepFailure("line search stalled: residual " + std::to_string(res), t_new, res);
        }
        ns.evaluate(u);
        res = ns.relative_residual(cons.fixed);
    }
    stats.newton_iters = it;
    stats.final_residual = res;
    stats.energy_decrease = j_start - j;
    return {Field{std::move(u), t_new}, stats};
}

namespace {

void advance(const Grid& grid, const Field& prev, double dt, const Params& params,
             const BoundarySpec& bc, const SolveOptions& opt, int depth, Field& out,
             std::vector<StepStats>& stats) {
    try {
        auto r = step_implicit(grid, prev, dt, params, bc, opt.reaction);
        out = std::move(r.field);
        stats.push_back(r.stats);
    } catch (const StepFailure& f) {
        if (depth >= opt.max_halvings) throw;
        Field mid;
        advance(grid, prev, 0.5 * dt, params, bc, opt, depth + 1, mid, stats);
        advance(grid, mid, 0.5 * dt, params, bc, opt, depth + 1, out, stats);
        out.time = prev.time + dt;
    }
}

}  // namespace

Solution solve(const Params& params, const Grid& grid, const Field& u0, const BoundarySpec& bc,
               double t_end, const SolveOptions& options) {
    u0.validate(grid);
    if (!(t_end > u0.time)) throw InvalidInput("solve: t_end must exceed the initial time");
    if (options.record_stride == 0) throw InvalidInput("solve: record_stride must be positive");

    Solution sol{Trajectory(grid, bc), {}};
    sol.trajectory.push_back(u0);
    Field cur = u0;
    const double dt = params.dt;
    const auto n_steps = static_cast<std::size_t>(std::ceil((t_end - u0.time) / dt - 1e-9));
    for (std::size_t n = 1; n <= n_steps; ++n) {
        const double target = n == n_steps ? t_end : u0.time + static_cast<double>(n) * dt;
        const double step = target - cur.time;
        Field next;
        try {
            advance(grid, cur, step, params, bc, options, 0, next, sol.stats);
        } catch (const StepFailure& f) {
            throw StepFailure("step to t = " + std::to_string(target) + " failed: " + f.what(),
                              target, f.residual());
        }
        next.time = target;
        cur = std::move(next);
        if (n % options.record_stride == 0 || n == n_steps) sol.trajectory.push_back(cur);
    }
    return sol;
}

BoundarySpec scale_boundary(const BoundarySpec& bc, double A, double B, double p) {
    const double time_factor = std::pow(A, p - 2.0) * std::pow(B, p);
    auto scale_end = [&](const EndCondition& e) {
        if (e.kind == EndCondition::Kind::zero_flux) return e;
        auto g = e.value;
        return EndCondition::dirichlet([g, A, time_factor](double t) { return A * g(time_factor * t); });
    };
    BoundarySpec out;
    out.left = scale_end(bc.left);
    out.right = scale_end(bc.right);
    for (const auto& pin : bc.interior_pins) {
        auto g = pin.value;
        out.interior_pins.push_back(
            {pin.node, [g, A, time_factor](double t) { return A * g(time_factor * t); }});
    }
    out.description = bc.description + " (scaled)";
    return out;
}

Trajectory scaling_transform(const Trajectory& traj, double A, double B, double p) {
    if (!(A > 0.0) || !(B > 0.0)) throw InvalidInput("scaling_transform: need A, B > 0");
    const double time_factor = std::pow(A, p - 2.0) * std::pow(B, p);
    const Interval d = traj.grid().domain();
    Grid grid(Interval{d.alpha / B, d.beta / B}, traj.grid().n_cells());
    Trajectory out(grid, scale_boundary(traj.bc_record(), A, B, p));
    for (const auto& f : traj.fields()) {
        Field g{f.values, f.time / time_factor};
        for (auto& v : g.values) v *= A;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace harnack
