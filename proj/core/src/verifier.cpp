#include "harnack/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "harnack/errors.hpp"
#include "harnack/exact.hpp"
#include "harnack/flux.hpp"
#include "harnack/solver.hpp"

namespace harnack {

namespace {

constexpr double kLogTolerance = 1e-10;
constexpr double kInf = std::numeric_limits<double>::infinity();

/// Linear interpolation of a field at x.
double value_at(const Grid& grid, const Field& f, double x) {
    const double s = (x - grid.domain().alpha) / grid.h();
    if (s <= 0.0) return f.values.front();
    const auto i = static_cast<std::size_t>(std::floor(s));
    if (i >= grid.n_cells()) return f.values.back();
    const double w = s - static_cast<double>(i);
    if (w == 0.0) return f.values[i];
    return (1.0 - w) * f.values[i] + w * f.values[i + 1];
}

double ball_min(const Grid& grid, const Field& f, double center, double radius) {
    const auto [lo, hi] = grid.covering(center - radius, center + radius);
    return *std::min_element(f.values.begin() + static_cast<std::ptrdiff_t>(lo),
                             f.values.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
}

bool in_half_window(double t, double T) { return t > 0.0 && t <= 0.5 * T * (1.0 + 1e-12); }

/// u(y, t) > M for every recorded level in (0, T/2]; returns the smallest
/// value seen there.
double require_segment_hypothesis(const Trajectory& traj, double y, double M, double T,
                                  const char* who) {
    double lowest = kInf;
    std::size_t count = 0;
    for (const auto& f : traj.fields()) {
        if (!in_half_window(f.time, T)) continue;
        ++count;
        lowest = std::min(lowest, value_at(traj.grid(), f, y));
    }
    if (count == 0) throw InvalidInput(std::string(who) + ": no recorded levels in (0, T/2]");
    if (!(lowest > M)) {
        throw HypothesisFailed(std::string(who) + ": u(y, t) > M fails on (0, T/2]; min " +
                               std::to_string(lowest) + " vs M = " + std::to_string(M));
    }
    return lowest;
}

/// Weight of level n in a left-rectangle count: t_n - t_{n-1}.
double level_weight(const std::vector<double>& times, std::size_t n) {
    if (n == 0) return times.size() > 1 ? times[1] - times[0] : 0.0;
    return times[n] - times[n - 1];
}

double power_law_factor(double rho_bar, double rho, double p) {
    return std::pow(rho_bar / rho, p / (2.0 - p));
}

}  // namespace

double default_weak_tolerance(const Trajectory& traj) {
    double dt_max = 0.0;
    const auto t = traj.times();
    for (std::size_t n = 1; n < t.size(); ++n) dt_max = std::max(dt_max, t[n] - t[n - 1]);
    double scale = 0.0;
    for (const auto& f : traj.fields()) {
        for (double v : f.values) scale = std::max(scale, std::abs(v));
    }
    return 0.1 * (traj.grid().h() + dt_max) * scale;
}

CheckReport check_weak_supersolution(const Trajectory& traj, std::span<const TestFunction> tests,
                                     double p, double tol) {
    if (tests.empty()) throw InvalidInput("check_weak_supersolution: no test functions");
    double worst = kInf;
    std::size_t worst_index = 0;
    for (std::size_t k = 0; k < tests.size(); ++k) {
        const double r = weak_residual(traj, tests[k], WeakEquation{p, 1.0, 0.0}).normalized;
        if (r < worst) {
            worst = r;
            worst_index = k;
        }
    }
    CheckReport rep = CheckReport::lower_bound("weak_supersolution", worst, 0.0, tol);
    rep.details["min_residual"] = worst;
    rep.details["worst_test"] = static_cast<double>(worst_index);
    rep.details["tests"] = static_cast<double>(tests.size());
    return rep;
}

double energy_gamma(double p) {
    if (!(p > 1.0 && p < 2.0)) throw InvalidInput("energy_gamma: need 1 < p < 2");
    return (2.0 / (p - 1.0)) * std::max(std::pow(2.0, p - 1.0), p / (2.0 - p));
}

CheckReport check_energy_estimate(const Trajectory& traj, const Cutoff& cutoff,
                                  const EnergyInputs& in, double gamma) {
    if (!(in.omega * in.H > 0.0)) throw InvalidInput("check_energy_estimate: need omega H > 0");
    if (!(in.a > 0.0 && in.a < 1.0)) throw InvalidInput("check_energy_estimate: need 0 < a < 1");
    if (!(in.H > 0.0 && in.H <= 1.0)) throw InvalidInput("check_energy_estimate: need 0 < H <= 1");
    if (!(in.p > 1.0 && in.p < 2.0)) throw InvalidInput("check_energy_estimate: need 1 < p < 2");

    const double p = in.p;
    const Grid& grid = traj.grid();
    const double h = grid.h();
    const auto [lo, hi] = grid.covering(cutoff.y() - cutoff.rho(), cutoff.y() + cutoff.rho());
    const double oh = in.omega * in.H;
    const double level = in.mu_minus + (1.0 - in.a) * oh;
    const double shift = in.a * oh - in.mu_minus;  // w = u + shift
    const auto times = traj.times();
    const double t_begin = cutoff.t0();
    const double t_end = cutoff.t0() + cutoff.T();
    const double slack = 1e-12 * (1.0 + std::abs(t_end));
    if (times.front() > t_begin + slack || times.back() < t_end - slack) {
        throw InvalidInput("check_energy_estimate: trajectory does not cover [t0, t0 + T]");
    }
    std::size_t n_first = 0;
    while (n_first + 1 < times.size() && times[n_first + 1] <= t_begin + slack) ++n_first;
    std::size_t n_last = n_first;
    while (n_last + 1 < times.size() && times[n_last] < t_end - slack) ++n_last;

    struct Sums {
        double initial = 0.0;
        double grad = 0.0;
        double cut_x = 0.0;
        double cut_t = 0.0;
        double cells = 0.0;
    };
    auto level_sums = [&](std::size_t n) {
        Sums s;
        const auto& u = traj.field(n).values;
        const double t = times[n];
        const double z2 = cutoff.zeta2(t);
        const double dz2 = std::abs(cutoff.dzeta2(t));
        for (std::size_t c = lo; c < hi; ++c) {
            const double um = 0.5 * (u[c] + u[c + 1]);
            if (!(um < level)) continue;
            const double w = um + shift;
            if (!(w > 0.0)) throw InvalidInput("check_energy_estimate: mu_minus exceeds u");
            const double xm = grid.midpoint(c);
            const double z1 = cutoff.zeta1(xm);
            const double z = z1 * z2;
            const double g = (u[c + 1] - u[c]) / h;
            s.cells += 1.0;
            s.initial += (std::pow(w, 2.0 - p) / (2.0 - p) - um / std::pow(oh, p - 1.0)) *
                         std::pow(z, p) * h;
            s.grad += std::pow(std::abs(g) / w, p) * std::pow(z, p) * h;
            s.cut_x += std::pow(std::abs(cutoff.dzeta1(xm)) * z2, p) * h;
            s.cut_t += std::pow(w, 2.0 - p) * std::pow(z, p - 1.0) * z1 * dz2 * h;
        }
        return s;
    };

    const Sums first = level_sums(n_first);
    double grad = 0.0, cut_x = 0.0, cut_t = 0.0, cells = first.cells;
    Sums prev = first;
    for (std::size_t n = n_first + 1; n <= n_last; ++n) {
        const Sums cur = level_sums(n);
        const double half_dt = 0.5 * (times[n] - times[n - 1]);
        grad += half_dt * (prev.grad + cur.grad);
        cut_x += half_dt * (prev.cut_x + cur.cut_x);
        cut_t += half_dt * (prev.cut_t + cur.cut_t);
        cells += cur.cells;
        prev = cur;
    }

    const double lhs = first.initial + grad;
    const double rhs = cut_x + cut_t;
    const double tol = 1e-12 * std::max({std::abs(lhs), gamma * rhs, 1e-300});
    CheckReport rep = CheckReport::upper_bound("energy", lhs, gamma * rhs, tol);
    rep.details["initial_term"] = first.initial;
    rep.details["gradient_term"] = grad;
    rep.details["cutoff_x_term"] = cut_x;
    rep.details["cutoff_t_term"] = cut_t;
    rep.details["gamma"] = gamma;
    rep.details["gamma_star"] = rhs > 0.0 ? lhs / rhs : 0.0;
    rep.details["cells_in_A"] = cells;
    rep.details["level"] = level;
    return rep;
}

double measure_bad_times(const Trajectory& traj, double y, double rho, double threshold, double T) {
    if (!(threshold > 0.0)) throw InvalidInput("measure_bad_times: need threshold > 0");
    const auto times = traj.times();
    double measure = 0.0;
    for (std::size_t n = 0; n < times.size(); ++n) {
        if (!in_half_window(times[n], T)) continue;
        if (ball_min(traj.grid(), traj.field(n), y, 0.5 * rho) < threshold) {
            // The first level inside the window only counts the part after t = 0.
            measure += std::min(level_weight(times, n), times[n]);
        }
    }
    return measure;
}

CheckReport check_log_lemma(const Trajectory& traj, const Params& params,
                            const ConstantChain& chain, double rho) {
    if (!(rho > 0.0)) throw InvalidInput("check_log_lemma: need rho > 0");
    const double p = params.p;
    const double M = params.M;
    const double T = params.T;
    require_segment_hypothesis(traj, params.y, M, T, "check_log_lemma");

    const double L = std::min(0.5 * M, std::pow(T / std::pow(rho, p), 1.0 / (2.0 - p)));
    const double threshold = L / std::pow(2.0, chain.s_o);
    const double measure = measure_bad_times(traj, params.y, rho, threshold, T);
    const double allowed = chain.nu * 0.5 * T;
    CheckReport rep = CheckReport::upper_bound("log_lemma", measure, allowed, 1e-12 * T);
    rep.details["measure"] = measure;
    rep.details["measure_fraction"] = measure / (0.5 * T);
    rep.details["threshold"] = threshold;
    rep.details["L"] = L;
    rep.details["s_o"] = chain.s_o;
    rep.details["nu"] = chain.nu;

    const double rb = chain.rho_bar.value_or(rho_bar(M, T, p));
    rep.details["rho_over_rhobar"] = rho / rb;
    if (rho > rb) {
        const double t33 = M / std::pow(2.0, chain.s_o + 1) * power_law_factor(rb, rho, p);
        rep.details["decay_threshold"] = t33;
        rep.details["decay_threshold_measure"] = measure_bad_times(traj, params.y, rho, t33, T);
    }

    // Lower bound on B_{c rho_bar / 2}(x_bar), |x_bar - y| = 2 c rho_bar, at good times.
    const double bound = M / std::pow(2.0, chain.s_o + 1) *
                         std::pow(2.0 / (5.0 * chain.c), p / (2.0 - p));
    rep.details["far_ball_bound"] = bound;
    const Grid& grid = traj.grid();
    const double x_bar = params.y + 2.0 * chain.c * rb;
    const double r_far = 0.5 * chain.c * rb;
    if (x_bar + r_far < grid.domain().beta && x_bar - r_far > grid.domain().alpha) {
        double far_min = kInf;
        for (const auto& f : traj.fields()) {
            if (!in_half_window(f.time, T)) continue;
            if (ball_min(grid, f, params.y, 0.5 * rho) < threshold) continue;
            far_min = std::min(far_min, ball_min(grid, f, x_bar, r_far));
        }
        rep.details["far_ball_min"] = far_min;
        rep.notes["far_ball_bound_holds"] = far_min >= bound ? "true" : "false";
    } else {
        rep.notes["far_ball_bound_holds"] = "not-evaluated";
    }
    return rep;
}

CheckReport check_degiorgi(const Params& params, double M, double rho, double delta,
                           const DeGiorgiOptions& options) {
    if (!(M > 0.0) || !(rho > 0.0)) throw InvalidInput("check_degiorgi: need M, rho > 0");
    if (!(delta > 0.0 && delta < 1.0)) throw InvalidInput("check_degiorgi: need 0 < delta < 1");
    if (options.steps < 10 || options.bisection_iters < 1) {
        throw InvalidInput("check_degiorgi: need steps >= 10 and bisection_iters >= 1");
    }
    const double p = params.p;
    const double y = params.y;
    const Grid grid(Interval{y - 8.0 * rho, y + 8.0 * rho}, params.n_cells);
    Field u0{std::vector<double>(grid.n_nodes(), 0.0), 0.0};
    for (std::size_t i = 1; i + 1 < grid.n_nodes(); ++i) {
        if (std::abs(grid.node(i) - y) <= 2.0 * rho * (1.0 + 1e-12)) u0.values[i] = M;
    }
    // One run over the delta = 1 horizon; every delta <= 1 is read off it.
    const double stretch = std::pow(M, 2.0 - p) * std::pow(2.0 * rho, p);
    Params run = params;
    run.M = M;
    run.dt = stretch / static_cast<double>(options.steps);
    const Solution sol = solve(run, grid, u0, BoundarySpec::homogeneous_dirichlet(), stretch);

    const auto times = sol.trajectory.times();
    std::vector<double> mins(times.size());
    for (std::size_t n = 0; n < times.size(); ++n) {
        mins[n] = ball_min(grid, sol.trajectory.field(n), y, rho);
    }
    auto holds = [&](double d) {
        const double horizon = d * stretch * (1.0 + 1e-12);
        for (std::size_t n = 1; n < times.size() && times[n] <= horizon; ++n) {
            if (mins[n] < 0.5 * M) return false;
        }
        return true;
    };
    double lo = 0.0, hi = 1.0;
    if (holds(1.0)) {
        lo = 1.0;
    } else {
        for (int k = 0; k < options.bisection_iters; ++k) {
            const double mid = 0.5 * (lo + hi);
            (holds(mid) ? lo : hi) = mid;
        }
    }
    double min_in_window = kInf;
    const double horizon = delta * stretch * (1.0 + 1e-12);
    for (std::size_t n = 1; n < times.size() && times[n] <= horizon; ++n) {
        min_in_window = std::min(min_in_window, mins[n]);
    }
    CheckReport rep = CheckReport::lower_bound("degiorgi", min_in_window, 0.5 * M, 0.0);
    rep.details["delta"] = delta;
    rep.details["delta_max"] = lo;
    rep.details["theta"] = theta(delta, M, p);
    rep.details["horizon"] = delta * stretch;
    rep.details["M"] = M;
    rep.details["rho"] = rho;
    if (lo >= 1.0) rep.notes["delta_max"] = "capped at 1";
    return rep;
}

CheckReport check_harnack(const Trajectory& traj, const Params& params,
                          const ConstantChain& chain, double rho) {
    const double p = params.p;
    const double M = params.M;
    const double T = params.T;
    const double rb = chain.rho_bar.value_or(rho_bar(M, T, p));
    if (!(rho >= 4.0 * rb * (1.0 - 1e-12))) {
        throw InvalidInput("check_harnack: need rho >= 4 rho_bar");
    }
    const Grid& grid = traj.grid();
    if (!(grid.domain().alpha <= params.y - 4.0 * rho && params.y + 4.0 * rho <= grid.domain().beta)) {
        throw InvalidInput("check_harnack: B_{4 rho}(y) does not fit the grid");
    }
    if (traj.back().time < 0.5 * T * (1.0 - 1e-12)) {
        throw InvalidInput("check_harnack: trajectory ends before T/2");
    }
    require_segment_hypothesis(traj, params.y, M, T, "check_harnack");

    double inf = kInf;
    double arg_x = 0.0, arg_t = 0.0;
    std::size_t levels = 0;
    const auto times = traj.times();
    // Outward snap in time: include the last level <= T/4.
    std::size_t n_start = 0;
    for (std::size_t n = 0; n < times.size(); ++n) {
        if (times[n] <= 0.25 * T * (1.0 + 1e-12)) n_start = n;
    }
    for (std::size_t n = n_start; n < times.size(); ++n) {
        if (times[n] > 0.5 * T * (1.0 + 1e-12)) break;
        ++levels;
        const auto& u = traj.field(n).values;
        for (double side : {-1.0, 1.0}) {
            const double xb = params.y + side * 2.0 * rho;
            const auto [lo, hi] = grid.covering(xb - rho, xb + rho);
            for (std::size_t i = lo; i <= hi; ++i) {
                if (u[i] < inf) {
                    inf = u[i];
                    arg_x = grid.node(i);
                    arg_t = times[n];
                }
            }
        }
    }
    const double q = p / (2.0 - p);
    const double log_factor = q * (std::log(rb) - std::log(rho));
    const double rhs = chain.log_sigma_bar + std::log(M) + log_factor;
    const double lhs = inf > 0.0 ? std::log(inf) : -kInf;
    CheckReport rep = CheckReport::lower_bound("harnack", lhs, rhs, kLogTolerance, true);
    rep.details["inf"] = inf;
    rep.details["inf_x"] = arg_x;
    rep.details["inf_t"] = arg_t;
    rep.details["levels"] = static_cast<double>(levels);
    rep.details["rho"] = rho;
    rep.details["rho_bar"] = rb;
    rep.details["rho_over_rhobar"] = rho / rb;
    rep.details["log_sigma_bar"] = chain.log_sigma_bar;
    rep.details["log_sigma_emp"] = lhs - std::log(M) - log_factor;
    rep.details["sigma_emp"] = std::exp(lhs - std::log(M) - log_factor);

    // Far-field exponent of the last level over [rho, 3 rho] on the right.
    try {
        const auto fit = fit_decay_exponent(traj.back(), grid, params.y, rho, 3.0 * rho);
        rep.details["exponent_fit"] = fit.slope;
        rep.details["exponent_fit_r2"] = fit.r2;
    } catch (const std::exception&) {
        rep.notes["exponent_fit"] = "unavailable";
    }
    return rep;
}

Trajectory to_transformed_trajectory(const Trajectory& traj, const Params& params,
                                     double tau_max) {
    const double p = params.p;
    const TransformFrame frame{params.y, params.T, rho_bar(params.M, params.T, p), p, params.M};
    const Grid& g = traj.grid();
    const double z_lo = to_transformed(g.domain().alpha, 0.0, frame).z;
    const double z_hi = to_transformed(g.domain().beta, 0.0, frame).z;
    Grid zgrid(Interval{z_lo, z_hi}, g.n_cells());
    Trajectory out(zgrid, BoundarySpec{});
    for (const auto& f : traj.fields()) {
        if (f.time < 0.0 || !(f.time < 0.5 * params.T)) continue;
        const double tau = to_transformed(params.y, f.time, frame).tau;
        if (tau > tau_max * (1.0 + 1e-12)) break;
        Field v{f.values, tau};
        for (auto& x : v.values) x = transform_field(x, tau, params.M, p);
        out.push_back(std::move(v));
    }
    if (out.size() < 2) throw InvalidInput("to_transformed_trajectory: fewer than two levels in [0, T/2)");
    return out;
}

namespace {

struct TransformedResidual {
    double residual = 0.0;
    double kappa = 0.0;
    double scale = 0.0;
    std::size_t levels = 0;
};

TransformedResidual transformed_residual(const Trajectory& traj, const Params& params,
                                         const ConstantChain& chain, double tau_max) {
    const double p = params.p;
    const double rb = chain.rho_bar.value_or(rho_bar(params.M, params.T, p));
    const TransformFrame frame{params.y, params.T, rb, p, params.M};
    const Trajectory v = to_transformed_trajectory(traj, params, tau_max);
    double scale = 0.0;
    for (const auto& f : v.fields()) {
        for (double x : f.values) scale = std::max(scale, std::abs(x));
    }
    const double t1 = v.front().time;
    const double t2 = v.back().time;
    const double radius = v.grid().domain().length() / 8.0;
    const WeakEquation eq{p, frame.transformed_diffusion(), 1.0 / (2.0 - p)};
    double worst = 0.0;
    for (const auto& phi : bump_basis(v.grid(), t1, t2, 9, radius)) {
        worst = std::max(worst, std::abs(weak_residual(v, phi, eq).normalized));
    }
    return {scale > 0.0 ? worst / scale : worst, eq.diffusion, scale, v.size()};
}

}  // namespace

CheckReport check_transformed_equation(const Trajectory& traj, const Params& params,
                                       const ConstantChain& chain, double tol, double tau_max) {
    const auto r = transformed_residual(traj, params, chain, tau_max);
    CheckReport rep = CheckReport::upper_bound("transformed_equation", r.residual, tol, 0.0);
    rep.details["residual"] = r.residual;
    rep.details["kappa"] = r.kappa;
    rep.details["scale"] = r.scale;
    rep.details["levels"] = static_cast<double>(r.levels);
    rep.details["tau_max"] = tau_max;
    return rep;
}

CheckReport check_transformed_refinement(std::span<const Trajectory> ladder, const Params& params,
                                         const ConstantChain& chain, double tol, double min_ratio,
                                         double tau_max) {
    if (ladder.size() < 2) throw InvalidInput("check_transformed_refinement: need >= 2 levels");
    std::vector<double> res;
    for (const auto& t : ladder) res.push_back(transformed_residual(t, params, chain, tau_max).residual);
    double worst_ratio = kInf;
    for (std::size_t k = 1; k < res.size(); ++k) {
        worst_ratio = std::min(worst_ratio, res[k] > 0.0 ? res[k - 1] / res[k] : kInf);
    }
    CheckReport rep = CheckReport::upper_bound("transformed_refinement", res.back(), tol, 0.0);
    if (worst_ratio < min_ratio) {
        rep.margin = std::min(rep.margin, worst_ratio - min_ratio);
        rep.settle();
    }
    for (std::size_t k = 0; k < res.size(); ++k) rep.details["residual_" + std::to_string(k)] = res[k];
    rep.details["min_ratio"] = worst_ratio;
    rep.details["required_ratio"] = min_ratio;
    return rep;
}

CheckReport check_hypothesis_transport(const Trajectory& traj, const Params& params) {
    const double p = params.p;
    const TransformFrame frame{params.y, params.T, rho_bar(params.M, params.T, p), p, params.M};
    double worst = kInf;
    std::size_t samples = 0;
    for (const auto& f : traj.fields()) {
        if (!(f.time > 0.0) || !(f.time < 0.5 * params.T)) continue;
        const double tau = to_transformed(params.y, f.time, frame).tau;
        const double v0 = transform_field(value_at(traj.grid(), f, params.y), tau, params.M, p);
        // log v(0, tau) - tau / (2-p)
        const double m = (v0 > 0.0 ? std::log(v0) : -kInf) - tau / (2.0 - p);
        worst = std::min(worst, m);
        ++samples;
    }
    if (samples == 0) throw InvalidInput("check_hypothesis_transport: no levels in (0, T/2)");
    CheckReport rep = CheckReport::lower_bound("hypothesis_transport", worst, 0.0, kLogTolerance, true);
    rep.details["samples"] = static_cast<double>(samples);
    return rep;
}

}  // namespace harnack
