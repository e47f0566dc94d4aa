#include "harnack/convergence.hpp"

#include <algorithm>
#include <cmath>

#include "harnack/errors.hpp"
#include "harnack/exact.hpp"
#include "harnack/solver.hpp"

namespace harnack {

namespace {

void fill_orders(std::vector<LadderLevel>& ladder, double refine) {
    for (std::size_t k = 1; k < ladder.size(); ++k) {
        const double a = ladder[k - 1].error, b = ladder[k].error;
        if (a > 0.0 && b > 0.0) ladder[k].order = std::log(a / b) / std::log(refine);
    }
}

bool decreasing(const std::vector<LadderLevel>& ladder) {
    for (std::size_t k = 1; k < ladder.size(); ++k) {
        if (!(ladder[k].error < ladder[k - 1].error)) return false;
    }
    return true;
}

}  // namespace

double barenblatt_linf_error(const ConvergenceOptions& opt, std::size_t n_cells, double dt,
                             double eps_reg) {
    const BarenblattParams bp{opt.p, opt.C, opt.t0, 0.0, std::nullopt};
    bp.validate();
    Params params;
    params.p = opt.p;
    params.domain = opt.domain;
    params.n_cells = n_cells;
    params.dt = dt;
    params.eps_reg = eps_reg;
    params.validate();
    const Grid grid(opt.domain, n_cells);
    const auto bc = barenblatt_boundary(bp, grid);
    const auto sol = solve(params, grid, barenblatt_field(bp, grid, 0.0), bc, opt.duration);
    double err = 0.0;
    for (const auto& f : sol.trajectory.fields()) {
        for (std::size_t i = 0; i < grid.n_nodes(); ++i) {
            err = std::max(err, std::abs(f.values[i] - barenblatt_eval(bp, grid.node(i), f.time)));
        }
    }
    return err;
}

ConvergenceResult run_convergence(const ConvergenceOptions& opt) {
    if (opt.levels < 2) throw InvalidInput("convergence: need at least 2 levels to estimate an order");
    ConvergenceResult res;
    for (int k = 0; k < opt.levels; ++k) {
        LadderLevel lv;
        lv.n_cells = opt.space_n0 << k;
        lv.dt = opt.space_dt0 * std::pow(0.25, k);
        lv.error = barenblatt_linf_error(opt, lv.n_cells, lv.dt, opt.eps_reg);
        res.space.push_back(lv);
    }
    for (int k = 0; k < opt.levels; ++k) {
        LadderLevel lv;
        lv.n_cells = opt.time_n;
        lv.dt = opt.time_dt0 * std::pow(0.5, k);
        lv.error = barenblatt_linf_error(opt, lv.n_cells, lv.dt, opt.eps_reg);
        res.time.push_back(lv);
    }
    fill_orders(res.space, 2.0);
    fill_orders(res.time, 2.0);
    res.space_order = res.space.back().order.value_or(0.0);
    res.time_order = res.time.back().order.value_or(0.0);
    res.monotone = decreasing(res.space) && decreasing(res.time);
    res.passed = res.space_order >= kRequiredSpaceOrder && res.time_order >= kRequiredTimeOrder;
    return res;
}

EpsSweepResult run_eps_sweep(const ConvergenceOptions& opt, std::size_t n_cells, double dt) {
    EpsSweepResult res;
    for (double eps : {1e-4, 1e-6, 1e-8}) {
        res.points.push_back({eps, barenblatt_linf_error(opt, n_cells, dt, eps)});
    }
    const double e6 = res.points[1].error, e8 = res.points[2].error;
    res.relative_change = std::abs(e6 - e8) / std::max(std::abs(e8), 1e-300);
    res.passed = res.relative_change < 0.01;
    return res;
}

}  // namespace harnack
