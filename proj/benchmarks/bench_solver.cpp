#include <benchmark/benchmark.h>

#include <vector>

#include "harnack/exact.hpp"
#include "harnack/solver.hpp"
#include "harnack/tridiagonal.hpp"
#include "harnack/verifier.hpp"

using namespace harnack;

static void BM_Tridiagonal(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> lower(n, -1.0), diag(n), upper(n), rhs(n);
    for (auto _ : state) {
        std::fill(diag.begin(), diag.end(), 4.0);
        std::fill(upper.begin(), upper.end(), -1.0);
        std::fill(rhs.begin(), rhs.end(), 1.0);
        solve_tridiagonal(lower, diag, upper, rhs);
        benchmark::DoNotOptimize(rhs.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Tridiagonal)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

static void BM_ImplicitStep(benchmark::State& state) {
    const BarenblattParams bp{1.5, 1.0, 1.0, 0.0, std::nullopt};
    Params p;
    p.n_cells = static_cast<std::size_t>(state.range(0));
    const Grid g(p.domain, p.n_cells);
    const Field u0 = barenblatt_field(bp, g, 0.0);
    const auto bc = barenblatt_boundary(bp, g);
    for (auto _ : state) {
        auto r = step_implicit(g, u0, p.dt, p, bc);
        benchmark::DoNotOptimize(r.field.values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ImplicitStep)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

static void BM_SolveBarenblatt(benchmark::State& state) {
    const BarenblattParams bp{1.5, 1.0, 1.0, 0.0, std::nullopt};
    Params p;
    p.n_cells = 2048;
    p.dt = 1e-3;
    const Grid g(p.domain, p.n_cells);
    const Field u0 = barenblatt_field(bp, g, 0.0);
    const auto bc = barenblatt_boundary(bp, g);
    SolveOptions opt;
    opt.record_stride = 100;
    for (auto _ : state) {
        auto s = solve(p, g, u0, bc, 0.1, opt);
        benchmark::DoNotOptimize(s.stats.data());
    }
}
BENCHMARK(BM_SolveBarenblatt)->Unit(benchmark::kMillisecond);

static void BM_DeGiorgiBisection(benchmark::State& state) {
    Params p;
    p.n_cells = 512;
    for (auto _ : state) {
        auto r = check_degiorgi(p, 1.0, 1.0, 0.1);
        benchmark::DoNotOptimize(r.margin);
    }
}
BENCHMARK(BM_DeGiorgiBisection)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
