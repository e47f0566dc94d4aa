#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "harnack/errors.hpp"
#include "harnack/exact.hpp"
#include "harnack/solver.hpp"

using namespace harnack;

namespace {

double mass(const Grid& g, const Field& f) {
    const auto w = g.mass_weights();
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * f.values[i];
    return s;
}

Field bump(const Grid& g, double c, double r, double a) {
    Field f{std::vector<double>(g.n_nodes(), 0.0), 0.0};
    for (std::size_t i = 0; i < g.n_nodes(); ++i) {
        const double q = (g.node(i) - c) / r;
        if (std::abs(q) < 1.0) f.values[i] = a * (1 - q * q) * (1 - q * q);
    }
    return f;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("constant data is a fixed point") {
    Params p;
    p.n_cells = 64;
    const Grid g(p.domain, p.n_cells);
    const Field u0{std::vector<double>(g.n_nodes(), 0.7), 0.0};
    const auto sol = solve(p, g, u0, BoundarySpec::zero_flux(), 0.01);
    for (double v : sol.trajectory.back().values) CHECK(v == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("zero-flux ends conserve mass") {
    for (double pp : {1.2, 1.5, 1.8}) {
        Params p;
        p.p = pp;
        p.n_cells = 256;
        p.dt = 1e-2;
        const Grid g(p.domain, p.n_cells);
        const Field u0 = bump(g, 1.0, 3.0, 1.0);
        const auto sol = solve(p, g, u0, BoundarySpec::zero_flux(), 0.5);
        CHECK(mass(g, sol.trajectory.back()) == doctest::Approx(mass(g, u0)).epsilon(1e-8));
    }
}

TEST_CASE("each step decreases the proximal functional") {
    Params p;
    p.n_cells = 128;
    p.dt = 5e-3;
    const Grid g(p.domain, p.n_cells);
    Field prev = bump(g, 0.0, 4.0, 1.0);
    for (int n = 0; n < 5; ++n) {
        const auto r = step_implicit(g, prev, p.dt, p, BoundarySpec::homogeneous_dirichlet());
        const double before = proximal_energy(g, prev.values, prev.values, p.dt, p.p, p.eps_reg, 0.0);
        const double after = proximal_energy(g, r.field.values, prev.values, p.dt, p.p, p.eps_reg, 0.0);
        CHECK(after <= before);
        CHECK(r.stats.energy_decrease >= 0.0);
        CHECK(r.stats.final_residual <= p.newton_tol);
        prev = r.field;
    }
}

TEST_CASE("accuracy against the source-type solution") {
    const BarenblattParams bp{1.5, 1.0, 1.0, 0.0, std::nullopt};
    Params p;
    p.n_cells = 512;
    p.dt = 4e-3;
    const Grid g(p.domain, p.n_cells);
    const auto sol = solve(p, g, barenblatt_field(bp, g, 0.0), barenblatt_boundary(bp, g), 0.5);
    double err = 0.0;
    for (const auto& f : sol.trajectory.fields()) {
        for (std::size_t i = 0; i < g.n_nodes(); ++i) {
            err = std::max(err, std::abs(f.values[i] - barenblatt_eval(bp, g.node(i), f.time)));
        }
    }
    CHECK(err < 5e-3);
    CHECK(sol.trajectory.back().time == 0.5);
}

TEST_CASE("comparison of ordered data") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    Params p;
    p.n_cells = 128;
    p.dt = 1e-2;
    const Grid g(p.domain, p.n_cells);
    for (int trial = 0; trial < 4; ++trial) {
        Field u0 = bump(g, -5.0 + 10.0 * U(rng), 1.0 + 3.0 * U(rng), U(rng));
        Field v0 = u0;
        const Field extra = bump(g, -5.0 + 10.0 * U(rng), 1.0 + 3.0 * U(rng), U(rng));
        for (std::size_t i = 0; i < v0.size(); ++i) v0.values[i] += extra.values[i];
        const auto a = solve(p, g, u0, BoundarySpec::homogeneous_dirichlet(), 0.2);
        const auto b = solve(p, g, v0, BoundarySpec::homogeneous_dirichlet(), 0.2);
        for (std::size_t n = 0; n < a.trajectory.size(); ++n) {
            for (std::size_t i = 0; i < g.n_nodes(); ++i) {
                CHECK(a.trajectory.field(n).values[i] <= b.trajectory.field(n).values[i] + 1e-9);
            }
        }
    }
}

TEST_CASE("interior pins hold their value") {
    Params p;
    p.n_cells = 128;
    const Grid g(p.domain, p.n_cells);
    BoundarySpec bc = BoundarySpec::homogeneous_dirichlet();
    const std::size_t node = g.nearest(0.0);
    bc.interior_pins.push_back({node, [](double) { return 2.0; }});
    Field u0{std::vector<double>(g.n_nodes(), 0.0), 0.0};
    u0.values[node] = 2.0;
    const auto sol = solve(p, g, u0, bc, 0.05);
    for (const auto& f : sol.trajectory.fields()) CHECK(f.values[node] == 2.0);
    CHECK(sol.trajectory.back().values[node + 3] > 0.0);
}

TEST_CASE("record stride keeps first and last level") {
    Params p;
    p.n_cells = 32;
    p.dt = 0.01;
    const Grid g(p.domain, p.n_cells);
    const Field u0{std::vector<double>(g.n_nodes(), 1.0), 0.0};
    SolveOptions opt;
    opt.record_stride = 4;
    const auto sol = solve(p, g, u0, BoundarySpec::zero_flux(), 0.1, opt);
    CHECK(sol.trajectory.front().time == 0.0);
    CHECK(sol.trajectory.back().time == doctest::Approx(0.1));
    CHECK(sol.trajectory.size() < 11);
}

TEST_CASE("non-convex reaction step is rejected") {
    Params p;
    p.n_cells = 32;
    const Grid g(p.domain, p.n_cells);
    const Field u0{std::vector<double>(g.n_nodes(), 1.0), 0.0};
    CHECK_THROWS_AS(step_implicit(g, u0, 0.5, p, BoundarySpec::zero_flux(), 2.0), InvalidInput);
}

TEST_CASE("step failure carries the time level") {
    Params p;
    p.n_cells = 64;
    p.newton_max_iter = 1;
    p.newton_tol = 1e-15;
    p.dt = 0.1;
    const Grid g(p.domain, p.n_cells);
    const Field u0 = bump(g, 0.0, 3.0, 1.0);
    SolveOptions opt;
    opt.max_halvings = 1;
    try {
        solve(p, g, u0, BoundarySpec::homogeneous_dirichlet(), 0.5, opt);
        FAIL("expected StepFailure");
    } catch (const StepFailure& e) {
        CHECK(e.time() > 0.0);
        CHECK(e.residual() > p.newton_tol);
    }
}

TEST_CASE("scaling transform maps grid and times") {
    const double pp = 1.5, A = 2.0, B = 2.0;
    Params p;
    p.p = pp;
    p.n_cells = 64;
    const Grid g(p.domain, p.n_cells);
    Trajectory tr(g, BoundarySpec::homogeneous_dirichlet());
    tr.push_back({std::vector<double>(g.n_nodes(), 1.0), 0.0});
    tr.push_back({std::vector<double>(g.n_nodes(), 0.5), 1.0});
    const auto v = scaling_transform(tr, A, B, pp);
    CHECK(v.grid().domain().beta == doctest::Approx(10.0 / B));
    const double factor = std::pow(A, pp - 2.0) * std::pow(B, pp);
    CHECK(v.field(1).time == doctest::Approx(1.0 / factor));
    CHECK(v.field(1).values[3] == doctest::Approx(A * 0.5));
}

}
