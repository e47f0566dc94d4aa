#include <doctest.h>

#include <limits>

#include "harnack/errors.hpp"
#include "harnack/types.hpp"

using namespace harnack;

TEST_SUITE("types") {

TEST_CASE("default params validate") {
    Params p;
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("params validation names the field") {
    Params p;
    p.p = 2.0;
    try {
        p.validate();
        FAIL("expected InvalidInput");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).rfind("params.p", 0) == 0);
    }
    Params q;
    q.y = 20.0;
    CHECK_THROWS_AS(q.validate(), InvalidInput);
    Params r;
    r.dt = 0.0;
    CHECK_THROWS_AS(r.validate(), InvalidInput);
}

TEST_CASE("grid nodes, weights and covering") {
    Grid g({-1.0, 1.0}, 8);
    CHECK(g.n_nodes() == 9);
    CHECK(g.h() == doctest::Approx(0.25));
    CHECK(g.node(0) == -1.0);
    CHECK(g.node(8) == 1.0);
    const auto w = g.mass_weights();
    double sum = 0.0;
    for (double x : w) sum += x;
    CHECK(sum == doctest::Approx(2.0));
    CHECK(w.front() == doctest::Approx(0.125));

    const auto [lo, hi] = g.covering(-0.5, 0.5);
    CHECK(lo == 2);
    CHECK(hi == 6);
    const auto [lo2, hi2] = g.covering(-0.4, 0.4);
    CHECK(lo2 == 2);
    CHECK(hi2 == 6);
    CHECK_THROWS_AS(g.covering(-1.5, 0.0), InvalidInput);
    CHECK(g.nearest(0.01) == 4);
    CHECK(g.nearest(-7.0) == 0);
    CHECK_THROWS_AS(Grid({1.0, 0.0}, 4), InvalidInput);
}

TEST_CASE("trajectory enforces increasing times and valid fields") {
    Grid g({0.0, 1.0}, 4);
    Trajectory tr(g, BoundarySpec::zero_flux());
    tr.push_back({std::vector<double>(5, 1.0), 0.0});
    tr.push_back({std::vector<double>(5, 1.0), 0.5});
    CHECK(tr.size() == 2);
    CHECK(tr.times() == std::vector<double>{0.0, 0.5});
    CHECK_THROWS_AS(tr.push_back({std::vector<double>(5, 1.0), 0.5}), InvalidInput);
    CHECK_THROWS_AS(tr.push_back({std::vector<double>(4, 1.0), 1.0}), InvalidInput);
    Field bad{std::vector<double>(5, 1.0), 2.0};
    bad.values[2] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(tr.push_back(bad), InvalidInput);
}

}
