#include <doctest.h>

#include <cmath>

#include "harnack/errors.hpp"
#include "harnack/exact.hpp"

using namespace harnack;

namespace {

/// Residual with a parabolic slab dt = h^2 on a halving ladder.
std::vector<double> residual_ladder(const BarenblattParams& bp) {
    std::vector<double> out;
    for (std::size_t n : {128u, 256u, 512u, 1024u}) {
        const Grid g({-10.0, 10.0}, n);
        out.push_back(barenblatt_residual(bp, g, 1.0, g.h() * g.h()));
    }
    return out;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("closed form at the center and symmetry") {
    const BarenblattParams bp{1.5, 1.0, 1.0, 0.0, std::nullopt};
    CHECK(bp.alpha() == doctest::Approx(1.0));
    CHECK(bp.k() == doctest::Approx(1.0 / 3.0));
    CHECK(barenblatt_eval(bp, 0.0, 0.0) == doctest::Approx(1.0));
    CHECK(barenblatt_eval(bp, 0.0, 1.0) == doctest::Approx(0.5));
    CHECK(barenblatt_eval(bp, 2.5, 0.3) == doctest::Approx(barenblatt_eval(bp, -2.5, 0.3)));
    CHECK_THROWS_AS(barenblatt_eval(bp, 0.0, -1.0), DomainError);
}

TEST_CASE("the exact family is certified by its weak residual") {
    for (double p : {1.2, 1.5, 1.8}) {
        const BarenblattParams bp{p, 1.0, 1.0, 0.0, std::nullopt};
        const auto r = residual_ladder(bp);
        for (std::size_t k = 1; k < r.size(); ++k) CHECK(std::log2(r[k - 1] / r[k]) >= 1.0);
    }
}

TEST_CASE("a perturbed k does not converge") {
    for (double p : {1.2, 1.5, 1.8}) {
        BarenblattParams bp{p, 1.0, 1.0, 0.0, std::nullopt};
        bp.k_override = 1.1 * bp.k();
        const auto r = residual_ladder(bp);
        CHECK(std::log2(r[r.size() - 2] / r.back()) < 0.5);
    }
}

TEST_CASE("residual on an empty slab is zero") {
    const BarenblattParams bp{1.5, 1.0, 1.0, 0.0, std::nullopt};
    CHECK(barenblatt_residual(bp, Grid({-10.0, 10.0}, 64), 0.5, 0.0) == 0.0);
}

TEST_CASE("far-field slope and fit guards") {
    for (double p : {1.2, 1.5, 1.8}) {
        const BarenblattParams bp{p, 1.0, 1.0, 0.0, std::nullopt};
        std::vector<double> x, u;
        for (int i = 0; i < 200; ++i) {
            x.push_back(100.0 * std::pow(100.0, i / 199.0));
            u.push_back(barenblatt_eval(bp, x.back(), 0.0));
        }
        const auto fit = fit_decay_exponent(x, u, 0.0, 100.0, 1e4);
        CHECK(fit.slope == doctest::Approx(-p / (2.0 - p)).epsilon(0.02));
        CHECK(fit.r2 > 0.999);
    }
    std::vector<double> x{1, 2, 3}, u{1, 1, 1};
    CHECK_THROWS(fit_decay_exponent(x, u, 0.0, 0.5, 5.0));
    std::vector<double> x8{1, 2, 3, 4, 5, 6, 7, 8}, u8{1, 1, 0, 1, 1, 1, 1, 1};
    CHECK_THROWS_AS(fit_decay_exponent(x8, u8, 0.0, 0.5, 9.0), DomainError);
}

}
