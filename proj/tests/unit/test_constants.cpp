#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "harnack/constants.hpp"
#include "harnack/errors.hpp"

using namespace harnack;

TEST_SUITE("constants") {

TEST_CASE("worked chain at p = 1.5") {
    const auto ch = compute_chain(1.5, 0.25, 0.5, 0.1, 4.0);
    CHECK(ch.s_o == 3);
    CHECK(std::exp(ch.log_sigma_o) == doctest::Approx(6.25e-5));
    CHECK(ch.e_tau_o == doctest::Approx(111.80).epsilon(1e-4));
    CHECK(ch.log_sigma_bar == doctest::Approx(-453.4).epsilon(1e-4));
    CHECK(ch.tau_o_transformed == doctest::Approx(std::log(ch.e_tau_o)));
    CHECK(!ch.rho_bar);
}

TEST_CASE("s_o with the default cutoff constant") {
    CHECK(compute_chain(1.5, 0.25, kDefaultGamma1, 0.1, 4.0).s_o == 9);
}

TEST_CASE("rho_bar examples") {
    CHECK(rho_bar(2.0, 1.0, 1.5) == doctest::Approx(1.0));
    CHECK(rho_bar(1.0, 1.0, 1.5) == doctest::Approx(std::pow(2.0, 1.0 / 3.0)));
    const auto ch = compute_chain(1.5, 0.25, 0.5, 0.1, 4.0, 2.0, 1.0);
    REQUIRE(ch.rho_bar);
    CHECK(*ch.rho_bar == doctest::Approx(1.0));
    // At rho_bar the space-time scale equals M/2.
    for (double p : {1.2, 1.5, 1.8}) {
        const double rb = rho_bar(3.0, 2.0, p);
        CHECK(std::pow(2.0 / std::pow(rb, p), 1.0 / (2.0 - p)) == doctest::Approx(1.5));
    }
}

TEST_CASE("theta examples") {
    CHECK(theta(0.1, 1.0, 1.5) == doctest::Approx(0.1));
    CHECK(theta(0.1, 4.0, 1.5) == doctest::Approx(0.2));
    CHECK_THROWS_AS(theta(0.1, 0.0, 1.5), InvalidInput);
}

TEST_CASE("range violations") {
    CHECK_THROWS_AS(compute_chain(1.5, 0.25, 2.0, 1.5, 4.0), InvalidInput);
    CHECK_THROWS_AS(compute_chain(1.5, 0.0, 2.0, 0.1, 4.0), InvalidInput);
    CHECK_THROWS_AS(compute_chain(1.5, 0.25, 2.0, 0.1, 3.0), InvalidInput);
    CHECK_THROWS_AS(compute_chain(2.0, 0.25, 2.0, 0.1, 4.0), InvalidInput);
}

TEST_CASE("calibrated delta table") {
    CHECK(default_delta(1.5) == doctest::Approx(0.297));
    CHECK(default_delta(1.35) > default_delta(1.2));
    CHECK(default_delta(1.35) < default_delta(1.5));
    for (double p : {1.1, 1.2, 1.5, 1.8, 1.9}) {
        CHECK(default_delta(p) > 0.0);
        CHECK(default_delta(p) < 1.0);
    }
}

TEST_CASE("serialization keeps sigma in log form") {
    const auto ch = compute_chain(1.5, 0.25, 0.5, 0.1, 4.0, 2.0, 1.0);
    const auto kv = ch.to_key_value();
    CHECK(kv.find("s_o=3\n") != std::string::npos);
    CHECK(kv.find("log_sigma_bar=") != std::string::npos);
    CHECK(kv.find("rho_bar=1") != std::string::npos);
    CHECK(ch.to_json().find("\"log_sigma_bar\"") != std::string::npos);
}

TEST_CASE("change of variables roundtrip") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (double p : {1.2, 1.5, 1.8}) {
        const TransformFrame fr{0.3, 1.0, rho_bar(1.0, 1.0, p), p, 1.0};
        CHECK(fr.transformed_diffusion() == doctest::Approx(0.5));
        for (int k = 0; k < 50; ++k) {
            const double x = -5.0 + 10.0 * U(rng);
            const double t = 0.499 * U(rng);
            const auto zt = to_transformed(x, t, fr);
            const auto [x2, t2] = from_transformed(zt.z, zt.tau, fr);
            CHECK(std::abs(x2 - x) <= 4 * std::numeric_limits<double>::epsilon() * (1 + std::abs(x)));
            CHECK(std::abs(t2 - t) <= 4 * std::numeric_limits<double>::epsilon());
        }
        CHECK_THROWS_AS(to_transformed(0.0, 0.5, fr), DomainError);
    }
    CHECK(transform_field(2.0, 0.0, 1.0, 1.5) == 2.0);
    CHECK(transform_field(1.0, 0.5, 1.0, 1.5) == doctest::Approx(std::exp(1.0)));
}

}
