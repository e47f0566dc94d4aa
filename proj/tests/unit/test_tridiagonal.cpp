#include <doctest.h>

#include <vector>

#include "harnack/errors.hpp"
#include "harnack/tridiagonal.hpp"

using namespace harnack;

TEST_SUITE("tridiagonal") {

TEST_CASE("solves a diagonally dominant system") {
    std::vector<double> lower{0, -1, -1, -1}, diag{4, 4, 4, 4}, upper{-1, -1, -1, 0};
    const std::vector<double> x{1, 2, 3, 4};
    std::vector<double> rhs(4);
    for (std::size_t i = 0; i < 4; ++i) {
        rhs[i] = diag[i] * x[i] + (i ? lower[i] * x[i - 1] : 0) + (i < 3 ? upper[i] * x[i + 1] : 0);
    }
    solve_tridiagonal(lower, diag, upper, rhs);
    for (std::size_t i = 0; i < 4; ++i) CHECK(rhs[i] == doctest::Approx(x[i]));
}

TEST_CASE("zero pivot is reported") {
    std::vector<double> lower{0, 0}, diag{0, 1}, upper{0, 0}, rhs{1, 1};
    CHECK_THROWS_AS(solve_tridiagonal(lower, diag, upper, rhs), DomainError);
}

}
