#include "harnack/tridiagonal.hpp"

#include "harnack/errors.hpp"

namespace harnack {

void solve_tridiagonal(std::span<const double> lower, std::span<double> diag,
                       std::span<double> upper, std::span<double> rhs) {
    const std::size_t n = diag.size();
    if (lower.size() != n || upper.size() != n || rhs.size() != n) {
        throw InvalidInput("solve_tridiagonal: size mismatch");
    }
    if (n == 0) return;
    for (std::size_t i = 1; i < n; ++i) {
        if (diag[i - 1] == 0.0) throw DomainError("solve_tridiagonal: zero pivot");
        const double m = lower[i] / diag[i - 1];
        diag[i] -= m * upper[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    if (diag[n - 1] == 0.0) throw DomainError("solve_tridiagonal: zero pivot");
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
    }
}

}  // namespace harnack
