#pragma once

#include <span>

namespace harnack {

/// Solves a tridiagonal system in place with the Thomas algorithm.
///
/// Row i reads lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i];
/// lower[0] and upper[n-1] are ignored. On return `rhs` holds x. `diag` and
/// `upper` are used as scratch. Intended for diagonally dominant systems; no
/// pivoting. Throws DomainError on a zero pivot.
void solve_tridiagonal(std::span<const double> lower, std::span<double> diag,
                       std::span<double> upper, std::span<double> rhs);

}  // namespace harnack
