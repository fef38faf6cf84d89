#pragma once

#include <span>
#include <vector>

namespace pdspec::detail {

/// Lowest `count` eigenvalues (ascending) of the symmetric tridiagonal matrix
/// with the given diagonal and off-diagonal, by Sturm-sequence bisection.
std::vector<double> lowest_tridiagonal_eigenvalues(std::span<const double> diag,
                                                   std::span<const double> offdiag, int count);

}  // namespace pdspec::detail
