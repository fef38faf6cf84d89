#include "tridiagonal.hpp"

#include <lapacke.h>

#include <cfloat>
#include <string>

#include "pdspec/error.hpp"

namespace pdspec::detail {

std::vector<double> lowest_tridiagonal_eigenvalues(std::span<const double> diag,
                                                   std::span<const double> offdiag, int count) {
  const auto n = static_cast<lapack_int>(diag.size());
  if (n < 1 || static_cast<lapack_int>(offdiag.size()) != n - 1)
    throw DomainError("tridiagonal: inconsistent diagonal/off-diagonal lengths");
  if (count < 1 || count > n) throw DomainError("tridiagonal: eigenvalue count out of range");

  std::vector<double> w(static_cast<std::size_t>(n));
  std::vector<lapack_int> iblock(static_cast<std::size_t>(n));
  std::vector<lapack_int> isplit(static_cast<std::size_t>(n));
  lapack_int found = 0;
  lapack_int nsplit = 0;
  // abstol = 2*safe_min asks dstebz for the highest attainable relative accuracy.
  const lapack_int info = LAPACKE_dstebz('I', 'E', n, 0.0, 0.0, 1, count, 2.0 * DBL_MIN,
                                         diag.data(), offdiag.data(), &found, &nsplit, w.data(),
                                         iblock.data(), isplit.data());
  if (info != 0 || found != count)
    throw ConvergenceError("tridiagonal bisection failed (dstebz info=" + std::to_string(info) + ")");
  w.resize(static_cast<std::size_t>(count));
  return w;
}

}  // namespace pdspec::detail
