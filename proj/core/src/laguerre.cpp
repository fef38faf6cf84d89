#include "pdspec/laguerre.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdspec/error.hpp"

namespace pdspec::laguerre {
namespace {

void check_args(int n, double alpha, double x) {
  if (n < 0) throw DomainError("laguerre: degree must be non-negative");
  if (n > kMaxDegree)
    throw DomainError("laguerre: degree " + std::to_string(n) +
                      " exceeds cap " + std::to_string(kMaxDegree));
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw DomainError("laguerre: alpha must be finite and >= 0");
  if (!std::isfinite(x)) throw DomainError("laguerre: non-finite argument");
  if (x < 0.0 || x > kMaxArgument)
    throw DomainError("laguerre: argument outside [0, 1e4]");
}

// Returns (L_{n-1}, L_n); L_{-1} is 0.
std::pair<double, double> sweep(int n, double alpha, double x) {
  double prev = 0.0;
  double curr = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next =
        ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return {prev, curr};
}

}  // namespace

double eval(LaguerreIndex idx, double x) {
  check_args(idx.n, idx.alpha, x);
  return sweep(idx.n, idx.alpha, x).second;
}

double deriv(LaguerreIndex idx, double x) {
  check_args(idx.n, idx.alpha, x);
  if (idx.n == 0) return 0.0;
  return -sweep(idx.n - 1, idx.alpha + 1.0, x).second;
}

std::vector<double> sequence(int n_max, double alpha, double x) {
  check_args(n_max, alpha, x);
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  double prev = 0.0;
  double curr = 1.0;
  out[0] = curr;
  for (int k = 0; k < n_max; ++k) {
    const double next =
        ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
    out[static_cast<std::size_t>(k) + 1] = curr;
  }
  return out;
}

double recurrence_residual(LaguerreIndex idx, double x) {
  check_args(idx.n + 1, idx.alpha, x);
  const auto [lower, mid] = sweep(idx.n, idx.alpha, x);
  const double upper = sweep(idx.n + 1, idx.alpha, x).second;
  const int n = idx.n;
  const double alpha = idx.alpha;
  return x * mid - ((2.0 * n + alpha + 1.0) * mid - (n + 1.0) * upper -
                    (n + alpha) * lower);
}

double recurrence_scale(LaguerreIndex idx, double x) {
  check_args(idx.n + 1, idx.alpha, x);
  const auto [lower, mid] = sweep(idx.n, idx.alpha, x);
  const double upper = sweep(idx.n + 1, idx.alpha, x).second;
  const int n = idx.n;
  const double alpha = idx.alpha;
  return std::max({std::abs(x * mid), std::abs((2.0 * n + alpha + 1.0) * mid),
                   std::abs((n + 1.0) * upper), std::abs((n + alpha) * lower)});
}

}  // namespace pdspec::laguerre
