#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "pdspec/error.hpp"

namespace pdspec {

/// m-point Gauss rule for the weight x^alpha e^{-x} on [0, inf).
///
/// Exact for polynomials of degree <= 2m-1. Nodes are ascending; weights are
/// positive, except that weights below the smallest normal double flush to 0
/// (this only happens for m in the hundreds).
struct QuadratureRule {
  double alpha = 0.0;
  int m = 0;
  std::vector<double> nodes;
  std::vector<double> weights;

  int exact_degree() const noexcept { return 2 * m - 1; }
};

namespace quadrature {

inline constexpr int kMaxNodes = 512;

/// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix with
/// diagonal 2k+alpha+1 and off-diagonal sqrt(k(k+alpha)); each node is then
/// polished by Newton on the orthonormal recurrence and its weight taken from
/// the Christoffel function Gamma(alpha+1) / sum_k p_k(x)^2.
QuadratureRule build_rule(double alpha, int m);

/// Smallest node count whose rule is exact for polynomials of degree d.
constexpr int nodes_for_degree(int degree) noexcept {
  return degree < 1 ? 1 : degree / 2 + 1;
}

template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double value = f(rule.nodes[i]);
    if (!std::isfinite(value))
      throw DomainError("integrate: integrand is not finite at node " +
                        std::to_string(rule.nodes[i]));
    sum += rule.weights[i] * value;
  }
  return sum;
}

}  // namespace quadrature
}  // namespace pdspec
