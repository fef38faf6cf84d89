#include "pdspec/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace pdspec::quadrature {
namespace {

constexpr double kRescale = 1.0e150;

struct Orthonormal {
  double value;       // p_m(x), scaled
  double derivative;  // p_m'(x), same scale
  double log_norm;    // log sum_{k<m} p_k(x)^2, unscaled
};

// Orthonormal Laguerre recurrence with a running rescale so that large x
// does not overflow; only ratios and the log of the Christoffel sum are kept.
Orthonormal orthonormal_sweep(double alpha, int m, double x) {
  auto b = [alpha](int k) { return std::sqrt(k * (k + alpha)); };
  double p_prev = 0.0, p = 1.0;
  double d_prev = 0.0, d = 0.0;
  double sum = 0.0;
  double log_scale = 0.0;
  for (int k = 0; k < m; ++k) {
    sum += p * p;
    const double a_k = 2.0 * k + alpha + 1.0;
    const double b_k = k == 0 ? 0.0 : b(k);
    const double b_next = b(k + 1);
    const double p_next = ((x - a_k) * p - b_k * p_prev) / b_next;
    const double d_next = (p + (x - a_k) * d - b_k * d_prev) / b_next;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    if (std::abs(p) > kRescale || sum > kRescale * kRescale) {
      const double s = 1.0 / kRescale;
      p_prev *= s;
      p *= s;
      d_prev *= s;
      d *= s;
      sum *= s * s;
      log_scale += 2.0 * std::log(kRescale);
    }
  }
  return {p, d, std::log(sum) + log_scale};
}

}  // namespace

QuadratureRule build_rule(double alpha, int m) {
  if (m < 1 || m > kMaxNodes)
    throw DomainError("build_rule: node count " + std::to_string(m) +
                      " outside [1, " + std::to_string(kMaxNodes) + "]");
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw DomainError("build_rule: alpha must be finite and >= 0");

  Eigen::VectorXd diag(m);
  Eigen::VectorXd sub(m > 1 ? m - 1 : 0);
  for (int k = 0; k < m; ++k) diag[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < m; ++k) sub[k - 1] = std::sqrt(k * (k + alpha));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("build_rule: Jacobi matrix eigensolver did not converge (alpha=" +
                           std::to_string(alpha) + ", m=" + std::to_string(m) + ")");

  QuadratureRule rule;
  rule.alpha = alpha;
  rule.m = m;
  rule.nodes.resize(static_cast<std::size_t>(m));
  rule.weights.resize(static_cast<std::size_t>(m));
  const double log_mu0 = std::lgamma(alpha + 1.0);

  for (int i = 0; i < m; ++i) {
    double x = solver.eigenvalues()[i];
    for (int iter = 0; iter < 3; ++iter) {
      const Orthonormal o = orthonormal_sweep(alpha, m, x);
      if (o.derivative == 0.0 || !std::isfinite(o.value / o.derivative)) break;
      const double step = o.value / o.derivative;
      x -= step;
      if (std::abs(step) <= 1e-16 * x) break;
    }
    const Orthonormal o = orthonormal_sweep(alpha, m, x);
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = std::exp(log_mu0 - o.log_norm);
  }

  for (int i = 0; i < m; ++i) {
    const bool ordered = i == 0 || rule.nodes[static_cast<std::size_t>(i)] >
                                       rule.nodes[static_cast<std::size_t>(i) - 1];
    if (!(rule.nodes[static_cast<std::size_t>(i)] > 0.0) || !ordered)
      throw ConvergenceError("build_rule: node polishing lost ordering (alpha=" +
                             std::to_string(alpha) + ", m=" + std::to_string(m) + ")");
  }
  return rule;
}

}  // namespace pdspec::quadrature
