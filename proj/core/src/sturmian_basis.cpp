#include "pdspec/sturmian_basis.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "pdspec/error.hpp"
#include "pdspec/laguerre.hpp"
#include "pdspec/quadrature.hpp"

namespace pdspec {

SturmianBasis build_sturmian_basis(int L, double beta, int size) {
  if (L < 0) throw DomainError("sturmian basis: L must be non-negative");
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw DomainError("sturmian basis: beta must be finite and > 0");
  if (size < 1 || size > kMaxBasisSize)
    throw DomainError("sturmian basis: size must be in [1, " + std::to_string(kMaxBasisSize) + "]");

  const double alpha = 2.0 * L + 1.0;
  // y^4 g_j g_k is the highest-degree integrand: 2(size-1) + 4.
  const QuadratureRule rule = quadrature::build_rule(2.0 * L, size + 2);

  std::vector<double> norm(static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k)
    norm[static_cast<std::size_t>(k)] =
        std::exp(0.5 * (std::lgamma(k + 1.0) - std::lgamma(k + alpha + 1.0)));

  SturmianBasis b;
  b.L = L;
  b.beta = beta;
  b.size = size;
  for (Eigen::MatrixXd* m : {&b.overlap, &b.kinetic, &b.inv_r, &b.inv_r2, &b.r1, &b.r2})
    m->setZero(size, size);

  const double two_beta = 2.0 * beta;
  Eigen::VectorXd g(size), h(size);
  for (int i = 0; i < rule.m; ++i) {
    const double y = rule.nodes[static_cast<std::size_t>(i)];
    const double w = rule.weights[static_cast<std::size_t>(i)];
    const std::vector<double> lag = laguerre::sequence(size - 1, alpha, y);
    for (int k = 0; k < size; ++k) {
      const double lk = lag[static_cast<std::size_t>(k)];
      const double lkm1 = k == 0 ? 0.0 : lag[static_cast<std::size_t>(k) - 1];
      const double nk = norm[static_cast<std::size_t>(k)];
      g[k] = nk * lk;
      // y L_k' = k L_k - (k + alpha) L_{k-1}
      const double y_dg = nk * (k * lk - (k + alpha) * lkm1);
      // d/dy [y^{L+1} e^{-y/2} g] = y^L e^{-y/2} h
      h[k] = (L + 1.0 - 0.5 * y) * g[k] + y_dg;
    }
    const Eigen::MatrixXd gg = g * g.transpose();
    b.overlap.noalias() += (w * y * y / two_beta) * gg;
    b.inv_r.noalias() += (w * y) * gg;
    b.inv_r2.noalias() += (w * two_beta) * gg;
    b.r1.noalias() += (w * y * y * y / (two_beta * two_beta)) * gg;
    b.r2.noalias() += (w * y * y * y * y / (two_beta * two_beta * two_beta)) * gg;
    b.kinetic.noalias() += (w * two_beta) * (h * h.transpose());
  }
  return b;
}

Eigen::MatrixXd radial_hamiltonian(const SturmianBasis& basis, double coulomb,
                                   double linear, double quadratic) {
  const double centrifugal = basis.L * (basis.L + 1.0);
  Eigen::MatrixXd h = basis.kinetic + centrifugal * basis.inv_r2 - coulomb * basis.inv_r;
  if (linear != 0.0) h += linear * basis.r1;
  if (quadratic != 0.0) h += quadratic * basis.r2;
  return h;
}

GeneralizedEigen solve_generalized(const Eigen::MatrixXd& hamiltonian,
                                   const Eigen::MatrixXd& overlap) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian, overlap,
                                                                   Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("generalized eigensolver failed (overlap not positive definite?)");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace pdspec
