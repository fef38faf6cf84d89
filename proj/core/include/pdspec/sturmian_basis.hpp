#pragma once

#include <Eigen/Dense>

namespace pdspec {

/// Galerkin matrices of the radial Laguerre (Coulomb-Sturmian) basis
///   chi_k(r) = N_k (2 beta r)^{L+1} e^{-beta r} L_k^{2L+1}(2 beta r),
///   N_k = sqrt(k! / (k+2L+1)!),  k = 0 .. size-1,
/// all assembled by Gauss-Laguerre quadrature that is exact for every entry.
/// The basis is not orthonormal in dr; `overlap` is tridiagonal.
struct SturmianBasis {
  int L = 0;
  double beta = 1.0;
  int size = 0;
  Eigen::MatrixXd overlap;  // int chi_j chi_k dr
  Eigen::MatrixXd kinetic;  // int chi_j' chi_k' dr
  Eigen::MatrixXd inv_r;    // int chi_j chi_k / r dr
  Eigen::MatrixXd inv_r2;   // int chi_j chi_k / r^2 dr
  Eigen::MatrixXd r1;       // int chi_j chi_k r dr
  Eigen::MatrixXd r2;       // int chi_j chi_k r^2 dr
};

inline constexpr int kMaxBasisSize = 160;

SturmianBasis build_sturmian_basis(int L, double beta, int size);

/// Matrix of -d^2/dr^2 - coulomb/r + L(L+1)/r^2 + linear r + quadratic r^2.
Eigen::MatrixXd radial_hamiltonian(const SturmianBasis& basis, double coulomb,
                                   double linear, double quadratic);

/// Generalized symmetric eigenpairs of (H, S), ascending, with c^T S c = 1.
struct GeneralizedEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

GeneralizedEigen solve_generalized(const Eigen::MatrixXd& hamiltonian,
                                   const Eigen::MatrixXd& overlap);

}  // namespace pdspec
