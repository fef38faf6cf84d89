#pragma once

#include <string>

namespace pdspec {

/// Physical parameters of one spectrum problem, natural units (hbar = c = 1).
///
/// `branch` = +1 selects the F1 radial equation, -1 the F4 equation, which is
/// the same operator with mu -> -mu. `particle` picks the sign of the energy
/// root.
struct ModelConfig {
  double M = 1.0;
  double mu = 1.0;
  double A = 1.0;
  double B = 0.0;
  int L = 0;
  int branch = +1;
  int particle = +1;

  double effective_mu() const noexcept { return branch * mu; }
  /// a2^2 = 2 mu A (L+1), the Coulomb-like strength of H0.
  double coulomb_strength() const noexcept { return 2.0 * effective_mu() * A * (L + 1); }
  /// M(L) = M^2 - mu B (2L+3).
  double mass_term() const noexcept { return M * M - effective_mu() * B * (2 * L + 3); }
  /// Energy offset in eps^2 = offset + lambda: M^2 + mu^2 A^2 - mu B (2L+3).
  double energy_offset() const noexcept;
};

inline constexpr int kMaxOrbital = 20;

/// Throws DomainError naming the violated constraint.
void validate(const ModelConfig& cfg);

enum class Mode { PaperLiteral, Consistent };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// Unperturbed Coulomb-like eigenstate of H0 for radial quantum number n.
struct UnperturbedState {
  int n = 0;
  double a1 = 0.0;       // decay constant mu A (L+1)/(n+L+1)
  double scale_s = 0.0;  // r = s x, s = 1/(2 a1)
  double Q = 0.0;        // F1 = Q e^{-x/2} x^L L_n^{2L+1}(x)
  double lambda0 = 0.0;  // -a1^2
};

/// Correction breakdown. PaperLiteral stores energy-level terms that add up
/// to `total`; Consistent stores operator-eigenvalue terms lambda0..lambda2
/// and total = particle * sqrt(offset + sum).
struct EnergyBreakdown {
  int n = 0;
  Mode mode = Mode::PaperLiteral;
  double eps0 = 0.0;
  double eps1 = 0.0;
  double eps2_diag = 0.0;
  double eps2_offdiag = 0.0;
  double total = 0.0;
  int basis_size = 0;  // Consistent mode only
};

/// Coefficients of the r-polynomial part of the radial equation's bracket,
///   c0 + c1 r + c2 r^2,
/// where c0 holds H0's constant terms and c1, c2 are the H1, H2 couplings.
struct PerturbationOperators {
  double c0 = 0.0;
  double h1_coefficient = 0.0;
  double h2_coefficient = 0.0;

  /// H2 as printed: -mu^2 A^2 B^2.
  static PerturbationOperators paper_literal(const ModelConfig& cfg);
  /// H2 from expanding -mu^2 (A + B r)^2: -mu^2 B^2.
  static PerturbationOperators consistent(const ModelConfig& cfg);

  double evaluate(double r) const noexcept { return c0 + (h1_coefficient + h2_coefficient * r) * r; }
};

struct XExpectations {
  double mean_x = 0.0;
  double mean_x2 = 0.0;
};

struct QRatios {
  double q1 = 0.0;
  double q2 = 0.0;
};

struct SecondOrder {
  double diag = 0.0;
  double offdiag = 0.0;
};

/// Lambda-level first and second order terms computed inside one finite
/// Laguerre basis (beta = a1 of the target state).
struct BasisCorrections {
  double lambda0 = 0.0;  // Ritz value of the target state
  double lambda1 = 0.0;
  double diag2 = 0.0;
  double offdiag2 = 0.0;
  int basis_size = 0;
};

namespace spectrum {

inline constexpr double kRadicandSlack = 1e-12;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr int kDefaultBasis = 30;

/// particle * sqrt(M(L) + mu^2 A^2 [(n+L+1)^2 - (L+1)^2] / (n+L+1)^2).
double unperturbed_energy(const ModelConfig& cfg, int n);

UnperturbedState build_state(const ModelConfig& cfg, int n, Mode mode);

/// Normalization constant in the printed form with factor (1+2L)^3 (paper
/// literal) or the directly normalized (L+1)^3 (consistent).
double normalization_constant(const ModelConfig& cfg, int n, Mode mode);

/// int_0^inf |F1|^2 r^2 dr for the mode's normalization, by quadrature.
double normalization_integral(const ModelConfig& cfg, int n, Mode mode);

/// The printed <x> and <x^2> brackets.
XExpectations x_expectations(int n, int L);

/// Q(n,L)/Q(n+1,L) and Q(n,L)/Q(n-1,L) as printed; q2 = 0 at n = 0.
QRatios q_ratios(int n, int L);

/// f_n(r) = r F1_n(r) with consistent normalization (int f^2 dr = 1).
double radial_function(const ModelConfig& cfg, int n, double r);

/// int_0^inf f_n f_k r^power dr by quadrature (power >= -(2L+2)).
double radial_moment(const ModelConfig& cfg, int n, int k, int power);

double first_order(const ModelConfig& cfg, int n, Mode mode);

/// PaperLiteral ignores basis_size. Consistent needs basis_size >= n+5: the
/// off-diagonal sum runs over the H0 eigenvectors of the Laguerre basis.
SecondOrder second_order(const ModelConfig& cfg, int n, Mode mode, int basis_size = kDefaultBasis);

/// Off-diagonal sum restricted to bound eigenstates k < k_max, k != n.
double bound_state_offdiag(const ModelConfig& cfg, int n, int k_max);

BasisCorrections basis_corrections(const ModelConfig& cfg, int n, int basis_size);

EnergyBreakdown total_energy(const ModelConfig& cfg, int n, Mode mode,
                             int basis_size = kDefaultBasis);

/// particle * sqrt(offset + lambda), NoRealEnergy when the radicand is
/// below -kRadicandSlack.
double energy_from_lambda(const ModelConfig& cfg, double lambda);

}  // namespace spectrum
}  // namespace pdspec
