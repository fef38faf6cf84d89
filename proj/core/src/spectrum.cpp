#include "pdspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pdspec/error.hpp"
#include "pdspec/laguerre.hpp"
#include "pdspec/quadrature.hpp"
#include "pdspec/sturmian_basis.hpp"

namespace pdspec {

double ModelConfig::energy_offset() const noexcept {
  const double mu_eff = effective_mu();
  return M * M + mu_eff * mu_eff * A * A - mu_eff * B * (2 * L + 3);
}

namespace {

void validate_parameters(const ModelConfig& cfg) {
  if (!std::isfinite(cfg.M) || !std::isfinite(cfg.mu) || !std::isfinite(cfg.A) ||
      !std::isfinite(cfg.B))
    throw DomainError("M, mu, A and B must be finite real numbers");
  if (!(cfg.M > 0.0)) throw DomainError("mass M must be > 0");
  if (cfg.L < 0 || cfg.L > kMaxOrbital)
    throw DomainError("orbital quantum number L must be in [0, " + std::to_string(kMaxOrbital) + "]");
  if (cfg.branch != 1 && cfg.branch != -1) throw DomainError("branch must be +1 or -1");
  if (cfg.particle != 1 && cfg.particle != -1) throw DomainError("particle must be +1 or -1");
}

void check_n(int n) {
  if (n < 0 || n > laguerre::kMaxDegree - 2)
    throw DomainError("radial quantum number n out of range: " + std::to_string(n));
}

ModelConfig particle_branch(ModelConfig cfg) {
  cfg.particle = +1;
  return cfg;
}

double mu_a(const ModelConfig& cfg) { return cfg.effective_mu() * cfg.A; }

// n! / (n+2L+1)!
double factorial_ratio(int n, int L) {
  double out = 1.0;
  for (int k = n + 1; k <= n + 2 * L + 1; ++k) out /= k;
  return out;
}

double guarded_sqrt(double radicand, const char* what) {
  if (radicand < -spectrum::kRadicandSlack) {
    std::ostringstream os;
    os << "no real energy: " << what << " radicand " << radicand << " < 0";
    throw NoRealEnergy(os.str(), radicand);
  }
  return radicand > 0.0 ? std::sqrt(radicand) : 0.0;
}

}  // namespace

void validate(const ModelConfig& cfg) {
  validate_parameters(cfg);
  if (!(cfg.branch * cfg.mu * cfg.A > 0.0)) {
    std::ostringstream os;
    os << "bound states require branch*mu*A > 0 (mu*A > 0 on branch +1); got mu=" << cfg.mu
       << ", A=" << cfg.A << ", branch=" << cfg.branch;
    throw DomainError(os.str());
  }
}

std::string to_string(Mode mode) {
  return mode == Mode::PaperLiteral ? "paper" : "consistent";
}

Mode parse_mode(const std::string& text) {
  if (text == "paper" || text == "paper-literal" || text == "PaperLiteral") return Mode::PaperLiteral;
  if (text == "consistent" || text == "Consistent") return Mode::Consistent;
  throw DomainError("unknown mode '" + text + "' (expected paper or consistent)");
}

PerturbationOperators PerturbationOperators::paper_literal(const ModelConfig& cfg) {
  const double mu = cfg.effective_mu();
  return {-mu * mu * cfg.A * cfg.A + mu * cfg.B * (2 * cfg.L + 3), -2.0 * mu * mu * cfg.A * cfg.B,
          -mu * mu * cfg.A * cfg.A * cfg.B * cfg.B};
}

PerturbationOperators PerturbationOperators::consistent(const ModelConfig& cfg) {
  const double mu = cfg.effective_mu();
  return {-mu * mu * cfg.A * cfg.A + mu * cfg.B * (2 * cfg.L + 3), -2.0 * mu * mu * cfg.A * cfg.B,
          -mu * mu * cfg.B * cfg.B};
}

namespace spectrum {

double energy_from_lambda(const ModelConfig& cfg, double lambda) {
  return cfg.particle * guarded_sqrt(cfg.energy_offset() + lambda, "eps^2 = offset + lambda");
}

double unperturbed_energy(const ModelConfig& cfg, int n) {
  validate_parameters(cfg);
  check_n(n);
  const double N = n + cfg.L + 1.0;
  const double l1 = cfg.L + 1.0;
  const double mu = cfg.effective_mu();
  const double radicand = cfg.mass_term() + mu * mu * cfg.A * cfg.A * ((N * N - l1 * l1) / (N * N));
  return cfg.particle * guarded_sqrt(radicand, "unperturbed");
}

double normalization_constant(const ModelConfig& cfg, int n, Mode mode) {
  validate(cfg);
  check_n(n);
  const double factor = mode == Mode::PaperLiteral ? 1.0 + 2.0 * cfg.L : cfg.L + 1.0;
  const double N = n + cfg.L + 1.0;
  const double base = mu_a(cfg) * factor;
  return 2.0 / (N * N) * std::sqrt(base * base * base * factorial_ratio(n, cfg.L));
}

double normalization_integral(const ModelConfig& cfg, int n, Mode mode) {
  const double Q = normalization_constant(cfg, n, mode);
  const double s = (n + cfg.L + 1.0) / (2.0 * mu_a(cfg) * (cfg.L + 1.0));
  const QuadratureRule rule = quadrature::build_rule(2.0 * cfg.L + 2.0, n + 1);
  const double alpha = 2.0 * cfg.L + 1.0;
  const double integral = quadrature::integrate(rule, [&](double x) {
    const double l = laguerre::eval({n, alpha}, x);
    return l * l;
  });
  return Q * Q * s * s * s * integral;
}

UnperturbedState build_state(const ModelConfig& cfg, int n, Mode mode) {
  validate(cfg);
  check_n(n);
  const double N = n + cfg.L + 1.0;
  const double l1 = cfg.L + 1.0;
  UnperturbedState st;
  st.n = n;
  st.a1 = mu_a(cfg) * l1 / N;
  st.scale_s = N / (2.0 * mu_a(cfg) * l1);
  st.lambda0 = -mu_a(cfg) * mu_a(cfg) * l1 * l1 / (N * N);
  st.Q = normalization_constant(cfg, n, mode);
  if (mode == Mode::Consistent) {
    const double norm = normalization_integral(cfg, n, mode);
    if (std::abs(norm - 1.0) > kNormTolerance)
      throw ConvergenceError("consistent normalization check failed: integral = " +
                             std::to_string(norm));
  }
  return st;
}

XExpectations x_expectations(int n, int L) {
  const double N = n + L + 1.0;
  return {2.0 * N, 4.0 * N * N + (n + 1.0) * (n + 2.0 * L + 2.0) + n * (n + 2.0 * L + 1.0)};
}

QRatios q_ratios(int n, int L) {
  const double N = n + L + 1.0;
  QRatios q;
  const double up = (N + 1.0) / N;
  q.q1 = up * up * std::sqrt((n + 2.0 * L + 2.0) / (n + 1.0));
  if (n > 0) {
    const double down = (N - 1.0) / N;
    q.q2 = down * down * std::sqrt(n / (n + 2.0 * L + 1.0));
  }
  return q;
}

double radial_function(const ModelConfig& cfg, int n, double r) {
  const UnperturbedState st = build_state(cfg, n, Mode::Consistent);
  const double x = 2.0 * st.a1 * r;
  return r * st.Q * std::exp(-0.5 * x) * std::pow(x, cfg.L) *
         laguerre::eval({n, 2.0 * cfg.L + 1.0}, x);
}

double radial_moment(const ModelConfig& cfg, int n, int k, int power) {
  validate(cfg);
  check_n(n);
  check_n(k);
  const int L = cfg.L;
  if (power < -(2 * L + 2)) throw DomainError("radial_moment: power below -(2L+2)");
  const double l1 = L + 1.0;
  const double a_n = mu_a(cfg) * l1 / (n + l1);
  const double a_k = mu_a(cfg) * l1 / (k + l1);
  const double c = a_n + a_k;
  const double prefactor = normalization_constant(cfg, n, Mode::Consistent) *
                           normalization_constant(cfg, k, Mode::Consistent) *
                           std::pow(4.0 * a_n * a_k, L) * std::pow(c, -(2.0 * L + 3.0 + power));
  const QuadratureRule rule =
      quadrature::build_rule(2.0 * L + 2.0 + power, quadrature::nodes_for_degree(n + k));
  const double alpha = 2.0 * L + 1.0;
  const double integral = quadrature::integrate(rule, [&](double t) {
    return laguerre::eval({n, alpha}, 2.0 * a_n * t / c) * laguerre::eval({k, alpha}, 2.0 * a_k * t / c);
  });
  return prefactor * integral;
}

double first_order(const ModelConfig& cfg, int n, Mode mode) {
  validate(cfg);
  check_n(n);
  const double mu = cfg.effective_mu();
  if (mode == Mode::PaperLiteral) {
    const double N = n + cfg.L + 1.0;
    return cfg.particle * (-2.0 * mu * cfg.B * N * N / (1.0 + cfg.L));
  }
  const double coupling = 2.0 * mu * mu * cfg.A * cfg.B;
  if (coupling == 0.0) return 0.0;
  return coupling * radial_moment(cfg, n, n, 1);
}

BasisCorrections basis_corrections(const ModelConfig& cfg, int n, int basis_size) {
  validate(cfg);
  check_n(n);
  if (basis_size < n + 5)
    throw DomainError("consistent mode needs basis_size >= n+5 (n=" + std::to_string(n) +
                      ", basis_size=" + std::to_string(basis_size) + ")");
  const UnperturbedState st = build_state(cfg, n, Mode::Consistent);
  const SturmianBasis basis = build_sturmian_basis(cfg.L, st.a1, basis_size);
  const GeneralizedEigen eig =
      solve_generalized(radial_hamiltonian(basis, cfg.coulomb_strength(), 0.0, 0.0), basis.overlap);

  const double theta = eig.values[n];
  if (std::abs(theta - st.lambda0) > 1e-9 * std::abs(st.lambda0))
    throw ConvergenceError("Laguerre basis of size " + std::to_string(basis_size) +
                           " does not resolve state n=" + std::to_string(n));

  const double mu = cfg.effective_mu();
  const double c1 = 2.0 * mu * mu * cfg.A * cfg.B;
  const double c2 = mu * mu * cfg.B * cfg.B;
  const Eigen::VectorXd v = eig.vectors.col(n);
  const Eigen::VectorXd coupling = eig.vectors.transpose() * (c1 * (basis.r1 * v));

  BasisCorrections out;
  out.basis_size = basis_size;
  out.lambda0 = theta;
  out.lambda1 = coupling[n];
  out.diag2 = c2 * v.dot(basis.r2 * v);
  for (int k = 0; k < basis_size; ++k) {
    if (k == n) continue;
    const double gap = theta - eig.values[k];
    if (std::abs(gap) <= 1e-12 * std::max(1.0, std::abs(theta)))
      throw ConvergenceError("degenerate denominator in second-order sum at k=" + std::to_string(k));
    out.offdiag2 += coupling[k] * coupling[k] / gap;
  }
  return out;
}

double bound_state_offdiag(const ModelConfig& cfg, int n, int k_max) {
  validate(cfg);
  const double mu = cfg.effective_mu();
  const double c1 = 2.0 * mu * mu * cfg.A * cfg.B;
  if (c1 == 0.0) return 0.0;
  const double lambda_n = build_state(cfg, n, Mode::Consistent).lambda0;
  double sum = 0.0;
  for (int k = 0; k < k_max; ++k) {
    if (k == n) continue;
    const double element = c1 * radial_moment(cfg, k, n, 1);
    sum += element * element / (lambda_n - build_state(cfg, k, Mode::Consistent).lambda0);
  }
  return sum;
}

SecondOrder second_order(const ModelConfig& cfg, int n, Mode mode, int basis_size) {
  validate(cfg);
  check_n(n);
  if (mode == Mode::PaperLiteral) {
    const ModelConfig pos = particle_branch(cfg);
    const int L = cfg.L;
    const double N = n + L + 1.0;
    const double bracket = cfg.B * N / (2.0 * (1.0 + L));
    SecondOrder out;
    out.diag = -bracket * bracket * x_expectations(n, L).mean_x2;
    // With B = 0 the H1 couplings vanish identically, so the sum is zero even
    // though the printed closed form carries no B prefactor.
    if (cfg.B == 0.0) return out;

    const double e_n = unperturbed_energy(pos, n);
    const double up = std::pow((N + 1.0) / N, 4) * (n + 2.0 * L + 2.0) * (n + 1.0);
    const double gap_up = e_n - unperturbed_energy(pos, n + 1);
    if (gap_up == 0.0) throw ConvergenceError("degenerate denominator eps0_n - eps0_{n+1}");
    out.offdiag = up / gap_up;
    if (n > 0) {
      const double down = std::pow((N - 1.0) / N, 4) * n * (n + 2.0 * L + 1.0);
      const double gap_down = e_n - unperturbed_energy(pos, n - 1);
      if (gap_down == 0.0) throw ConvergenceError("degenerate denominator eps0_n - eps0_{n-1}");
      out.offdiag += down / gap_down;
    }
    out.diag *= cfg.particle;
    out.offdiag *= cfg.particle;
    return out;
  }

  if (basis_size < n + 5)
    throw DomainError("consistent mode needs basis_size >= n+5");
  const double mu = cfg.effective_mu();
  const double c2 = mu * mu * cfg.B * cfg.B;
  SecondOrder out;
  if (c2 == 0.0) return out;
  out.diag = c2 * radial_moment(cfg, n, n, 2);
  out.offdiag = basis_corrections(cfg, n, basis_size).offdiag2;
  return out;
}

EnergyBreakdown total_energy(const ModelConfig& cfg, int n, Mode mode, int basis_size) {
  validate(cfg);
  EnergyBreakdown out;
  out.n = n;
  out.mode = mode;
  if (mode == Mode::PaperLiteral) {
    out.eps0 = unperturbed_energy(cfg, n);
    out.eps1 = first_order(cfg, n, mode);
    const SecondOrder so = second_order(cfg, n, mode);
    out.eps2_diag = so.diag;
    out.eps2_offdiag = so.offdiag;
    out.total = out.eps0 + out.eps1 + out.eps2_diag + out.eps2_offdiag;
    return out;
  }
  out.basis_size = basis_size;
  out.eps0 = build_state(cfg, n, mode).lambda0;
  out.eps1 = first_order(cfg, n, mode);
  const SecondOrder so = second_order(cfg, n, mode, basis_size);
  out.eps2_diag = so.diag;
  out.eps2_offdiag = so.offdiag;
  out.total = energy_from_lambda(cfg, out.eps0 + out.eps1 + out.eps2_diag + out.eps2_offdiag);
  return out;
}

}  // namespace spectrum
}  // namespace pdspec
