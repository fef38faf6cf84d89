#include "pdspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pdspec/error.hpp"
#include "pdspec/sturmian_basis.hpp"
#include "tridiagonal.hpp"

namespace pdspec::oracle {
namespace {

struct Potential {
  double coulomb;      // a2^2
  double centrifugal;  // L(L+1)
  double linear;       // 2 mu^2 A B
  double quadratic;    // mu^2 B^2

  double operator()(double r) const {
    return -coulomb / r + centrifugal / (r * r) + (linear + quadratic * r) * r;
  }
};

Potential make_potential(const ModelConfig& cfg) {
  const double mu = cfg.effective_mu();
  return {cfg.coulomb_strength(), cfg.L * (cfg.L + 1.0), 2.0 * mu * mu * cfg.A * cfg.B,
          mu * mu * cfg.B * cfg.B};
}

void validate_oracle_config(const ModelConfig& cfg) {
  if (!std::isfinite(cfg.M) || !std::isfinite(cfg.mu) || !std::isfinite(cfg.A) ||
      !std::isfinite(cfg.B) || !(cfg.M > 0.0))
    throw DomainError("oracle: M > 0 and finite mu, A, B required");
  if (cfg.L < 0 || cfg.L > kMaxOrbital) throw DomainError("oracle: L out of range");
  if ((cfg.branch != 1 && cfg.branch != -1) || (cfg.particle != 1 && cfg.particle != -1))
    throw DomainError("oracle: branch and particle must be +1 or -1");
}

// a1 of the highest requested state, 0 when there is no attraction.
double target_decay(const ModelConfig& cfg, int k_max) {
  const double mu_a = cfg.effective_mu() * cfg.A;
  if (!(mu_a > 0.0)) return 0.0;
  return mu_a * (cfg.L + 1.0) / (k_max + cfg.L);
}

std::vector<double> fd_eigenvalues(const Potential& v, double r_max, int points, int count) {
  const double h = r_max / (points + 1);
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> diag(static_cast<std::size_t>(points));
  std::vector<double> off(static_cast<std::size_t>(points) - 1, -inv_h2);
  for (int i = 0; i < points; ++i) diag[static_cast<std::size_t>(i)] = 2.0 * inv_h2 + v((i + 1) * h);
  return detail::lowest_tridiagonal_eigenvalues(diag, off, count);
}

// exp(-int_{r_t}^{r_max} sqrt(V - lambda) dr) from the outermost turning point.
double wkb_tail(const Potential& v, double lambda, double r_max) {
  if (v(r_max) <= lambda) return 1.0;
  constexpr int kSamples = 4000;
  const double dr = r_max / kSamples;
  double integral = 0.0;
  double prev = std::sqrt(v(r_max) - lambda);
  for (int i = kSamples - 1; i >= 1; --i) {
    const double excess = v(i * dr) - lambda;
    if (excess <= 0.0) break;
    const double curr = std::sqrt(excess);
    integral += 0.5 * (prev + curr) * dr;
    prev = curr;
  }
  return std::exp(-integral);
}

std::vector<double> richardson(const std::vector<double>& coarse, const std::vector<double>& fine) {
  std::vector<double> out(coarse.size());
  for (std::size_t i = 0; i < coarse.size(); ++i) out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
  return out;
}

std::size_t reported_count(const ModelConfig& cfg, const std::vector<double>& lambdas) {
  if (cfg.B != 0.0) return lambdas.size();
  std::size_t count = 0;
  while (count < lambdas.size() && lambdas[count] < 0.0) ++count;
  return count;
}

void fill_energies(const ModelConfig& cfg, OracleResult& res) {
  res.epsilons.clear();
  for (double lambda : res.lambdas) {
    const double radicand = cfg.energy_offset() + lambda;
    if (radicand < -spectrum::kRadicandSlack) {
      res.epsilons.emplace_back(std::nullopt);
    } else {
      res.epsilons.emplace_back(cfg.particle * std::sqrt(std::max(radicand, 0.0)));
    }
  }
}

OracleResult solve_fd(const ModelConfig& cfg, const OracleSpec& spec, int k_max) {
  if (spec.grid_points < kMinGridPoints)
    throw DomainError("oracle: FD grid needs at least " + std::to_string(kMinGridPoints) + " points");
  const Potential v = make_potential(cfg);
  const double a1 = target_decay(cfg, k_max);
  double r_max = spec.r_max ? *spec.r_max : (a1 > 0.0 ? 30.0 / a1 : 50.0);
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw DomainError("oracle: r_max must be > 0");

  const int n1 = spec.grid_points;
  const int n2 = 2 * n1 + 1;  // h/2 on the same [0, r_max]
  OracleResult res;
  res.method = OracleMethod::FiniteDifference;
  std::vector<double> coarse, fine;
  for (int attempt = 0;; ++attempt) {
    coarse = fd_eigenvalues(v, r_max, n1, k_max);
    fine = fd_eigenvalues(v, r_max, n2, k_max);
    res.lambdas = spec.richardson ? richardson(coarse, fine) : coarse;
    res.lambdas.resize(reported_count(cfg, res.lambdas));
    res.tail = 0.0;
    for (double lambda : res.lambdas) res.tail = std::max(res.tail, wkb_tail(v, lambda, r_max));
    if (res.tail <= kTailTolerance) break;
    if (spec.r_max || attempt >= 24) {
      std::ostringstream os;
      os << "oracle: r_max=" << r_max << " violates the tail condition (measured tail " << res.tail
         << " > " << kTailTolerance << ")";
      throw ConvergenceError(os.str());
    }
    r_max *= 1.25;
  }
  res.r_max = r_max;

  const std::size_t count = res.lambdas.size();
  res.convergence_estimate.assign(count, 0.0);
  res.observed_order.assign(count, 0.0);
  if (spec.estimate_convergence && count > 0) {
    const std::vector<double> finest = fd_eigenvalues(v, r_max, 2 * n2 + 1, k_max);
    const std::vector<double> refined = spec.richardson ? richardson(fine, finest) : fine;
    for (std::size_t i = 0; i < count; ++i) {
      res.convergence_estimate[i] = std::abs(res.lambdas[i] - refined[i]);
      res.observed_order[i] = std::log2(std::abs(coarse[i] - fine[i]) / std::abs(fine[i] - finest[i]));
    }
  }
  fill_energies(cfg, res);
  return res;
}

std::vector<double> basis_eigenvalues(const ModelConfig& cfg, double beta, int size, int k_max) {
  const Potential v = make_potential(cfg);
  const SturmianBasis basis = build_sturmian_basis(cfg.L, beta, size);
  const GeneralizedEigen eig =
      solve_generalized(radial_hamiltonian(basis, v.coulomb, v.linear, v.quadratic), basis.overlap);
  const int count = std::min(k_max, size);
  return {eig.values.data(), eig.values.data() + count};
}

OracleResult solve_basis(const ModelConfig& cfg, const OracleSpec& spec, int k_max) {
  if (spec.basis_size < kMinBasisSize)
    throw DomainError("oracle: Laguerre basis needs at least " + std::to_string(kMinBasisSize) + " functions");
  if (k_max > spec.basis_size) throw DomainError("oracle: k_max exceeds basis size");
  const double mu_a = cfg.effective_mu() * cfg.A;
  const double beta = spec.beta ? *spec.beta : (mu_a > 0.0 ? mu_a : 1.0);

  OracleResult res;
  res.method = OracleMethod::LaguerreBasis;
  res.lambdas = basis_eigenvalues(cfg, beta, spec.basis_size, k_max);
  res.lambdas.resize(reported_count(cfg, res.lambdas));
  res.convergence_estimate.assign(res.lambdas.size(), 0.0);
  if (spec.estimate_convergence && !res.lambdas.empty()) {
    const int refined_size = std::min(kMaxBasisSize, spec.basis_size + (spec.basis_size + 1) / 2);
    const std::vector<double> refined = basis_eigenvalues(cfg, beta, refined_size, k_max);
    for (std::size_t i = 0; i < res.lambdas.size(); ++i)
      res.convergence_estimate[i] = std::abs(res.lambdas[i] - refined[i]);
  }
  fill_energies(cfg, res);
  return res;
}

}  // namespace

std::string to_string(OracleMethod method) {
  return method == OracleMethod::FiniteDifference ? "fd" : "basis";
}

OracleMethod parse_method(const std::string& text) {
  if (text == "fd" || text == "FiniteDifference") return OracleMethod::FiniteDifference;
  if (text == "basis" || text == "LaguerreBasis") return OracleMethod::LaguerreBasis;
  throw DomainError("unknown oracle method '" + text + "' (expected fd or basis)");
}

OracleResult solve(const ModelConfig& cfg, const OracleSpec& spec, int k_max) {
  validate_oracle_config(cfg);
  if (k_max < 1) throw DomainError("oracle: k_max must be >= 1");
  return spec.method == OracleMethod::FiniteDifference ? solve_fd(cfg, spec, k_max)
                                                       : solve_basis(cfg, spec, k_max);
}

std::vector<ErrorCurvePoint> perturbation_error_curve(const ModelConfig& cfg, int n,
                                                      const std::vector<double>& etas,
                                                      int basis_size) {
  validate(cfg);
  if (cfg.A * cfg.B < 0.0)
    throw DomainError("perturbation_error_curve: A*B < 0 makes 2 mu^2 A B r unbounded below");
  for (double eta : etas)
    if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("eta values must lie in [0, 1]");

  const BasisCorrections rs = spectrum::basis_corrections(cfg, n, basis_size);
  OracleSpec spec;
  spec.method = OracleMethod::LaguerreBasis;
  spec.basis_size = basis_size;
  spec.beta = spectrum::build_state(cfg, n, Mode::Consistent).a1;
  spec.estimate_convergence = false;

  std::vector<ErrorCurvePoint> out;
  out.reserve(etas.size());
  for (double eta : etas) {
    ModelConfig scaled = cfg;
    scaled.B = eta * cfg.B;
    ErrorCurvePoint p;
    p.eta = eta;
    p.lambda_oracle = basis_eigenvalues(scaled, *spec.beta, basis_size, n + 1)[static_cast<std::size_t>(n)];
    p.lambda_rs2 = rs.lambda0 + eta * rs.lambda1 + eta * eta * (rs.diag2 + rs.offdiag2);
    p.rs2_error = std::abs(p.lambda_rs2 - p.lambda_oracle);
    out.push_back(p);
  }
  return out;
}

}  // namespace pdspec::oracle
