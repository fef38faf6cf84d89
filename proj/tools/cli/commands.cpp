#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "pdspec/closed_forms.hpp"
#include "pdspec/error.hpp"
#include "pdspec/number_format.hpp"
#include "pdspec/oracle.hpp"
#include "pdspec/spectrum.hpp"

namespace pdspec::cli {
namespace {

using nlohmann::ordered_json;

double finite(double x) {
  if (!std::isfinite(x)) throw Error("refusing to emit a non-finite number");
  return x == 0.0 ? 0.0 : x;  // no "-0.0" in reports
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json model_json(const ModelConfig& m) {
  ordered_json j;
  j["M"] = finite(m.M);
  j["mu"] = finite(m.mu);
  j["A"] = finite(m.A);
  j["B"] = finite(m.B);
  j["L"] = m.L;
  j["branch"] = sign_text(m.branch);
  j["particle"] = sign_text(m.particle);
  return j;
}

void check_n_list(const std::vector<int>& ns) {
  if (ns.empty()) throw DomainError("--n: at least one radial quantum number is required");
  for (int n : ns)
    if (n < 0) throw DomainError("--n: radial quantum numbers must be >= 0");
}

}  // namespace

std::string cmd_spectrum(const RunConfig& cfg) {
  validate(cfg.model);
  check_n_list(cfg.n_list);

  std::vector<EnergyBreakdown> rows;
  for (int n : cfg.n_list) rows.push_back(spectrum::total_energy(cfg.model, n, cfg.mode, cfg.basis));

  if (cfg.output == OutputFormat::Csv) {
    std::ostringstream os;
    os << "n,mode,eps0,eps1,eps2_diag,eps2_offdiag,total,basis_size\n";
    for (const auto& r : rows)
      os << r.n << ',' << to_string(r.mode) << ',' << format_double(r.eps0) << ','
         << format_double(r.eps1) << ',' << format_double(r.eps2_diag) << ','
         << format_double(r.eps2_offdiag) << ',' << format_double(r.total) << ',' << r.basis_size
         << '\n';
    return os.str();
  }
  ordered_json doc;
  doc["command"] = "spectrum";
  doc["model"] = model_json(cfg.model);
  doc["mode"] = to_string(cfg.mode);
  // Paper rows are energy-level terms; consistent rows are operator-eigenvalue
  // terms whose sum maps to the energy through the square root.
  doc["level"] = cfg.mode == Mode::PaperLiteral ? "energy" : "lambda";
  auto& arr = doc["rows"] = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["n"] = r.n;
    j["eps0"] = finite(r.eps0);
    j["eps1"] = finite(r.eps1);
    j["eps2_diag"] = finite(r.eps2_diag);
    j["eps2_offdiag"] = finite(r.eps2_offdiag);
    j["total"] = finite(r.total);
    j["basis_size"] = r.basis_size;
    arr.push_back(std::move(j));
  }
  return dump(doc);
}

std::string cmd_audit(const RunConfig& cfg) {
  const AuditReport report = closed_forms::audit(cfg.n_max, cfg.L_max);
  return cfg.output == OutputFormat::Csv ? closed_forms::to_csv(report) : closed_forms::to_json(report);
}

std::string cmd_oracle(const RunConfig& cfg) {
  check_n_list(cfg.n_list);
  OracleSpec spec = cfg.oracle;
  spec.basis_size = cfg.basis;
  const int k_max = *std::max_element(cfg.n_list.begin(), cfg.n_list.end()) + 1;
  const OracleResult res = oracle::solve(cfg.model, spec, k_max);

  for (int k : cfg.n_list)
    if (k >= static_cast<int>(res.lambdas.size()))
      throw DomainError("--n: state " + std::to_string(k) + " is not bound for B = 0 (only " +
                        std::to_string(res.lambdas.size()) + " found)");

  const auto conv = [&](int k) {
    return k < static_cast<int>(res.convergence_estimate.size()) ? res.convergence_estimate[k] : 0.0;
  };

  if (cfg.output == OutputFormat::Csv) {
    std::ostringstream os;
    os << "k,lambda,epsilon,convergence_estimate\n";
    for (int k : cfg.n_list) {
      const auto& eps = res.epsilons[k];
      os << k << ',' << format_double(res.lambdas[k]) << ','
         << (eps ? format_double(*eps) : std::string("undefined")) << ',' << format_double(conv(k))
         << '\n';
    }
    return os.str();
  }
  ordered_json doc;
  doc["command"] = "oracle";
  doc["model"] = model_json(cfg.model);
  doc["method"] = oracle::to_string(res.method);
  if (res.method == OracleMethod::FiniteDifference) {
    doc["grid_points"] = spec.grid_points;
    doc["r_max"] = finite(res.r_max);
    doc["tail"] = finite(res.tail);
  } else {
    doc["basis_size"] = spec.basis_size;
  }
  auto& arr = doc["rows"] = ordered_json::array();
  for (int k : cfg.n_list) {
    ordered_json j;
    j["k"] = k;
    j["lambda"] = finite(res.lambdas[k]);
    const auto& eps = res.epsilons[k];
    j["epsilon"] = eps ? ordered_json(finite(*eps)) : ordered_json(nullptr);
    j["convergence_estimate"] = finite(conv(k));
    if (k < static_cast<int>(res.observed_order.size())) j["observed_order"] = finite(res.observed_order[k]);
    arr.push_back(std::move(j));
  }
  return dump(doc);
}

std::string cmd_compare(const RunConfig& cfg) {
  validate(cfg.model);
  check_n_list(cfg.n_list);
  if (cfg.n_list.size() != 1) throw DomainError("compare: --n takes exactly one radial quantum number");
  const int n = cfg.n_list.front();
  if (cfg.etas.empty()) throw DomainError("compare: --eta list is empty");

  const auto curve = oracle::perturbation_error_curve(cfg.model, n, cfg.etas, cfg.basis);
  struct Row {
    ErrorCurvePoint p;
    double eps_paper, eps_consistent;
  };
  std::vector<Row> rows;
  for (const auto& p : curve) {
    ModelConfig scaled = cfg.model;
    scaled.B = p.eta * cfg.model.B;
    rows.push_back({p, spectrum::total_energy(scaled, n, Mode::PaperLiteral).total,
                    spectrum::total_energy(scaled, n, Mode::Consistent, cfg.basis).total});
  }

  if (cfg.output == OutputFormat::Csv) {
    std::ostringstream os;
    os << "eta,lambda_oracle,lambda_rs2,rs2_error,eps_paper_literal,eps_consistent\n";
    for (const auto& r : rows)
      os << format_double(r.p.eta) << ',' << format_double(r.p.lambda_oracle) << ','
         << format_double(r.p.lambda_rs2) << ',' << format_double(r.p.rs2_error) << ','
         << format_double(r.eps_paper) << ',' << format_double(r.eps_consistent) << '\n';
    return os.str();
  }
  ordered_json doc;
  doc["command"] = "compare";
  doc["model"] = model_json(cfg.model);
  doc["n"] = n;
  doc["basis_size"] = cfg.basis;
  auto& arr = doc["rows"] = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["eta"] = finite(r.p.eta);
    j["lambda_oracle"] = finite(r.p.lambda_oracle);
    j["lambda_rs2"] = finite(r.p.lambda_rs2);
    j["rs2_error"] = finite(r.p.rs2_error);
    j["eps_paper_literal"] = finite(r.eps_paper);
    j["eps_consistent"] = finite(r.eps_consistent);
    arr.push_back(std::move(j));
  }
  return dump(doc);
}

}  // namespace pdspec::cli
