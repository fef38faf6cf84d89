#include "cli/app.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/run_config.hpp"
#include "pdspec/error.hpp"
#include "pdspec/number_format.hpp"

namespace pdspec::cli {
namespace {

// --config must be applied before flags are bound so that the file supplies
// the defaults and explicit flags override it.
std::optional<std::string> find_config(const std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  return path;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join_reals(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_double(v[i]);
  return s;
}

/// String views of the list/enum flags; numeric flags bind directly.
struct TextFlags {
  std::string n, branch, particle, mode, eta, output, method, config;
  std::optional<double> rmax;
};

void add_common(CLI::App* cmd, RunConfig& cfg, TextFlags& t) {
  cmd->add_option("--output", t.output, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");
  cmd->add_option("--config", t.config,
                  "JSON config file whose keys mirror these flags; explicit flags win");
}

void add_model(CLI::App* cmd, RunConfig& cfg, TextFlags& t) {
  cmd->add_option("--M", cfg.model.M, "Rest mass M (natural units, hbar = c = 1; dimensionless)")
      ->capture_default_str();
  cmd->add_option("--mu", cfg.model.mu, "Anomalous magnetic moment mu (natural units)")
      ->capture_default_str();
  cmd->add_option("--A", cfg.model.A, "Field offset A in E(r) = A + B r (natural units)")
      ->capture_default_str();
  cmd->add_option("--B", cfg.model.B, "Field slope B in E(r) = A + B r (natural units)")
      ->capture_default_str();
  cmd->add_option("--L", cfg.model.L, "Orbital quantum number L (integer, 0..20)")
      ->capture_default_str();
  cmd->add_option("--n", t.n, "Comma-separated radial quantum numbers (integers >= 0)")
      ->capture_default_str();
  cmd->add_option("--branch", t.branch, "Spin branch sign: + or -")
      ->check(CLI::IsMember({"+", "-"}))
      ->capture_default_str();
  cmd->add_option("--particle", t.particle, "Particle (+) or antiparticle (-) energy branch")
      ->check(CLI::IsMember({"+", "-"}))
      ->capture_default_str();
  cmd->add_option("--basis", cfg.basis, "Laguerre basis size (dimensionless count)")
      ->capture_default_str();
}

RunConfig finish(RunConfig cfg, const TextFlags& t, bool model_flags) {
  cfg.output = parse_output(t.output);
  if (!model_flags) return cfg;
  cfg.n_list = parse_int_list(t.n);
  cfg.model.branch = parse_sign(t.branch);
  cfg.model.particle = parse_sign(t.particle);
  if (!t.mode.empty()) cfg.mode = parse_mode(t.mode);
  if (!t.method.empty()) cfg.oracle.method = oracle::parse_method(t.method);
  if (!t.eta.empty()) cfg.etas = parse_real_list(t.eta);
  if (t.rmax) cfg.oracle.r_max = t.rmax;
  cfg.oracle.basis_size = cfg.basis;
  return cfg;
}

void emit(const RunConfig& cfg, const std::string& report, std::ostream& out) {
  if (!cfg.out_path) {
    out << report;
    return;
  }
  std::ofstream file(*cfg.out_path, std::ios::binary);
  if (!file) throw DomainError("--out: cannot open '" + *cfg.out_path + "' for writing");
  file << report;
  if (!file) throw Error("--out: write failed for '" + *cfg.out_path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    if (const auto path = find_config(args)) apply_config_file(*path, cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  TextFlags t;
  t.n = join_ints(cfg.n_list);
  t.branch = sign_text(cfg.model.branch);
  t.particle = sign_text(cfg.model.particle);
  t.mode = to_string(cfg.mode);
  t.eta = join_reals(cfg.etas);
  t.output = cfg.output == OutputFormat::Csv ? "csv" : "json";
  t.method = oracle::to_string(cfg.oracle.method);
  t.rmax = cfg.oracle.r_max;

  CLI::App app{"Bound-state spectrum of a neutral spin-1/2 particle in the radial field E(r) = A + B r"};
  app.name("pdspec");
  app.require_subcommand(1);

  std::function<std::string(const RunConfig&)> action;
  bool model_flags = true;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Perturbative energy levels per radial quantum number");
  add_model(spectrum_cmd, cfg, t);
  spectrum_cmd->add_option("--mode", t.mode, "Correction formulas: paper (as printed) or consistent")
      ->check(CLI::IsMember({"paper", "consistent"}))
      ->capture_default_str();
  add_common(spectrum_cmd, cfg, t);
  spectrum_cmd->callback([&] { action = cmd_spectrum; });

  auto* audit_cmd = app.add_subcommand("audit", "Check the tabulated Laguerre integrals against quadrature");
  audit_cmd->add_option("--n-max", cfg.n_max, "Largest Laguerre degree n (integer, 0..30)")
      ->capture_default_str();
  audit_cmd->add_option("--L-max", cfg.L_max, "Largest orbital number L (integer, 0..10)")
      ->capture_default_str();
  add_common(audit_cmd, cfg, t);
  audit_cmd->callback([&] {
    action = cmd_audit;
    model_flags = false;
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact eigenvalues of the full radial operator");
  add_model(oracle_cmd, cfg, t);
  oracle_cmd->add_option("--method", t.method, "Solver: fd (finite differences) or basis (Laguerre)")
      ->check(CLI::IsMember({"fd", "basis"}))
      ->capture_default_str();
  oracle_cmd->add_option("--grid", cfg.oracle.grid_points, "Finite-difference interior points (count)")
      ->capture_default_str();
  oracle_cmd->add_option("--rmax", t.rmax,
                         "Finite-difference cutoff radius (natural units; default: chosen from the "
                         "decay length until the tail test passes)");
  add_common(oracle_cmd, cfg, t);
  oracle_cmd->callback([&] { action = cmd_oracle; });

  auto* compare_cmd = app.add_subcommand(
      "compare", "Second-order perturbation theory vs exact diagonalization under B -> eta B");
  add_model(compare_cmd, cfg, t);
  compare_cmd->add_option("--eta", t.eta, "Comma-separated perturbation scales in [0, 1] (dimensionless)")
      ->capture_default_str();
  add_common(compare_cmd, cfg, t);
  compare_cmd->callback([&] { action = cmd_compare; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    const RunConfig final_cfg = finish(cfg, t, model_flags);
    emit(final_cfg, action(final_cfg), out);
    return kExitOk;
  } catch (const NoRealEnergy& e) {
    err << "error: no real energy: " << e.what() << '\n';
    return kExitNoRealEnergy;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace pdspec::cli
