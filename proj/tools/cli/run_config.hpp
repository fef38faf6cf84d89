#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdspec/oracle.hpp"
#include "pdspec/spectrum.hpp"

namespace pdspec::cli {

enum class OutputFormat { Json, Csv };

/// Everything one command invocation needs. Defaults are the CLI defaults;
/// a JSON config file overrides them and explicit flags override the file.
struct RunConfig {
  ModelConfig model;
  std::vector<int> n_list{0};
  Mode mode = Mode::PaperLiteral;
  OracleSpec oracle;
  int basis = spectrum::kDefaultBasis;
  std::vector<double> etas{1.0, 0.5, 0.25};
  int n_max = 5;
  int L_max = 2;
  OutputFormat output = OutputFormat::Json;
  std::optional<std::string> out_path;
};

std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);
int parse_sign(const std::string& text);
std::string sign_text(int sign);
OutputFormat parse_output(const std::string& text);

/// Applies a JSON config document (keys mirror the long flag names, with
/// '-' or '_' accepted) on top of `cfg`. Unknown keys are rejected.
void apply_config_json(const std::string& json_text, RunConfig& cfg);
void apply_config_file(const std::string& path, RunConfig& cfg);

}  // namespace pdspec::cli
