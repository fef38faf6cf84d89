#pragma once

#include <string>

#include "cli/run_config.hpp"

namespace pdspec::cli {

/// Each command returns the full report text in the configured format.
/// Library exceptions propagate; the caller maps them to exit codes.
std::string cmd_spectrum(const RunConfig& cfg);
std::string cmd_audit(const RunConfig& cfg);
std::string cmd_oracle(const RunConfig& cfg);
std::string cmd_compare(const RunConfig& cfg);

}  // namespace pdspec::cli
