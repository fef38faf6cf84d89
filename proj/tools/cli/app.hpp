#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNoRealEnergy = 2;

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdspec::cli
