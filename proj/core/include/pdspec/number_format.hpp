#pragma once

#include <string>

namespace pdspec {

/// Shortest decimal text that parses back to the same double.
/// Throws pdspec::Error for NaN or infinity.
std::string format_double(double value);

}  // namespace pdspec
