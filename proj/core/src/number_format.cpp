#include "pdspec/number_format.hpp"

#include <charconv>
#include <cmath>

#include "pdspec/error.hpp"

namespace pdspec {

std::string format_double(double value) {
  if (!std::isfinite(value)) throw Error("refusing to serialize a non-finite number");
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  if (result.ec != std::errc()) throw Error("format_double: conversion failed");
  return std::string(buf, result.ptr);
}

}  // namespace pdspec
