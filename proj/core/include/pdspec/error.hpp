#pragma once

#include <stdexcept>
#include <string>

namespace pdspec {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition or configuration invariant was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical kernel failed, or a solver diagnostic tripped.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The energy map ε = ±sqrt(radicand) has a negative radicand.
class NoRealEnergy : public Error {
 public:
  NoRealEnergy(const std::string& what, double radicand)
      : Error(what), radicand_(radicand) {}

  double radicand() const noexcept { return radicand_; }

 private:
  double radicand_;
};

}  // namespace pdspec
