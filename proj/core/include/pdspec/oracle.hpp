#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdspec/spectrum.hpp"

namespace pdspec {

enum class OracleMethod { FiniteDifference, LaguerreBasis };

/// Discretization of the full radial operator
///   -d^2/dr^2 - 2 mu A (L+1)/r + L(L+1)/r^2 + 2 mu^2 A B r + mu^2 B^2 r^2.
struct OracleSpec {
  OracleMethod method = OracleMethod::FiniteDifference;
  int grid_points = 4000;         // FD interior points
  int basis_size = 30;            // LaguerreBasis functions
  std::optional<double> r_max;    // FD cutoff; default 30/a1 grown until the tail test passes
  std::optional<double> beta;     // basis scale; default a1 of the ground state
  bool richardson = true;         // FD: extrapolate grids h and h/2
  bool estimate_convergence = true;
};

struct OracleResult {
  OracleMethod method = OracleMethod::FiniteDifference;
  std::vector<double> lambdas;                 // ascending operator eigenvalues
  std::vector<std::optional<double>> epsilons; // particle*sqrt(offset + lambda); nullopt if no real root
  std::vector<double> convergence_estimate;    // |lambda(spec) - lambda(refined spec)|
  std::vector<double> observed_order;          // FD only: log2 of successive grid differences
  double r_max = 0.0;                          // FD only
  double tail = 0.0;                           // FD only: WKB tail e^{-int kappa dr} at r_max
};

struct ErrorCurvePoint {
  double eta = 0.0;
  double lambda_oracle = 0.0;
  double lambda_rs2 = 0.0;
  double rs2_error = 0.0;
};

namespace oracle {

inline constexpr double kTailTolerance = 1e-10;
inline constexpr int kMinGridPoints = 200;
inline constexpr int kMinBasisSize = 10;

std::string to_string(OracleMethod method);
OracleMethod parse_method(const std::string& text);

/// Lowest k_max eigenvalues of the radial operator. With B = 0 only the
/// negative (bound) ones are reported.
OracleResult solve(const ModelConfig& cfg, const OracleSpec& spec, int k_max);

/// Basis-closed comparison of second-order perturbation theory against exact
/// diagonalization in one shared Laguerre basis (beta = a1 of state n), with
/// the perturbation scaled as B -> eta B. Requires A*B >= 0.
std::vector<ErrorCurvePoint> perturbation_error_curve(const ModelConfig& cfg, int n,
                                                      const std::vector<double>& etas,
                                                      int basis_size = 30);

}  // namespace oracle
}  // namespace pdspec
