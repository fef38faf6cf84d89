#pragma once

#include <vector>

namespace pdspec {

/// Identifies the associated Laguerre polynomial L_n^alpha.
struct LaguerreIndex {
  int n = 0;
  double alpha = 0.0;
};

namespace laguerre {

inline constexpr int kMaxDegree = 200;
inline constexpr double kMaxArgument = 1.0e4;

/// L_n^alpha(x) by the upward three-term recurrence in the degree.
double eval(LaguerreIndex idx, double x);

/// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x); exactly 0 for n = 0.
double deriv(LaguerreIndex idx, double x);

/// L_0^alpha(x), ..., L_{n_max}^alpha(x) from a single recurrence sweep.
std::vector<double> sequence(int n_max, double alpha, double x);

/// x L_n - [(2n+alpha+1) L_n - (n+1) L_{n+1} - (n+alpha) L_{n-1}].
///
/// Zero in exact arithmetic; the L_{-1} term is taken as 0 at n = 0.
double recurrence_residual(LaguerreIndex idx, double x);

/// Magnitude of the largest term entering recurrence_residual, for scaling.
double recurrence_scale(LaguerreIndex idx, double x);

}  // namespace laguerre
}  // namespace pdspec
