#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pdspec {

enum class Family { I, J };

/// One printed row of the Laguerre integral tables:
///   I(eta, xi) = int_0^inf e^{-x} x^{2L+eta} L_n^{2L+xi} L_i^{2L+xi} dx
///   J(eta, xi) = int_0^inf e^{-x} x^{2L+eta} L_n^{2L+xi} (d/dx L_i^{2L+xi}) dx
/// with shift = i - n.
struct IntegralId {
  Family family = Family::I;
  int eta = 1;
  int xi = 1;
  int shift = 0;

  friend bool operator==(const IntegralId&, const IntegralId&) = default;
};

enum class Verdict { Match, Mismatch, Degenerate };

struct AuditRecord {
  IntegralId id;
  int n = 0;
  int L = 0;
  std::optional<double> closed_form;    // nullopt: printed formula is 0/0
  double quadrature = 0.0;
  std::optional<double> rel_deviation;  // nullopt when degenerate
  Verdict verdict = Verdict::Match;
};

struct VerdictCounts {
  int match = 0;
  int mismatch = 0;
  int degenerate = 0;

  int total() const noexcept { return match + mismatch + degenerate; }
  void add(Verdict v) noexcept;
};

struct AuditReport {
  int n_max = 0;
  int L_max = 0;
  std::vector<AuditRecord> records;
  VerdictCounts summary;
};

namespace closed_forms {

inline constexpr int kMaxAuditN = 30;
inline constexpr int kMaxAuditL = 10;
inline constexpr double kMatchTolerance = 1e-9;

/// Every printed row, in audit order (family, eta, shift).
std::span<const IntegralId> appendix_ids();

bool is_valid(const IntegralId& id) noexcept;

/// "I(2,1)" style label.
std::string label(const IntegralId& id);
std::string to_string(Verdict v);

/// The printed formula evaluated verbatim with exact rational arithmetic.
/// Returns nullopt when the printed expression is 0/0 at (n, L). When
/// n + shift < 0 the partner polynomial is identically zero and so is the
/// returned value.
std::optional<double> closed_form_value(const IntegralId& id, int n, int L);

/// The defining integral by Gauss-Laguerre quadrature (alpha = 0), with the
/// node count chosen from the integrand's polynomial degree. Accepts any
/// shift, not only the printed rows.
double quadrature_value(const IntegralId& id, int n, int L);

/// Same integral with an explicit node count; must satisfy 2m-1 >= degree.
double quadrature_value(const IntegralId& id, int n, int L, int nodes);

/// Polynomial degree of the integrand (weight e^{-x} excluded).
int integrand_degree(const IntegralId& id, int n, int L);

/// Natural magnitude (n+2L+1)!/n! used as the floor of the relative scale.
double natural_scale(int n, int L);

AuditRecord audit_one(const IntegralId& id, int n, int L);

/// One record per (row, n <= n_max, L <= L_max) with n + shift >= 0.
AuditReport audit(int n_max, int L_max);

std::string to_csv(const AuditReport& report);
std::string to_json(const AuditReport& report);

}  // namespace closed_forms
}  // namespace pdspec
