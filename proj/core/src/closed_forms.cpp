#include "pdspec/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <sstream>

#include "json.hpp"
#include "pdspec/error.hpp"
#include "pdspec/laguerre.hpp"
#include "pdspec/number_format.hpp"
#include "pdspec/quadrature.hpp"

namespace pdspec {

void VerdictCounts::add(Verdict v) noexcept {
  switch (v) {
    case Verdict::Match: ++match; break;
    case Verdict::Mismatch: ++mismatch; break;
    case Verdict::Degenerate: ++degenerate; break;
  }
}

namespace closed_forms {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr std::array<IntegralId, 23> kAppendix = {{
    {Family::I, 0, 1, -1}, {Family::I, 0, 1, 0},  {Family::I, 0, 1, 1},
    {Family::I, 1, 1, 0},
    {Family::I, 2, 1, -1}, {Family::I, 2, 1, 0},  {Family::I, 2, 1, 1},
    {Family::I, 3, 1, -2}, {Family::I, 3, 1, -1}, {Family::I, 3, 1, 0},
    {Family::I, 3, 1, 1},  {Family::I, 3, 1, 2},
    {Family::J, 1, 1, -1}, {Family::J, 1, 1, 0},  {Family::J, 1, 1, 1},
    {Family::J, 2, 1, -1}, {Family::J, 2, 1, 0},  {Family::J, 2, 1, 1},
    {Family::J, 3, 1, -2}, {Family::J, 3, 1, -1}, {Family::J, 3, 1, 0},
    {Family::J, 3, 1, 1},  {Family::J, 3, 1, 2},
}};

cpp_int factorial(int k) {
  cpp_int out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

cpp_rational frac(const cpp_int& num, const cpp_int& den) { return cpp_rational(num, den); }

// Rows are transcribed term by term from the printed tables. A zero
// denominator anywhere makes the whole row indeterminate at this (n, L).
std::optional<cpp_rational> printed_row(const IntegralId& id, int n, int L) {
  const cpp_int base_num = factorial(n + 2 * L + 1);
  const cpp_int fn = factorial(n);
  const cpp_rational base = frac(base_num, fn);
  const cpp_int N = n;
  const cpp_int Lc = L;

  auto safe = [](const cpp_int& num, const cpp_int& den) -> std::optional<cpp_rational> {
    if (den == 0) return std::nullopt;
    return cpp_rational(num, den);
  };

  if (id.family == Family::I) {
    switch (id.eta) {
      case 0:
        if (id.shift == 1) return -frac(base_num, factorial(n + 1));
        if (id.shift == 0) {
          auto r = safe(2 * N + 2 * Lc, (N + 2 * Lc + 1) * (N + 2 * Lc));
          if (!r) return std::nullopt;
          return base * *r;
        }
        return -frac(factorial(n + 2 * L), fn);
      case 1:
        return base;
      case 2:
        if (id.shift == 1) return -frac(factorial(n + 2 * L + 2), fn);
        if (id.shift == 0) return 2 * base * (N + Lc + 1);
        return -frac(base_num, factorial(n - 1));
      case 3:
        switch (id.shift) {
          case 2: return base * (N + 2 * Lc + 2) * (N + 2 * Lc + 3);
          case 1: return -2 * base * (N + 2 * Lc + 2) * (2 * N + 2 * Lc + 3);
          case 0: return -2 * base * N * (N + 2 * Lc + 1);
          case -1: return 2 * base * N * (2 * N + 2 * Lc + 1);
          default: return base * N * (N - 1);
        }
    }
  } else {
    switch (id.eta) {
      case 1:
        if (id.shift == 1) {
          auto r = safe(base_num, fn * (N + 1));
          if (!r) return std::nullopt;
          return -*r * (2 * N + 2 * Lc + 1);
        }
        if (id.shift == 0) {
          auto r = safe(2 * N * (N + Lc + 1), (N + 2 * Lc + 1) * (N + 1));
          if (!r) return std::nullopt;
          return base * (*r + N + 2 * Lc + 2);
        } else {
          auto r = safe(2 * N + 2 * Lc + 1, N + 2 * Lc + 1);
          if (!r) return std::nullopt;
          return -base * *r;
        }
      case 2:
        if (id.shift == 1) return cpp_rational(0);
        if (id.shift == 0) return frac(N * base_num, fn);
        return -frac(N * base_num, fn);
      case 3:
        switch (id.shift) {
          case 2: return -base * N * (N - 1);
          case 1: {
            auto r = safe(N * N, N + 2 * Lc + 1);
            if (!r) return std::nullopt;
            return -base * (*r + 2 * N * (N + Lc));
          }
          case 0: return base * N * (3 * N + 4 * Lc + 3);
          case -1: return -base * N * (N + 2 * Lc + 2);
          default: return cpp_rational(0);
        }
    }
  }
  throw DomainError("closed_form_value: unreachable row");
}

void check(const IntegralId& id, int n, int L) {
  if (!is_valid(id)) throw DomainError("invalid integral id " + label(id));
  if (n < 0 || L < 0) throw DomainError("n and L must be non-negative");
}

// The defining integral exists for any shift and eta >= 0; only the printed
// closed forms are limited to the tabulated rows.
void check_integrand(const IntegralId& id, int n, int L) {
  if (id.eta < 0 || id.xi < 0) throw DomainError("integrand needs eta, xi >= 0, got " + label(id));
  if (n < 0 || L < 0) throw DomainError("n and L must be non-negative");
  if (n > laguerre::kMaxDegree || n + id.shift > laguerre::kMaxDegree)
    throw DomainError("integrand degree exceeds the Laguerre cap");
}

}  // namespace

std::span<const IntegralId> appendix_ids() { return kAppendix; }

bool is_valid(const IntegralId& id) noexcept {
  return std::find(kAppendix.begin(), kAppendix.end(), id) != kAppendix.end();
}

std::string label(const IntegralId& id) {
  std::ostringstream os;
  os << (id.family == Family::I ? 'I' : 'J') << '(' << id.eta << ',' << id.xi << ')';
  return os.str();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "MATCH";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::Degenerate: return "DEGENERATE";
  }
  return "?";
}

std::optional<double> closed_form_value(const IntegralId& id, int n, int L) {
  check(id, n, L);
  if (n + id.shift < 0) return 0.0;
  const auto value = printed_row(id, n, L);
  if (!value) return std::nullopt;
  return value->convert_to<double>();
}

int integrand_degree(const IntegralId& id, int n, int L) {
  const int i = n + id.shift;
  if (i < 0) return 0;
  const int partner = id.family == Family::J ? std::max(i - 1, 0) : i;
  return 2 * L + id.eta + n + partner;
}

double natural_scale(int n, int L) {
  double out = 1.0;
  for (int k = n + 1; k <= n + 2 * L + 1; ++k) out *= k;
  return out;
}

double quadrature_value(const IntegralId& id, int n, int L) {
  return quadrature_value(id, n, L, quadrature::nodes_for_degree(integrand_degree(id, n, L)));
}

double quadrature_value(const IntegralId& id, int n, int L, int nodes) {
  check_integrand(id, n, L);
  const int i = n + id.shift;
  if (i < 0) return 0.0;
  if (2 * nodes - 1 < integrand_degree(id, n, L))
    throw DomainError("quadrature_value: node count too small for integrand degree");
  const QuadratureRule rule = quadrature::build_rule(0.0, nodes);
  const double alpha = 2.0 * L + id.xi;
  const int power = 2 * L + id.eta;
  return quadrature::integrate(rule, [&](double x) {
    const double left = laguerre::eval({n, alpha}, x);
    const double right = id.family == Family::I ? laguerre::eval({i, alpha}, x)
                                                : laguerre::deriv({i, alpha}, x);
    return std::pow(x, power) * left * right;
  });
}

AuditRecord audit_one(const IntegralId& id, int n, int L) {
  AuditRecord rec;
  rec.id = id;
  rec.n = n;
  rec.L = L;
  rec.closed_form = closed_form_value(id, n, L);
  rec.quadrature = quadrature_value(id, n, L);
  if (!rec.closed_form) {
    rec.verdict = Verdict::Degenerate;
    return rec;
  }
  const double cf = *rec.closed_form;
  const double scale = std::max({std::abs(cf), std::abs(rec.quadrature), natural_scale(n, L)});
  rec.rel_deviation = std::abs(cf - rec.quadrature) / scale;
  rec.verdict = *rec.rel_deviation <= kMatchTolerance ? Verdict::Match : Verdict::Mismatch;
  return rec;
}

AuditReport audit(int n_max, int L_max) {
  if (n_max < 0 || n_max > kMaxAuditN)
    throw DomainError("audit: n_max must be in [0, " + std::to_string(kMaxAuditN) + "]");
  if (L_max < 0 || L_max > kMaxAuditL)
    throw DomainError("audit: L_max must be in [0, " + std::to_string(kMaxAuditL) + "]");
  AuditReport report;
  report.n_max = n_max;
  report.L_max = L_max;
  for (const IntegralId& id : kAppendix) {
    for (int n = 0; n <= n_max; ++n) {
      if (n + id.shift < 0) continue;
      for (int L = 0; L <= L_max; ++L) {
        report.records.push_back(audit_one(id, n, L));
        report.summary.add(report.records.back().verdict);
      }
    }
  }
  return report;
}

std::string to_csv(const AuditReport& report) {
  std::string out = "family,eta,xi,shift,n,L,closed_form,quadrature,rel_deviation,verdict\n";
  for (const AuditRecord& r : report.records) {
    out += r.id.family == Family::I ? "I" : "J";
    out += ',' + std::to_string(r.id.eta) + ',' + std::to_string(r.id.xi) + ',' +
           std::to_string(r.id.shift) + ',' + std::to_string(r.n) + ',' + std::to_string(r.L) + ',';
    out += r.closed_form ? format_double(*r.closed_form) : "degenerate";
    out += ',' + format_double(r.quadrature) + ',';
    out += r.rel_deviation ? format_double(*r.rel_deviation) : "undefined";
    out += ',' + to_string(r.verdict) + '\n';
  }
  return out;
}

std::string to_json(const AuditReport& report) {
  using nlohmann::ordered_json;
  auto number = [](double v) {
    format_double(v);  // rejects non-finite values
    return v;
  };
  ordered_json records = ordered_json::array();
  std::map<std::pair<std::string, int>, VerdictCounts> by_row;
  std::vector<std::pair<std::string, int>> row_order;
  for (const AuditRecord& r : report.records) {
    ordered_json j;
    j["family"] = r.id.family == Family::I ? "I" : "J";
    j["eta"] = r.id.eta;
    j["xi"] = r.id.xi;
    j["shift"] = r.id.shift;
    j["n"] = r.n;
    j["L"] = r.L;
    j["closed_form"] = r.closed_form ? ordered_json(number(*r.closed_form)) : ordered_json(nullptr);
    j["quadrature"] = number(r.quadrature);
    j["rel_deviation"] =
        r.rel_deviation ? ordered_json(number(*r.rel_deviation)) : ordered_json(nullptr);
    j["verdict"] = to_string(r.verdict);
    records.push_back(std::move(j));
    const auto key = std::make_pair(label(r.id), r.id.shift);
    if (!by_row.contains(key)) row_order.push_back(key);
    by_row[key].add(r.verdict);
  }
  ordered_json rows = ordered_json::array();
  for (const auto& key : row_order) {
    const VerdictCounts& c = by_row[key];
    rows.push_back({{"id", key.first}, {"shift", key.second}, {"records", c.total()},
                    {"MATCH", c.match}, {"MISMATCH", c.mismatch}, {"DEGENERATE", c.degenerate}});
  }
  ordered_json doc;
  doc["n_max"] = report.n_max;
  doc["L_max"] = report.L_max;
  doc["records"] = std::move(records);
  doc["summary"] = {{"records", report.summary.total()},
                    {"MATCH", report.summary.match},
                    {"MISMATCH", report.summary.mismatch},
                    {"DEGENERATE", report.summary.degenerate},
                    {"rows", std::move(rows)}};
  return doc.dump(2) + "\n";
}

}  // namespace closed_forms
}  // namespace pdspec
