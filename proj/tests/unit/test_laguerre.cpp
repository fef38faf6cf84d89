#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "generators.hpp"
#include "pdspec/error.hpp"
#include "pdspec/laguerre.hpp"

namespace {

using pdspec::DomainError;
using pdspec::LaguerreIndex;
using pdspec::testing::Gen;
using pdspec::testing::linspace;
namespace lag = pdspec::laguerre;

using Big = boost::multiprecision::cpp_bin_float_50;

std::uint64_t binomial(int n, int k) {
  std::uint64_t c = 1;
  for (int j = 1; j <= k; ++j) c = c * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
  return c;
}

// Terminating 1F1(-n; alpha+1; x) rescaled to L_n^alpha, summed in 50 digits.
double kummer_laguerre(int n, int alpha, double x) {
  Big term = 1, sum = 1;
  for (int k = 0; k < n; ++k) {
    term *= Big(k - n) * Big(x) / (Big(alpha + 1 + k) * Big(k + 1));
    sum += term;
  }
  // Gamma(n+alpha+1) / (n! Gamma(alpha+1)) = C(n+alpha, n)
  Big c = 1;
  for (int j = 1; j <= n; ++j) c = c * Big(alpha + j) / Big(j);
  return static_cast<double>(sum * c);
}

TEST(Laguerre, Examples) {
  EXPECT_EQ(lag::eval({0, 7.0}, 3.5), 1.0);
  EXPECT_EQ(lag::eval({1, 3.0}, 2.0), 2.0);
  EXPECT_EQ(lag::eval({2, 1.0}, 0.0), 3.0);
  EXPECT_EQ(lag::deriv({0, 1.0}, 4.2), 0.0);
  EXPECT_DOUBLE_EQ(lag::deriv({1, 1.0}, 0.7), -1.0);
  EXPECT_DOUBLE_EQ(lag::deriv({2, 1.0}, 1.0), -2.0);
  for (auto [idx, x] : {std::pair{LaguerreIndex{1, 3.0}, 2.5}, {LaguerreIndex{5, 9.0}, 10.0},
                        {LaguerreIndex{0, 1.0}, 1.0}})
    EXPECT_LE(std::abs(lag::recurrence_residual(idx, x)), 1e-12 * lag::recurrence_scale(idx, x));
}

TEST(Laguerre, SequenceMatchesEval) {
  const auto seq = lag::sequence(30, 5.0, 7.25);
  ASSERT_EQ(seq.size(), 31u);
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(seq[n], lag::eval({n, 5.0}, 7.25)) << n;
}

TEST(Laguerre, RejectsBadArguments) {
  EXPECT_THROW(lag::eval({-1, 0.0}, 1.0), DomainError);
  EXPECT_THROW(lag::eval({lag::kMaxDegree + 1, 0.0}, 1.0), DomainError);
  EXPECT_THROW(lag::eval({2, -0.5}, 1.0), DomainError);
  EXPECT_THROW(lag::eval({2, 0.0}, -1.0), DomainError);
  EXPECT_THROW(lag::eval({2, 0.0}, std::nan("")), DomainError);
  EXPECT_THROW(lag::eval({2, 0.0}, 2 * lag::kMaxArgument), DomainError);
  EXPECT_THROW(lag::deriv({2, 0.0}, std::numeric_limits<double>::infinity()), DomainError);
}

TEST(LaguerreProperty, ValueAtZeroIsExactBinomial) {
  for (int alpha = 0; alpha <= 40; ++alpha)
    for (int n = 0; n + alpha <= 40; ++n)
      EXPECT_EQ(lag::eval({n, double(alpha)}, 0.0), double(binomial(n + alpha, n)))
          << "n=" << n << " alpha=" << alpha;
}

TEST(LaguerreProperty, RecurrenceResidualIsRounding) {
  const auto xs = linspace(0.0, 200.0, 100);
  double worst = 0.0;
  for (int n = 0; n <= 50; ++n)
    for (int alpha = 0; alpha <= 41; ++alpha)
      for (double x : xs) {
        const LaguerreIndex idx{n, double(alpha)};
        const double rel = std::abs(lag::recurrence_residual(idx, x)) / lag::recurrence_scale(idx, x);
        worst = std::max(worst, rel);
        ASSERT_LE(rel, 1e-12) << "n=" << n << " alpha=" << alpha << " x=" << x;
      }
  RecordProperty("worst_relative_residual", std::to_string(worst));
}

TEST(LaguerreProperty, DerivativeMatchesCentralDifference) {
  Gen gen(11);
  const double h = 1e-6;
  for (int c = 0; c < 2000; ++c) {
    const int n = gen.integer(0, 20);
    const double alpha = gen.integer(0, 9);
    const double x = gen.real(1e-3, 60.0);
    const double fd = (lag::eval({n, alpha}, x + h) - lag::eval({n, alpha}, x - h)) / (2 * h);
    const double d = lag::deriv({n, alpha}, x);
    const double scale = std::abs(d);  // d == 0 only for n == 0, where fd is exactly 0 too
    ASSERT_LE(std::abs(fd - d), 1e-5 * scale) << "case " << c << " n=" << n << " alpha=" << alpha
                                              << " x=" << x;
  }
}

TEST(LaguerreProperty, MatchesTerminatingKummerSeries) {
  Gen gen(12);
  for (int c = 0; c < 1500; ++c) {
    const int n = gen.integer(0, 30);
    const int alpha = gen.integer(0, 41);
    const double x = gen.real(0.0, 4.0 * n + 2 * alpha + 10.0);
    const double ref = kummer_laguerre(n, alpha, x);
    const double got = lag::eval({n, double(alpha)}, x);
    ASSERT_LE(std::abs(got - ref), 1e-10 * std::abs(ref))
        << "case " << c << " n=" << n << " alpha=" << alpha << " x=" << x;
  }
}

}  // namespace
