#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "pdspec/error.hpp"
#include "pdspec/spectrum.hpp"

namespace {

using namespace pdspec;
using pdspec::testing::Gen;
namespace sp = pdspec::spectrum;

ModelConfig cfg_of(double M, double mu, double A, double B, int L) {
  ModelConfig c;
  c.M = M;
  c.mu = mu;
  c.A = A;
  c.B = B;
  c.L = L;
  return c;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Random bound-state configuration with A*B >= 0 on either branch.
ModelConfig random_cfg(Gen& g, int L_max = 3) {
  ModelConfig c;
  c.M = g.real(0.5, 3.0);
  c.branch = g.sign();
  c.mu = g.real(0.3, 1.5) * c.branch;
  c.A = g.real(0.3, 1.5);
  c.B = g.integer(0, 3) ? g.log_real(1e-4, 0.05) : 0.0;
  c.L = g.integer(0, L_max);
  return c;
}

TEST(Spectrum, UnperturbedEnergyExamples) {
  EXPECT_EQ(sp::unperturbed_energy(cfg_of(1, 0, 0.7, 0.3, 0), 3), 1.0);
  for (int L : {0, 2, 5}) EXPECT_DOUBLE_EQ(sp::unperturbed_energy(cfg_of(1.7, 0.9, 0.4, 0, L), 0), 1.7);
  EXPECT_DOUBLE_EQ(sp::unperturbed_energy(cfg_of(1, 1, 0.5, 0, 0), 1), std::sqrt(1.1875));
  ModelConfig anti = cfg_of(1, 1, 0.5, 0, 0);
  anti.particle = -1;
  EXPECT_DOUBLE_EQ(sp::unperturbed_energy(anti, 1), -std::sqrt(1.1875));
}

TEST(Spectrum, NoRealEnergyCarriesRadicand) {
  const ModelConfig c = cfg_of(0.1, 1, 0.2, 1, 0);
  try {
    sp::unperturbed_energy(c, 0);
    FAIL() << "expected NoRealEnergy";
  } catch (const NoRealEnergy& e) {
    EXPECT_NEAR(e.radicand(), 0.01 - 3.0, 1e-15);
  }
}

TEST(Spectrum, ValidationNamesConstraint) {
  try {
    validate(cfg_of(1, 1, 0, 0, 0));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("mu*A > 0"), std::string::npos) << e.what();
  }
  ModelConfig neg = cfg_of(1, 1, 0.5, 0, 0);
  neg.branch = -1;
  EXPECT_THROW(validate(neg), DomainError);
  EXPECT_THROW(validate(cfg_of(-1, 1, 1, 0, 0)), DomainError);
  EXPECT_THROW(validate(cfg_of(1, 1, 1, 0, kMaxOrbital + 1)), DomainError);
  EXPECT_THROW(validate(cfg_of(1, 1, std::nan(""), 0, 0)), DomainError);
  EXPECT_THROW(sp::build_state(cfg_of(1, 1, 1, 0, 0), -1, Mode::Consistent), DomainError);
  EXPECT_THROW(sp::second_order(cfg_of(1, 1, 1, 0.1, 0), 3, Mode::Consistent, 7), DomainError);
  EXPECT_EQ(parse_mode("paper"), Mode::PaperLiteral);
  EXPECT_EQ(parse_mode("consistent"), Mode::Consistent);
  EXPECT_THROW(parse_mode("exact"), DomainError);
}

TEST(Spectrum, NormalizationExamples) {
  const ModelConfig c0 = cfg_of(1, 1, 1, 0, 0);
  EXPECT_DOUBLE_EQ(sp::build_state(c0, 0, Mode::PaperLiteral).Q, 2.0);
  EXPECT_DOUBLE_EQ(sp::build_state(c0, 0, Mode::Consistent).Q, 2.0);
  const ModelConfig c1 = cfg_of(1, 1, 1, 0, 1);
  EXPECT_LE(rel(sp::build_state(c1, 0, Mode::PaperLiteral).Q / sp::build_state(c1, 0, Mode::Consistent).Q,
                std::sqrt(27.0 / 8.0)),
            1e-14);
}

TEST(Spectrum, BracketExamples) {
  EXPECT_EQ(sp::x_expectations(1, 0).mean_x, 4.0);
  EXPECT_EQ(sp::x_expectations(0, 0).mean_x2, 6.0);
  EXPECT_EQ(sp::x_expectations(0, 2).mean_x, 6.0);
  EXPECT_EQ(sp::x_expectations(0, 2).mean_x2, 42.0);
  EXPECT_DOUBLE_EQ(sp::q_ratios(0, 0).q1, 4.0 * std::sqrt(2.0));
  EXPECT_EQ(sp::q_ratios(0, 0).q2, 0.0);
  EXPECT_DOUBLE_EQ(sp::q_ratios(1, 0).q2, 0.25 * std::sqrt(0.5));
  EXPECT_DOUBLE_EQ(sp::q_ratios(0, 3).q1, (25.0 / 16.0) * std::sqrt(8.0));
}

TEST(Spectrum, QRatiosAreRatiosOfPrintedQ) {
  for (int L = 0; L <= 4; ++L)
    for (int n = 0; n <= 10; ++n) {
      const ModelConfig c = cfg_of(1, 0.8, 1.3, 0, L);
      const double q = sp::build_state(c, n, Mode::PaperLiteral).Q;
      EXPECT_LE(rel(sp::q_ratios(n, L).q1, q / sp::build_state(c, n + 1, Mode::PaperLiteral).Q), 1e-13);
      if (n > 0)
        EXPECT_LE(rel(sp::q_ratios(n, L).q2, q / sp::build_state(c, n - 1, Mode::PaperLiteral).Q), 1e-13);
    }
}

TEST(Spectrum, FirstOrderExamples) {
  EXPECT_DOUBLE_EQ(sp::first_order(cfg_of(1, 1, 1, 0.01, 0), 0, Mode::PaperLiteral), -0.02);
  EXPECT_LE(rel(sp::first_order(cfg_of(1, 1, 1, 0.01, 0), 0, Mode::Consistent), 0.03), 1e-13);
  for (Mode m : {Mode::PaperLiteral, Mode::Consistent})
    for (int n : {0, 1, 3}) EXPECT_EQ(sp::first_order(cfg_of(1, 1, 0.6, 0, 1), n, m), 0.0);
}

TEST(Spectrum, SecondOrderExamples) {
  const ModelConfig c = cfg_of(1, 1, 1, 0.1, 0);
  EXPECT_DOUBLE_EQ(sp::second_order(c, 0, Mode::PaperLiteral).diag, -0.015);
  const double expected = 16.0 * 2.0 / (sp::unperturbed_energy(c, 0) - sp::unperturbed_energy(c, 1));
  EXPECT_DOUBLE_EQ(sp::second_order(c, 0, Mode::PaperLiteral).offdiag, expected);
  for (Mode m : {Mode::PaperLiteral, Mode::Consistent})
    for (int n : {0, 2}) {
      const SecondOrder so = sp::second_order(cfg_of(1, 1, 0.6, 0, 1), n, m);
      EXPECT_EQ(so.diag, 0.0);
      EXPECT_EQ(so.offdiag, 0.0);
    }
}

TEST(Spectrum, TotalEnergyAtZeroFieldSlope) {
  for (Mode m : {Mode::PaperLiteral, Mode::Consistent})
    for (int n = 0; n <= 4; ++n) {
      const ModelConfig c = cfg_of(1, 1, 0.5, 0, 1);
      const EnergyBreakdown e = sp::total_energy(c, n, m);
      EXPECT_EQ(e.eps1, 0.0);
      EXPECT_EQ(e.eps2_diag, 0.0);
      EXPECT_EQ(e.eps2_offdiag, 0.0);
      EXPECT_LE(rel(e.total, sp::unperturbed_energy(c, n)), 1e-15) << n;
      EXPECT_EQ(e.basis_size, m == Mode::Consistent ? sp::kDefaultBasis : 0);
    }
}

TEST(Spectrum, PaperLiteralTotalIsAdditive) {
  Gen g(41);
  for (int c = 0; c < 100; ++c) {
    const ModelConfig cfg = random_cfg(g);
    const int n = g.integer(0, 5);
    const EnergyBreakdown e = sp::total_energy(cfg, n, Mode::PaperLiteral);
    EXPECT_EQ(e.total, e.eps0 + e.eps1 + e.eps2_diag + e.eps2_offdiag);
    EXPECT_EQ(e.eps0, sp::unperturbed_energy(cfg, n));
  }
}

TEST(Spectrum, PerturbationOperatorsReconstructBracket) {
  Gen g(42);
  for (int c = 0; c < 200; ++c) {
    ModelConfig cfg = random_cfg(g);
    cfg.B = g.real(-1.0, 1.0);
    const double mu = cfg.effective_mu();
    const auto con = PerturbationOperators::consistent(cfg);
    // -mu^2 (A + B r)^2 + mu B + 2 (L+1) mu B, coefficient by coefficient.
    EXPECT_NEAR(con.c0, -mu * mu * cfg.A * cfg.A + mu * cfg.B + 2 * (cfg.L + 1) * mu * cfg.B,
                1e-14 * (mu * mu * cfg.A * cfg.A + std::abs(mu * cfg.B) * (2 * cfg.L + 3)));
    EXPECT_DOUBLE_EQ(con.h1_coefficient, -2 * mu * mu * cfg.A * cfg.B);
    EXPECT_DOUBLE_EQ(con.h2_coefficient, -mu * mu * cfg.B * cfg.B);
    const double r = g.real(0.0, 20.0);
    const double bracket = -mu * mu * (cfg.A + cfg.B * r) * (cfg.A + cfg.B * r) + mu * cfg.B * (2 * cfg.L + 3);
    EXPECT_NEAR(con.evaluate(r), bracket, 1e-12 * (1 + std::abs(bracket) + mu * mu * cfg.B * cfg.B * r * r));
    const auto lit = PerturbationOperators::paper_literal(cfg);
    EXPECT_DOUBLE_EQ(lit.h2_coefficient, -mu * mu * cfg.A * cfg.A * cfg.B * cfg.B);
    EXPECT_EQ(lit.h1_coefficient, con.h1_coefficient);
  }
}

TEST(SpectrumProperty, QuantizationCondition) {
  Gen g(43);
  for (int c = 0; c < 300; ++c) {
    const ModelConfig cfg = random_cfg(g, kMaxOrbital);
    const int n = g.integer(0, 30);
    const UnperturbedState st = sp::build_state(cfg, n, Mode::PaperLiteral);
    const double muA = cfg.effective_mu() * cfg.A;
    EXPECT_LE(rel(st.a1, muA * (cfg.L + 1) / (n + cfg.L + 1)), 1e-14);
    const double a2sq = 2 * muA * (cfg.L + 1);
    // Terminating Kummer series: (L+1) - a2^2/(2 a1) = -n.
    EXPECT_NEAR((cfg.L + 1) - a2sq / (2 * st.a1) + n, 0.0, 1e-12 * (n + cfg.L + 1));
    EXPECT_LE(rel(st.lambda0, -st.a1 * st.a1), 1e-15);
    EXPECT_LE(rel(st.scale_s, 1 / (2 * st.a1)), 1e-15);
  }
}

TEST(SpectrumProperty, NormalizationIntegral) {
  for (int L = 0; L <= 3; ++L)
    for (int n = 0; n <= 8; ++n) {
      const ModelConfig c = cfg_of(1, 1.1, 0.7, 0.01, L);
      EXPECT_NEAR(sp::normalization_integral(c, n, Mode::Consistent), 1.0, 1e-10) << n << "," << L;
      const double ratio = std::pow((1.0 + 2 * L) / (L + 1.0), 3);
      EXPECT_LE(rel(sp::normalization_integral(c, n, Mode::PaperLiteral), ratio), 1e-10) << n << "," << L;
      if (L == 0)
        EXPECT_EQ(sp::build_state(c, n, Mode::PaperLiteral).Q, sp::build_state(c, n, Mode::Consistent).Q);
    }
}

TEST(SpectrumProperty, EigenfunctionsAreOrthonormal) {
  Gen g(44);
  for (int c = 0; c < 6; ++c) {
    const ModelConfig cfg = random_cfg(g);
    for (int n = 0; n <= 8; ++n)
      for (int k = n; k <= 8; ++k) {
        const double ip = sp::radial_moment(cfg, n, k, 0);
        if (n == k)
          EXPECT_NEAR(ip, 1.0, 1e-10);
        else
          EXPECT_LE(std::abs(ip), 1e-9) << "n=" << n << " k=" << k;
      }
  }
}

TEST(SpectrumProperty, PrintedCorrectionsIgnoreA) {
  Gen g(45);
  for (int c = 0; c < 200; ++c) {
    ModelConfig a = random_cfg(g);
    a.B = g.log_real(1e-4, 0.1);
    ModelConfig b = a;
    b.A = 2 * a.A;
    const int n = g.integer(0, 10);
    EXPECT_EQ(sp::first_order(a, n, Mode::PaperLiteral), sp::first_order(b, n, Mode::PaperLiteral));
    EXPECT_EQ(sp::second_order(a, n, Mode::PaperLiteral).diag, sp::second_order(b, n, Mode::PaperLiteral).diag);
  }
}

TEST(SpectrumProperty, BranchFlipEqualsMomentFlip) {
  Gen g(46);
  for (int c = 0; c < 60; ++c) {
    ModelConfig plus = random_cfg(g);
    plus.branch = +1;
    plus.mu = std::abs(plus.mu);
    ModelConfig minus = plus;
    minus.branch = -1;
    minus.mu = -plus.mu;
    const int n = g.integer(0, 3);
    for (Mode m : {Mode::PaperLiteral, Mode::Consistent}) {
      const EnergyBreakdown a = sp::total_energy(plus, n, m, 12);
      const EnergyBreakdown b = sp::total_energy(minus, n, m, 12);
      EXPECT_EQ(a.eps0, b.eps0);
      EXPECT_EQ(a.eps1, b.eps1);
      EXPECT_EQ(a.eps2_diag, b.eps2_diag);
      EXPECT_EQ(a.eps2_offdiag, b.eps2_offdiag);
      EXPECT_EQ(a.total, b.total);
    }
  }
}

TEST(SpectrumProperty, AntiparticleMirrorsParticle) {
  Gen g(47);
  for (int c = 0; c < 60; ++c) {
    ModelConfig p = random_cfg(g);
    ModelConfig a = p;
    a.particle = -1;
    const int n = g.integer(0, 3);
    for (Mode m : {Mode::PaperLiteral, Mode::Consistent}) {
      double particle = 0.0;
      try {
        particle = sp::total_energy(p, n, m, 12).total;
      } catch (const NoRealEnergy&) {
        // Strong perturbations can leave no real root: then neither branch has one.
        EXPECT_THROW(sp::total_energy(a, n, m, 12), NoRealEnergy);
        continue;
      }
      EXPECT_EQ(sp::total_energy(a, n, m, 12).total, -particle);
    }
  }
}

// For E = A + B r the ground state r^{L+1} exp(-mu A r - mu B r^2 / 2) is exact
// with lambda = -mu^2 A^2 + mu B (2L+3), i.e. eps = M; second order must
// therefore cancel and the consistent total land on M.
TEST(SpectrumProperty, GroundStateIsExact) {
  Gen g(48);
  for (int c = 0; c < 40; ++c) {
    ModelConfig cfg = random_cfg(g);
    cfg.B = g.log_real(1e-4, 0.05);
    const EnergyBreakdown e = sp::total_energy(cfg, 0, Mode::Consistent, 30);
    const double mu = cfg.effective_mu();
    EXPECT_LE(rel(e.eps0 + e.eps1, -mu * mu * cfg.A * cfg.A + mu * cfg.B * (2 * cfg.L + 3)), 1e-12);
    EXPECT_LE(std::abs(e.eps2_diag + e.eps2_offdiag), 1e-10 * std::abs(e.eps2_diag)) << c;
    EXPECT_LE(rel(e.total, cfg.M), 1e-12) << c;
  }
}

TEST(SpectrumProperty, BoundOnlySumMissesContinuum) {
  const ModelConfig c = cfg_of(1, 1, 1, 0.05, 0);
  const double full = sp::second_order(c, 0, Mode::Consistent, 30).offdiag;
  const double bound = sp::bound_state_offdiag(c, 0, 40);
  EXPECT_LT(full, bound);  // both negative; the continuum adds more
  EXPECT_LT(bound, 0.0);
}

}  // namespace
