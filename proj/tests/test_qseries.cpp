#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rrq/numerics.hpp"
#include "rrq/qseries.hpp"
#include "rrq/special.hpp"

using namespace rrq;

namespace {

// Euler's pentagonal number series for prod (1 - q^n).
double pentagonal(double q) {
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double sign = k % 2 ? -1.0 : 1.0;
    sum += sign * (std::pow(q, k * (3.0 * k - 1.0) / 2.0) + std::pow(q, k * (3.0 * k + 1.0) / 2.0));
  }
  return sum;
}

double log_product(double q) {
  double s = 0.0;
  double qn = q;
  for (int n = 1; n < 200000 && qn > 1e-300; ++n, qn *= q) s += std::log1p(-qn);
  return s;
}

}  // namespace

TEST(Nome, RejectsOutOfRange) {
  EXPECT_THROW(Nome(0.0), DomainError);
  EXPECT_THROW(Nome(1.0), DomainError);
  EXPECT_THROW(Nome(-0.2), DomainError);
  EXPECT_THROW(Nome::from_log(0.0), DomainError);
}

TEST(Nome, Conventions) {
  EXPECT_NEAR(Nome::from_r(4.0).value(), std::exp(-2.0 * M_PI), 1e-17);
  EXPECT_NEAR(Nome::from_r_doubled(1.0).value(), std::exp(-2.0 * M_PI), 1e-17);
  EXPECT_NEAR(Nome(0.3).pow(5.0).value(), std::pow(0.3, 5), 1e-16);
}

TEST(RamanujanF, PropertyMatchesPentagonalSeries) {
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> qp(0.001, 0.8);
  for (int i = 0; i < 200; ++i) {
    const double q = qp(rng);
    EXPECT_NEAR(ramanujan_f(Nome(q)), pentagonal(q), 1e-13) << "q = " << q;
  }
}

TEST(RamanujanF, LogSpaceNearOneMatchesDirectProduct) {
  for (double q : {0.9, 0.95, 0.99, 0.999}) {
    const double oracle = log_product(q);
    EXPECT_NEAR(log_ramanujan_f(Nome(q)), oracle, 1e-11 * std::abs(oracle)) << "q = " << q;
  }
}

TEST(DedekindEta, ValueAtI) {
  const double oracle = rrq::gamma(0.25) / (2.0 * std::pow(M_PI, 0.75));
  EXPECT_NEAR(dedekind_eta(1.0), oracle, 1e-14);
}

TEST(DedekindEta, PropertyInversion) {
  // eta(i/t) = sqrt(t) eta(i t)
  std::mt19937 rng(67);
  std::uniform_real_distribution<double> tp(0.05, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double t = tp(rng);
    EXPECT_NEAR(dedekind_eta(1.0 / t), std::sqrt(t) * dedekind_eta(t), 1e-13 * dedekind_eta(1.0 / t));
  }
}

TEST(Rrcf, RamanujanPoint) {
  const double s5 = std::sqrt(5.0);
  EXPECT_NEAR(rrcf(Nome::from_r_doubled(1.0)), -(1.0 + s5) / 2.0 + std::sqrt((5.0 + s5) / 2.0), 1e-15);
}

TEST(Rrcf, PropertyMatchesContinuedFraction) {
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> qp(0.001, 0.9);
  for (int i = 0; i < 200; ++i) {
    const double q = qp(rng);
    EXPECT_NEAR(rrcf(Nome(q)), rrcf_cf_oracle(Nome(q), 2000), 1e-13) << "q = " << q;
  }
}

TEST(Rrcf, ApproachesGoldenLimit) {
  EXPECT_NEAR(rrcf(Nome(0.999)), kRrcfLimit, 1e-12);
  EXPECT_LT(rrcf(Nome(0.999)), kRrcfLimit);
  // strictly increasing until the limit is reached in double precision near q = 0.8
  double prev = 0.0;
  for (double q = 0.01; q < 0.75; q += 0.01) {
    const double r = rrcf(Nome(q));
    EXPECT_GT(r, prev);
    prev = r;
  }
}

TEST(U, TwoRoutesAgree) {
  std::mt19937 rng(73);
  std::uniform_real_distribution<double> qp(0.001, 0.95);
  for (int i = 0; i < 100; ++i) {
    const double q = qp(rng);
    const double v = u_of_q(Nome(q));
    // R^{-5} - 11 - R^5 cancels near q = 1; the floor is the rounding of its O(10) terms
    EXPECT_NEAR(u_from_rrcf(rrcf(Nome(q))), v, 1e-11 * v + 1e-13);
  }
}

TEST(U, VanishesAtGoldenLimit) {
  EXPECT_NEAR(u_from_rrcf(kRrcfLimit), 0.0, 1e-12);
  // gap-aware form keeps relative accuracy close to the limit
  const double gap = 1e-9;
  const double v = u_from_rrcf(kRrcfLimit - gap, gap);
  EXPECT_GT(v, 0.0);
  const double slope = 5.0 * std::pow(kRrcfLimit, -6.0) + 5.0 * std::pow(kRrcfLimit, 4.0);
  EXPECT_NEAR(v, slope * gap, 1e-6 * slope * gap);
}

TEST(RrcfDerivative, PropertyMatchesFiniteDifference) {
  std::mt19937 rng(79);
  std::uniform_real_distribution<double> qp(0.02, 0.8);
  for (int i = 0; i < 50; ++i) {
    const double q = qp(rng);
    const Derivative d = differentiate([](double x) { return rrcf(Nome(x)); }, q, PrecisionContext{});
    // the difference quotient carries ~1e-11 rounding where R is flat
    EXPECT_NEAR(rrcf_derivative(Nome(q)), d.value, 1e-8 * std::abs(d.value) + 1e-10);
  }
}

TEST(ModulusNome, PrintedDerivativeHasReversedSign) {
  const double k = 0.4;
  const Nome q = nome_from_modulus(k);
  auto q_of_k = [](double kk) { return nome_from_modulus(kk).value(); };
  const Derivative d = differentiate(q_of_k, k, PrecisionContext{});
  EXPECT_GT(d.value, 0.0);
  EXPECT_NEAR(-dq_dk(k, q), d.value, 1e-8 * d.value);
}

TEST(ModulusNome, InconsistentPairRejected) {
  EXPECT_THROW(dq_dk(0.4, Nome(0.5)), DomainError);
}
