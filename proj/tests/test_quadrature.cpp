#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rrq/quadrature.hpp"

using namespace rrq;

namespace {
const PrecisionContext ctx;
}

TEST(TanhSinh, SmoothPolynomialsAreExact) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> coef(-2.0, 2.0), end(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double c0 = coef(rng), c1 = coef(rng), c2 = coef(rng), c3 = coef(rng);
    double a = end(rng), b = end(rng);
    if (a > b) std::swap(a, b);
    auto antider = [&](double x) { return c0 * x + c1 * x * x / 2 + c2 * x * x * x / 3 + c3 * x * x * x * x / 4; };
    const double got = integrate_finite([&](double x) { return c0 + c1 * x + c2 * x * x + c3 * x * x * x; }, a, b,
                                        false, false, ctx);
    EXPECT_NEAR(got, antider(b) - antider(a), 1e-11);
  }
}

TEST(TanhSinh, InverseSquareRootSingularity) {
  EXPECT_NEAR(integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, true, false, ctx), 2.0, 1e-12);
}

TEST(TanhSinh, LogarithmicSingularity) {
  EXPECT_NEAR(integrate_finite([](double x) { return std::log(x); }, 0.0, 1.0, true, false, ctx), -1.0, 1e-12);
}

TEST(TanhSinh, EndpointDistancesAvoidCancellation) {
  // B(1/2, 1/2) = pi and B(1/3, 2/3) = 2 pi / sqrt 3 via the reflection formula.
  const double b1 = integrate_finite_ends(
      [](double, double da, double db) { return 1.0 / std::sqrt(da * db); }, 0.0, 1.0, ctx);
  EXPECT_NEAR(b1, M_PI, 1e-12);
  const double b2 = integrate_finite_ends(
      [](double, double da, double db) { return std::pow(da, -2.0 / 3.0) * std::pow(db, -1.0 / 3.0); }, 0.0, 1.0, ctx);
  EXPECT_NEAR(b2, 2.0 * M_PI / std::sqrt(3.0), 1e-10);
}

TEST(TanhSinh, ReversedAndEmptyIntervals) {
  auto f = [](double x) { return std::exp(x); };
  EXPECT_NEAR(integrate_finite(f, 1.0, 0.0, false, false, ctx), -(std::exp(1.0) - 1.0), 1e-13);
  EXPECT_EQ(integrate_finite(f, 0.5, 0.5, false, false, ctx), 0.0);
}

TEST(TanhSinh, NonFiniteIntegrandIsReported) {
  EXPECT_THROW(integrate_finite([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, false, false, ctx), NumericError);
}

TEST(ToInfinity, ExponentialDecay) {
  EXPECT_NEAR(integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0, ExponentialDecay{1.0}, ctx), 1.0, 1e-13);
  EXPECT_NEAR(integrate_to_infinity([](double x) { return x * std::exp(-2.0 * x); }, 1.0, ExponentialDecay{2.0}, ctx),
              0.75 * std::exp(-2.0), 1e-13);
}

TEST(ToInfinity, AlgebraicDecay) {
  EXPECT_NEAR(integrate_to_infinity([](double x) { return 1.0 / (x * x); }, 1.0, AlgebraicDecay{2.0}, ctx), 1.0, 1e-12);
  EXPECT_NEAR(integrate_to_infinity([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, AlgebraicDecay{2.0}, ctx),
              M_PI / 2.0, 1e-12);
  // slow t^{-7/6} decay, as in the sextic tail
  EXPECT_NEAR(integrate_to_infinity([](double x) { return std::pow(x, -7.0 / 6.0); }, 1.0, AlgebraicDecay{7.0 / 6.0}, ctx),
              6.0, 1e-8);
}

TEST(ToInfinity, NonIntegrableDecayRejected) {
  EXPECT_THROW(integrate_to_infinity([](double x) { return 1.0 / x; }, 1.0, AlgebraicDecay{1.0}, ctx), DivergenceError);
  EXPECT_THROW(integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0, ExponentialDecay{0.0}, ctx), DomainError);
}
