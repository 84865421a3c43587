#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rrq/identities.hpp"
#include "rrq/modular.hpp"
#include "rrq/modular_checks.hpp"
#include "rrq/sextic.hpp"
#include "rrq/trig_modular.hpp"

using namespace rrq;

namespace {

const PrecisionContext ctx;

// k_r = theta_2(q)^2 / theta_3(q)^2 at q = exp(-pi sqrt r)
double theta_modulus(double r) {
  const double q = std::exp(-M_PI * std::sqrt(r));
  double t2 = 0.0, t3 = 1.0;
  for (int n = 0; n < 60; ++n) t2 += std::pow(q, n * (n + 1.0));
  for (int n = 1; n < 60; ++n) t3 += 2.0 * std::pow(q, double(n) * n);
  t2 *= 2.0 * std::pow(q, 0.25);
  return t2 * t2 / (t3 * t3);
}

}  // namespace

TEST(SingularModulus, KnownAlgebraicValues) {
  EXPECT_NEAR(singular_modulus(1.0), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(singular_modulus(2.0), std::sqrt(2.0) - 1.0, 1e-15);
  EXPECT_NEAR(singular_modulus(4.0), 3.0 - 2.0 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(singular_modulus(3.0), (std::sqrt(6.0) - std::sqrt(2.0)) / 4.0, 1e-15);
}

TEST(SingularModulus, PeriodRatioForSmallIntegers) {
  for (double r : {1.0, 2.0, 3.0, 4.0, 5.0}) {
    const ModulusPair p = singular_modulus_pair(r);
    EXPECT_NEAR(elliptic_k_from_complement(p.k) / elliptic_k_from_complement(p.kprime), std::sqrt(r), 1e-12);
  }
}

TEST(SingularModulus, PropertyMatchesThetaQuotient) {
  std::mt19937 rng(83);
  std::uniform_real_distribution<double> rp(0.05, 60.0);
  for (int i = 0; i < 100; ++i) {
    const double r = rp(rng);
    const double oracle = theta_modulus(r);
    EXPECT_NEAR(singular_modulus(r), oracle, 1e-12 * oracle) << "r = " << r;
    EXPECT_NEAR(modular_parameter(singular_modulus(r)), r, 1e-10 * r);
  }
}

TEST(SingularModulus, ReciprocalSwapsComplement) {
  const ModulusPair p = singular_modulus_pair(3.0), q = singular_modulus_pair(1.0 / 3.0);
  EXPECT_NEAR(q.k, p.kprime, 1e-14);
  EXPECT_NEAR(q.kprime, p.k, 1e-14);
  EXPECT_THROW(singular_modulus(0.0), DomainError);
}

TEST(SingularModulus, TinyModulusInLogSpace) {
  // k_r ~ 4 exp(-pi sqrt r / 2) once q is small
  const ModulusPair p = singular_modulus_pair(40000.0);
  EXPECT_NEAR(p.log_k, std::log(4.0) - M_PI * 200.0 / 2.0, 1e-9 * std::abs(p.log_k));
}

TEST(KleinJ, ClassNumberOneValues) {
  EXPECT_NEAR(klein_j(1.0), 1728.0, 1e-9 * 1728.0);
  EXPECT_NEAR(klein_j(2.0), 8000.0, 1e-9 * 8000.0);
  EXPECT_NEAR(klein_j(3.0), 54000.0, 1e-9 * 54000.0);
  EXPECT_NEAR(klein_j(4.0), 287496.0, 1e-9 * 287496.0);
}

TEST(KleinJ, PropertyFormsAgree) {
  std::mt19937 rng(89);
  std::uniform_real_distribution<double> rp(0.3, 8.0);
  for (int i = 0; i < 60; ++i) {
    const double r = rp(rng);
    const double k = singular_modulus(r);
    const double j = klein_j(r);
    EXPECT_NEAR(klein_j_lambda_form(k * k), j, 1e-8 * j);
    EXPECT_NEAR(klein_j_from_u(sextic_x_of_r(r)), j, 1e-8 * j);
    EXPECT_NEAR(std::exp(log_klein_j(r)), j, 1e-10 * j);
  }
}

TEST(KleinJ, InvariantUnderReciprocal) {
  EXPECT_NEAR(klein_j(0.25), klein_j(4.0), 1e-9 * klein_j(4.0));
}

TEST(Inversions, PropertyRoundTrips) {
  std::mt19937 rng(97);
  std::uniform_real_distribution<double> fp(0.01, 0.8), mp(0.05, 3.5), xp(0.5, 5e4), bp(0.5, 20.0);
  for (int i = 0; i < 25; ++i) {
    const double x = fp(rng) * rrcf_integral_limit();
    EXPECT_NEAR(rrcf_integral(F_of_x(x)), x, 1e-11 * x);
    const double y = mp(rng);
    EXPECT_NEAR(eta_tail_integral(std::sqrt(m_of_x(y))), y, 1e-11 * y);
    const double g = fp(rng) * rrcf_integral_limit();
    EXPECT_NEAR(0.2 * sextic_tail_integral(G_of_x(g)), g, 1e-10 * g);
    const double big_x = xp(rng);
    const double th = theta_of_X(big_x);
    EXPECT_NEAR(std::pow(4.0, -1.0 / 3.0) * incomplete_beta(th, {1.0 / 6.0, 2.0 / 3.0}), sextic_tail_integral(big_x),
                1e-10 * sextic_tail_integral(big_x));
    const double ratio = bp(rng);
    const double beta = beta_ratio_root({1.0 / 6.0, 1.0 / 6.0}, ratio);
    EXPECT_NEAR(incomplete_beta(1.0 - beta, {1.0 / 6.0, 1.0 / 6.0}) / incomplete_beta(beta, {1.0 / 6.0, 1.0 / 6.0}),
                ratio, 1e-10 * ratio);
  }
}

TEST(Inversions, LimitsAndDomains) {
  EXPECT_NEAR(rrcf_integral_limit(), 0.2 * std::pow(4.0, -1.0 / 3.0) * beta_complete(1.0 / 6.0, 2.0 / 3.0), 1e-15);
  EXPECT_NEAR(rrcf_integral(kRrcfLimit * (1.0 - 1e-12)), rrcf_integral_limit(), 1e-6);
  EXPECT_NEAR(eta_tail_integral(1e-9), eta_tail_limit(), 1e-6);
  EXPECT_THROW(F_of_x(rrcf_integral_limit() * 1.01), DomainError);
  EXPECT_THROW(F_of_x(-0.1), DomainError);
  EXPECT_THROW(m_of_x(eta_tail_limit() * 1.01), DomainError);
  EXPECT_THROW(theta_of_X(-1.0), DomainError);
  EXPECT_THROW(beta_ratio_root({1.0 / 6.0, 1.0 / 6.0}, -2.0), DomainError);
}

TEST(Inversions, FMatchesContinuedFractionAtSingularModuli) {
  for (double r : {1.0, 2.0, 4.0, 9.0}) {
    const double k = singular_modulus(r);
    const double arg = 0.6 * std::cbrt(2.0 * k) * gauss_2f1(1.0 / 3.0, 1.0 / 6.0, 7.0 / 6.0, k * k, ctx);
    EXPECT_NEAR(F_of_x(arg), rrcf(Nome::from_r(r)), 1e-12);
  }
}

TEST(Inversions, MIsDecreasing) {
  double prev = std::numeric_limits<double>::infinity();
  for (double x : {0.05, 0.1, 0.5, 1.0, 2.0, 4.0}) {
    const double m = m_of_x(x);
    EXPECT_LT(m, prev);
    prev = m;
  }
}

TEST(BaseChange, EllipticBaseRecoversSingularModulus) {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> rp(0.5, 6.0);
  for (int i = 0; i < 8; ++i) {
    const double r = rp(rng);
    const BaseChange bc = theorem6_base_change([](double x) { return elliptic_k(std::sqrt(x)); }, r, ctx);
    const double k = singular_modulus(r);
    EXPECT_NEAR(bc.alpha, k * k, 1e-10 * k * k);
    EXPECT_NEAR(bc.r0, r, 1e-9 * r);
    EXPECT_NEAR(bc.alpha_resolved, bc.alpha, 1e-9 * bc.alpha);
    EXPECT_NEAR(bc.j0, klein_j(r), 1e-8 * bc.j0);
  }
}

TEST(BaseChange, NonMonotoneBaseRejected) {
  EXPECT_THROW(theorem6_base_change([](double x) { return std::sin(20.0 * x) + 2.0; }, 2.0, ctx), DomainError);
}

TEST(Sextic, ResidualAndCrossPathForThreeInstances) {
  const double k4 = 3.0 - 2.0 * std::sqrt(2.0);
  const SexticInstance instances[] = {
      {1.0, 250.0, std::cbrt(klein_j_k4r_form(k4 * k4))},
      SexticInstance::with_j(1.0, 3.0, 4000.0),
      SexticInstance::with_j(1.0, 3.0, 1728.0 * (1.0 + 1e-6)),
      SexticInstance::with_j(2.0, -7.0, 1e5),
  };
  for (const auto& inst : instances) {
    const SexticSolution s = solve_sextic(inst);
    EXPECT_LT(s.residual_rel, 1e-10);
    EXPECT_NEAR(s.X, s.X_alt, 1e-9 * std::abs(s.X));
    const auto [abs_res, rel_res] = sextic_residual(inst, s.X);
    EXPECT_EQ(rel_res, s.residual_rel);
    (void)abs_res;
  }
  EXPECT_NEAR(solve_sextic(instances[0]).X, u_of_q(Nome::from_r_doubled(1.0)), 1e-9 * 529.5);
}

TEST(Sextic, JAtEightThousandGivesRTwo) {
  const SexticSolution s = solve_sextic(SexticInstance::with_j(1.0, 3.0, 8000.0));
  EXPECT_NEAR(s.r, 2.0, 1e-9);
}

TEST(Sextic, DomainErrors) {
  EXPECT_THROW(solve_sextic({0.0, 1.0, 1.0}), DomainError);
  EXPECT_THROW(solve_sextic({1.0, 0.0, 1.0}), DomainError);
  EXPECT_THROW(solve_sextic(SexticInstance::with_j(1.0, 3.0, 1000.0)), DomainError);
  EXPECT_THROW(solve_sextic({1.0, 3.0, -2.0}), DomainError);
}

TEST(DerivativeOfX, IncreasingInRAndMatchesMagnitude) {
  double prev = 0.0;
  for (double r : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    const double x = sextic_x_of_r(r);
    EXPECT_GT(x, prev);
    prev = x;
  }
  for (double r : {1.0, 2.0}) {
    const DerivativeIdentity d = derivative_identity(r);
    EXPECT_GT(d.fd.value, 0.0);
    EXPECT_LT(d.printed_rhs, 0.0);
    EXPECT_NEAR(d.fd.value, -d.printed_rhs, 1e-7 * d.fd.value);
    EXPECT_NEAR(d.eta_tail, d.beta_form, 1e-12 * d.beta_form);
    EXPECT_NEAR(d.sextic_tail, d.sextic_tail_rhs, 1e-12 * d.sextic_tail);
  }
}

TEST(TrigModular, ClosedFormsAndDuplication) {
  EXPECT_NEAR(trig_modular(1.0), 0.5, 1e-15);
  EXPECT_NEAR(trig_modular(2.0), 0.25, 1e-15);
  std::mt19937 rng(103);
  std::uniform_real_distribution<double> rp(0.05, 40.0);
  for (int i = 0; i < 200; ++i) {
    const double big_r = rp(rng);
    EXPECT_NEAR(trig_modular(big_r + 1.0), trig_modular_step(big_r), 1e-14);
    EXPECT_LT(std::abs(trig_modular_exponential(big_r) - trig_modular(big_r)), 1e-14);
    const double m = trig_modular(big_r);
    EXPECT_NEAR(psi_star(1.0 - m) / psi_star(m), std::sqrt(big_r), 1e-11 * std::sqrt(big_r));
  }
}

TEST(TrigModular, UnitCircleEquationRealAndImaginaryParts) {
  for (double r : {1.0, 2.0, 3.0, 4.5}) {
    const double s = arcsin_singular_value(r);
    const ComplexValue v = arcsin_unit_circle_form(s, r);
    EXPECT_NEAR(v.real(), 0.0, 1e-13);
    EXPECT_NEAR(v.imag(), 0.0, 1e-13);
  }
  EXPECT_NEAR(arcsin_singular_value(1.0), 0.5, 1e-15);
}

TEST(TrigModular, TClaimHoldsInDoubledForm) {
  for (double r : {1.0, 2.0, 3.0, 7.0}) {
    const double t = std::sin(M_PI / (4.0 + 2.0 * r));
    EXPECT_NEAR(psi_arcsin(1.0 - 2.0 * t * t) / psi_arcsin(t), std::sqrt(r), 1e-12);
  }
}

TEST(ArcsinSeries, CoefficientsAreTaylorCoefficients) {
  for (int n = 0; n < 30; ++n) {
    EXPECT_NEAR(arcsin_series_coefficient(n), pochhammer(0.5, n) / rrq::gamma(n + 1.0), 1e-15);
  }
}

TEST(ArcsinSeries, MonotoneApproachWithinTailBound) {
  for (double big_r : {1.0, 3.0, 6.0}) {
    const double m = trig_modular(big_r);
    const double target = M_PI / (big_r + 1.0);
    for (int n : {5, 10, 20, 40}) {
      const ArcsinSeries s = arcsin_series(m, n);
      for (std::size_t i = 1; i < s.partial_sums.size(); ++i) EXPECT_GE(s.partial_sums[i], s.partial_sums[i - 1]);
      EXPECT_LE(target - s.partial_sums.back(), s.tail_bound + 1e-15);
      EXPECT_GE(target - s.partial_sums.back(), -1e-15);
    }
  }
}

TEST(Identities, PropertyMomentsAgree) {
  std::mt19937 rng(107);
  std::uniform_real_distribution<double> np(0.2, 2.5);
  for (int i = 0; i < 6; ++i) {
    const double nu = np(rng);
    const double closed = rrcf_moment_closed(nu);
    EXPECT_NEAR(rrcf_moment_q(nu), closed, 1e-10 * closed);
    EXPECT_NEAR(rrcf_moment_x(nu), closed, 1e-10 * closed);
  }
}

TEST(Identities, EtaQuotientPowerRoutes) {
  for (double x : {0.5, 10.0, 300.0}) {
    const double closed = eta_quotient_power_n1_closed(x);
    EXPECT_NEAR(eta_quotient_power_q(1.0, x), closed, 1e-10 * closed);
    EXPECT_NEAR(eta_quotient_power_t(1.0, x), closed, 1e-10 * closed);
    EXPECT_NEAR(eta_quotient_power_f1(1.0, x), closed, 1e-10 * closed);
  }
}

TEST(Identities, ReflectedUPowerClosedForm) {
  std::mt19937 rng(109);
  std::uniform_real_distribution<double> np(0.1, 0.9);
  for (int i = 0; i < 6; ++i) {
    const double nu = np(rng);
    const double closed = u_power_closed(nu, true);
    EXPECT_NEAR(u_power_integral_q(nu), closed, 1e-10 * closed);
    EXPECT_NEAR(eta_ratio_integral_q(-nu), closed, 1e-10 * closed);
    EXPECT_NEAR(eta_ratio_closed_printed(-nu), closed, 1e-10 * closed);
  }
}

TEST(Identities, TauInverseAtRamanujanPoint) {
  const double x = rrcf_of_tau(2.0);
  EXPECT_NEAR(rrcf_tau_inverse(x), 2.0, 1e-12);
  const double fd = 1.0 / differentiate([](double t) { return rrcf_of_tau(t); }, 2.0, ctx).value;
  EXPECT_NEAR(rrcf_tau_inverse_derivative(x), fd, 1e-8 * std::abs(fd));
}

TEST(JIntegral, PartialFractionsAndQuadratureAgree) {
  for (double x : {0.05, 0.3, 0.5, 0.9, 1.0}) {
    const double f1 = j_integral_f1_form(x);
    EXPECT_NEAR(j_integral_partial_fractions(x), f1, 1e-12 * f1);
    EXPECT_NEAR(j_integral_quadrature(x, -1.0 / 3.0), f1, 1e-9 * f1);
  }
}
