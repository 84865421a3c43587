#pragma once

// Derivative, integral and trigonometric identities around the singular
// moduli, each evaluated by two independent routes.

#include <cmath>
#include <string>
#include <vector>

#include "rrq/check.hpp"
#include "rrq/modular.hpp"
#include "rrq/sextic.hpp"
#include "rrq/trig_modular.hpp"

namespace rrq {

// ---------------------------------------------------------------------------
// X(r) = u(e^{-2 pi sqrt r}) and its derivative
// ---------------------------------------------------------------------------

inline double sextic_x_of_r(double r) { return u_of_q(Nome::from_r_doubled(r)); }

struct DerivativeIdentity {
  double x;             // X(r)
  Derivative fd;        // finite-difference X'(r)
  double printed_rhs;   // -pi eta(i sqrt r)^4 / sqrt r X^{1/6} sqrt(125 + 22X + X^2)
  double eta_tail;      // pi int_{sqrt r}^inf eta(it/2)^4 dt
  double beta_form;     // 2^{-2/3} B(k_r^2, 1/6, 2/3)
  double printed_m;     // -2^{5/3} B(k_r^2, 1/6, 2/3)
  Derivative beta_fd;   // d/dr B(k_r^2, 1/6, 2/3) by finite differences
  double printed_beta_derivative;  // pi 4^{1/3} eta(i sqrt r / 2)^4 / (2 sqrt r)
  double sextic_tail;   // (1/5) int_{X(r/4)}^inf t^{-1/6} (125 + 22t + t^2)^{-1/2} dt
  double sextic_tail_rhs;  // B(k_r^2, 1/6, 2/3) / (5 4^{1/3})
};

inline DerivativeIdentity derivative_identity(double r, const PrecisionContext& ctx = {}) {
  if (!(r > 0.0)) throw DomainError("derivative_identity: requires r > 0");
  DerivativeIdentity d{};
  d.x = sextic_x_of_r(r);
  d.fd = differentiate([](double s) { return sextic_x_of_r(s); }, r, ctx);
  const double eta = dedekind_eta(std::sqrt(r));
  d.printed_rhs = -kPi * std::pow(eta, 4) / std::sqrt(r) * std::pow(d.x, 1.0 / 6.0) *
                  std::sqrt(125.0 + d.x * (22.0 + d.x));

  const BetaBase base{1.0 / 6.0, 2.0 / 3.0};
  auto beta_at = [&](double s) {
    const double k = singular_modulus(s, ctx);
    return incomplete_beta(k * k, base, ctx);
  };
  const double b = beta_at(r);
  d.eta_tail = eta_tail_integral(std::sqrt(r), ctx);
  d.beta_form = std::pow(2.0, -2.0 / 3.0) * b;
  d.printed_m = -std::pow(2.0, 5.0 / 3.0) * b;
  d.beta_fd = differentiate(beta_at, r, ctx);
  d.printed_beta_derivative =
      kPi * std::cbrt(4.0) * std::pow(dedekind_eta(0.5 * std::sqrt(r)), 4) / (2.0 * std::sqrt(r));
  d.sextic_tail = 0.2 * sextic_tail_integral(sextic_x_of_r(0.25 * r), ctx);
  d.sextic_tail_rhs = b / (5.0 * std::cbrt(4.0));
  return d;
}

/// Printed derivative formula against the finite difference of X(r).
inline CheckResult theorem7_derivative_check(double r, const PrecisionContext& ctx = {}) {
  const DerivativeIdentity d = derivative_identity(r, ctx);
  const double tol = std::max(1e-5, 10.0 * ctx.eps_rel);
  return make_check({"T7.sign.r=" + param_string(r),
                     "X'(r) = -pi eta(i sqrt r)^4 / sqrt r X^{1/6} sqrt(125+22X+X^2)", tol,
                     StatusPolicy::flag_on_fail},
                    d.fd.value, d.printed_rhs,
                    "lhs: Richardson central difference of X(r); rhs: printed closed form",
                    {{"finite difference", d.fd.value, relative_distance(d.fd.value, d.printed_rhs)},
                     {"negated closed form", -d.printed_rhs,
                      relative_distance(d.fd.value, -d.printed_rhs)}});
}

// ---------------------------------------------------------------------------
// j as a function of Y = u(q^2), and its integrals
// ---------------------------------------------------------------------------

/// j = (w^2 + 250 w + 3125)^3 / w^5 at w = u(e^{-2 pi sqrt r}).
inline double klein_j_from_u(double w) {
  if (!(w > 0.0)) throw DomainError("klein_j_from_u: requires w > 0");
  const double p = 3125.0 + w * (250.0 + w);
  return p * p * p / (w * w * w * w * w);
}

/// r with u(e^{-2 pi sqrt r}) = w; u increases with r.
inline double sextic_r_of_x(double w, const PrecisionContext& ctx = {}) {
  if (!(w > 0.0)) throw DomainError("sextic_r_of_x: requires w > 0");
  const double lw = std::log(w);
  auto gap = [&](double lr) { return log_u_of_q(Nome::from_r_doubled(std::exp(lr))) - lw; };
  // u grows like e^{2 pi sqrt r} and vanishes like e^{-c / sqrt r}.
  const double hi = 2.0 * std::log(std::max(lw / (2.0 * kPi), 0.0) + 2.0);
  return std::exp(find_root(gap, -40.0, hi, ctx));
}

/// (3 x^{8/3} / 25000) F1[8/3, 1, 1, 11/3; -x/(25(5 - 2 sqrt 5)), -x/(25(5 + 2 sqrt 5))].
inline double j_integral_f1_form(double x, const PrecisionContext& ctx = {}) {
  if (!(x >= 0.0)) throw DomainError("j_integral_f1_form: requires x >= 0");
  if (x == 0.0) return 0.0;
  const double s5 = std::sqrt(5.0);
  const ComplexValue f1 = appell_f1(8.0 / 3.0, 1.0, 1.0, 11.0 / 3.0, -x / (25.0 * (5.0 - 2.0 * s5)),
                                    -x / (25.0 * (5.0 + 2.0 * s5)), ctx);
  return 3.0 * std::pow(x, 8.0 / 3.0) / 25000.0 * f1.real();
}

inline double j_integral_phi(double z, const PrecisionContext& ctx = {}) {
  return gauss_2f1(1.0, 8.0 / 3.0, 11.0 / 3.0, z, ctx);
}

/// The same value through (X phi(X) - Y phi(Y)) / (X - Y), X and Y the F1 arguments.
inline double j_integral_partial_fractions(double x, const PrecisionContext& ctx = {}) {
  if (x == 0.0) return 0.0;
  const double s5 = std::sqrt(5.0);
  const double big_x = -x / (25.0 * (5.0 - 2.0 * s5));
  const double big_y = -x / (25.0 * (5.0 + 2.0 * s5));
  const double f1 =
      (big_x * j_integral_phi(big_x, ctx) - big_y * j_integral_phi(big_y, ctx)) / (big_x - big_y);
  return 3.0 * std::pow(x, 8.0 / 3.0) / 25000.0 * f1;
}

/// Printed phi combination (3 x^{8/3} / (25000 (x - 1))) [-phi(c x) + x phi(c x^p)],
/// c = (5 + 2 sqrt 5)/125, with p = 2 as printed or p = 1.
inline double j_integral_phi_printed(double x, int power, const PrecisionContext& ctx = {}) {
  if (x == 1.0) throw DomainError("j_integral_phi_printed: singular at x = 1");
  const double c = (5.0 + 2.0 * std::sqrt(5.0)) / 125.0;
  const double inner = -j_integral_phi(c * x, ctx) + x * j_integral_phi(c * std::pow(x, power), ctx);
  return 3.0 * std::pow(x, 8.0 / 3.0) / (25000.0 * (x - 1.0)) * inner;
}

/// (100/719)(60 + sqrt 5) - 5 2F1[1, 8/3; 11/3; (5 + 2 sqrt 5)/125].
inline double j_integral_special_value_printed(const PrecisionContext& ctx = {}) {
  const double s5 = std::sqrt(5.0);
  return 100.0 / 719.0 * (60.0 + s5) - 5.0 * j_integral_phi((5.0 + 2.0 * s5) / 125.0, ctx);
}

/// int_0^x j(Y^{-1}(w))^{power} dw, with j obtained from the singular modulus at
/// the inverted modular parameter.
inline double j_integral_quadrature(double x, double power, const PrecisionContext& ctx = {}) {
  if (!(x > 0.0)) throw DomainError("j_integral_quadrature: requires x > 0");
  return integrate_finite(
      [&](double w) { return std::exp(power * log_klein_j(sextic_r_of_x(w, ctx), ctx)); },
      0.0, x, true, false, ctx);
}

struct JIntegralIdentity {
  double f1_form;
  double partial_fractions;
  double quadrature_minus;  // int_0^x j^{-1/3} via inversion and klein_j
  double quadrature_rational;  // int_0^x w^{5/3} / (w^2 + 250 w + 3125)
  double phi_printed_x2;
  double phi_printed_x;
  Derivative f1_derivative;
  double j_at_x;            // j(Y^{-1}(x))
};

inline JIntegralIdentity j_integral_values(double x, const PrecisionContext& ctx = {}) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("j_integral_identity: requires 0 < x <= 1");
  JIntegralIdentity v{};
  v.f1_form = j_integral_f1_form(x, ctx);
  v.partial_fractions = j_integral_partial_fractions(x, ctx);
  v.quadrature_minus = j_integral_quadrature(x, -1.0 / 3.0, ctx);
  v.quadrature_rational = integrate_finite(
      [](double w) { return std::pow(w, 5.0 / 3.0) / (3125.0 + w * (250.0 + w)); }, 0.0, x, true,
      false, ctx);
  const bool singular = x == 1.0;
  v.phi_printed_x2 = singular ? std::nan("") : j_integral_phi_printed(x, 2, ctx);
  v.phi_printed_x = singular ? std::nan("") : j_integral_phi_printed(x, 1, ctx);
  v.f1_derivative = differentiate([&](double s) { return j_integral_f1_form(s, ctx); }, x, ctx);
  v.j_at_x = klein_j(sextic_r_of_x(x, ctx), ctx);
  return v;
}

/// The F1 closed form against quadrature of j(Y^{-1}(w))^{-1/3}.
inline CheckResult j_integral_identity(double x, const PrecisionContext& ctx = {}) {
  const JIntegralIdentity v = j_integral_values(x, ctx);
  const double tol = std::max(1e-5, 10.0 * ctx.eps_rel);
  return make_check(
      {"Eq50.x=" + param_string(x), "int_0^x j(Y^{-1}(w))^{-1/3} dw = (3x^{8/3}/25000) F1[8/3,1,1,11/3;...]",
       tol},
      v.quadrature_minus, v.f1_form, "lhs: quadrature through u-inversion and klein_j; rhs: Appell F1",
      {{"partial fractions", v.partial_fractions, relative_distance(v.partial_fractions, v.f1_form)},
       {"rational integrand", v.quadrature_rational,
        relative_distance(v.quadrature_rational, v.f1_form)}});
}

// ---------------------------------------------------------------------------
// Trigonometric base
// ---------------------------------------------------------------------------

/// m(R + 1) against (1 - sqrt(1 - m(R/2))) / 2.
inline CheckResult trig_modular_equation_check(double big_r, const PrecisionContext& ctx = {}) {
  (void)ctx;
  const double lhs = trig_modular(big_r + 1.0);
  const double rhs = trig_modular_step(big_r);
  return make_check({"Ex5.duplication.R=" + param_string(big_r),
                     "m(R+1) = (1 - sqrt(1 - m(R/2)))/2", 1e-12, StatusPolicy::strict,
                     Comparison::absolute},
                    lhs, rhs, "both sides from m(R) = sin(pi/(2(R+1)))^2",
                    {{"exponential form of m(R+1)", trig_modular_exponential(big_r + 1.0),
                      relative_distance(trig_modular_exponential(big_r + 1.0), rhs)}});
}

/// Unit-circle equation at the arcsin singular value, the xi / x_r chain and
/// the closing t-claim in both readings.
inline std::vector<CheckResult> example4_checks(double r, const PrecisionContext& ctx = {}) {
  const std::string tag = "r=" + param_string(r);
  std::vector<CheckResult> out;
  const double s = arcsin_singular_value(r, ctx);
  const ComplexValue unit = arcsin_unit_circle_form(s, r);
  const ComplexValue binomial = arcsin_binomial_form(s, r);
  out.push_back(make_check({"Ex4.unit_circle." + tag, "2i + y^{-1} - y + y^{-r} - y^r = 0, y = is + sqrt(1-s^2)",
                            1e-12, StatusPolicy::strict, Comparison::absolute},
                           unit, 0.0,
                           "s from arcsin(1-s) = r arcsin(s); real part " +
                               std::to_string(unit.real()) + ", imaginary part " +
                               std::to_string(unit.imag()),
                           {{"binomial form", binomial, std::abs(binomial)}}));

  const double t = std::sin(kPi / (4.0 + 2.0 * r));
  const double printed = psi_arcsin(1.0 - 2.0 * t * t) / psi_arcsin(t);
  const double alt = psi_arcsin(1.0 - t) / psi_arcsin(t);
  out.push_back(make_check({"Ex4.t_claim." + tag, "t = sin(pi/(4+2r)) solves psi(1-2t^2)/psi(t) = sqrt r",
                            1e-12, StatusPolicy::flag_on_fail},
                           printed, std::sqrt(r), "closed-form t against the psi ratio",
                           {{"psi(1-2t^2)/psi(t)", printed, relative_distance(printed, std::sqrt(r))},
                            {"psi(1-t)/psi(t)", alt, relative_distance(alt, std::sqrt(r))}}));

  const XiChain chain = xi_chain(r);
  out.push_back(make_check({"Ex4.xi_chain." + tag, "xi = (-i - sqrt 3)/2, x = -i(1 - x_r^2)/(2x_r), t = arcsin(x)",
                            1e-10, StatusPolicy::flag_on_fail},
                           chain.t, t, "arcsin of the chain value against sin(pi/(4+2r))",
                           {{"arcsin(x)", chain.t, relative_distance(chain.t, t)},
                            {"arcsin singular value s_r", s, relative_distance(s, t)}}));
  return out;
}

struct PiFormula {
  double m;
  ArcsinSeries series;
  double target;     // pi / (R + 1)
  double closed;     // 2 arcsin(sqrt m)
};

inline PiFormula pi_formula(double big_r, int n_terms) {
  const double m = trig_modular(big_r);
  return {m, arcsin_series(m, n_terms), kPi / (big_r + 1.0), 2.0 * std::asin(std::sqrt(m))};
}

/// Partial sum through N terms against pi/(R+1), within the series tail bound.
inline CheckResult pi_formula_check(double big_r, int n_terms, const PrecisionContext& ctx = {}) {
  (void)ctx;
  const PiFormula p = pi_formula(big_r, n_terms);
  const double sum = p.series.partial_sums.back();
  const double tol = std::max(p.series.tail_bound + 1e-14, 1e-13);
  return make_check({"Ex6.series.R=" + param_string(big_r),
                     "pi/(R+1) = sum (1/4)_n (3/4)_{-n} / ((1/2)_{-n} n!) m^{n+1/2}/(n+1/2)", tol,
                     StatusPolicy::strict, Comparison::absolute},
                    sum, p.target,
                    std::to_string(n_terms) + " terms; tolerance is the tail bound",
                    {{"2 arcsin(sqrt m)", p.closed, relative_distance(p.closed, p.target)}});
}

}  // namespace rrq
