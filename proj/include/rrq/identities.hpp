#pragma once

// Both sides of the q-integral identities for the continued fraction: the
// q-side integrals over (0, 1), the x-side integrals over (0, R(1^-)) and the
// hypergeometric closed forms.

#include <cmath>

#include "rrq/modular.hpp"
#include "rrq/qseries.hpp"
#include "rrq/quadrature.hpp"
#include "rrq/special.hpp"

namespace rrq {

namespace detail {

/// Nome at a sample of (0, 1) given its distances to both ends.
inline Nome nome_at(double q, double dist_1) {
  return q < 0.5 ? Nome(q) : Nome::from_log(std::log1p(-dist_1));
}

inline constexpr double kSqrt5 = 2.2360679774997896964091736687313;

}  // namespace detail

// ---------------------------------------------------------------------------
// Moments of R^{5 nu}
// ---------------------------------------------------------------------------

/// int_0^1 f(-q)^4 q^{-5/6} R(q)^{5 nu} dq.
inline double rrcf_moment_q(double nu, const PrecisionContext& ctx = {}) {
  if (!(nu > 0.0)) throw DomainError("rrcf_moment_q: requires nu > 0");
  return integrate_finite_ends(
      [&](double q, double, double to_1) {
        const Nome n = detail::nome_at(q, to_1);
        return std::exp(4.0 * log_ramanujan_f(n) - 5.0 / 6.0 * n.log() +
                        5.0 * nu * std::log(rrcf(n)));
      },
      0.0, 1.0, ctx);
}

/// 5 int_0^{R(1^-)} x^{5 nu - 1} u(x)^{-1/6} dx, the same moment in the x variable.
inline double rrcf_moment_x(double nu, const PrecisionContext& ctx = {}) {
  if (!(nu > 0.0)) throw DomainError("rrcf_moment_x: requires nu > 0");
  return 5.0 * integrate_finite_ends(
                   [&](double x, double, double to_end) {
                     return std::pow(x, 5.0 * nu - 1.0) *
                            std::pow(u_from_rrcf(x, to_end), -1.0 / 6.0);
                   },
                   0.0, kRrcfLimit, ctx);
}

/// Gamma(5/6) ((11 + 5 sqrt 5)/2)^{-1/6-nu} Gamma(1/6+nu)/Gamma(1+nu)
///   2F1(1/6, 1/6+nu; 1+nu; (11 - 5 sqrt 5)/(11 + 5 sqrt 5)).
inline double rrcf_moment_closed(double nu, const PrecisionContext& ctx = {}) {
  const double big = 0.5 * (11.0 + 5.0 * detail::kSqrt5);
  const double z = (11.0 - 5.0 * detail::kSqrt5) / (11.0 + 5.0 * detail::kSqrt5);
  return gamma(5.0 / 6.0) * std::pow(big, -1.0 / 6.0 - nu) * gamma(1.0 / 6.0 + nu) /
         gamma(1.0 + nu) * gauss_2f1(1.0 / 6.0, 1.0 / 6.0 + nu, 1.0 + nu, z, ctx);
}

/// 27 Gamma(5/6) Gamma(8/3) sin((2/3) arctan sqrt((-11+5 sqrt 5)/(11+5 sqrt 5))) / (2 sqrt(5 pi)).
inline double rrcf_half_moment_closed() {
  const double s5 = detail::kSqrt5;
  const double angle = std::atan(std::sqrt((-11.0 + 5.0 * s5) / (11.0 + 5.0 * s5)));
  return 27.0 * gamma(5.0 / 6.0) * gamma(8.0 / 3.0) * std::sin(2.0 / 3.0 * angle) /
         (2.0 * std::sqrt(5.0 * kPi));
}

// ---------------------------------------------------------------------------
// Powers of u against the eta quotient
// ---------------------------------------------------------------------------

/// q in (0, 1) with u(q) = x; u decreases from +inf to 0.
inline double u_inverse(double x, const PrecisionContext& ctx = {}) {
  if (!(x > 0.0)) throw DomainError("u_inverse: requires x > 0");
  const double lx = std::log(x);
  // Solve in s = -ln q on (0, inf).
  auto gap = [&](double ls) { return log_u_of_q(Nome::from_log(-std::exp(ls))) - lx; };
  const double ls = find_root(gap, -40.0, std::log(std::max(1.0, lx + 20.0)), ctx);
  return std::exp(-std::exp(ls));
}

/// int_{u^{-1}(x)}^1 u(q)^n f(-q^5)^5 / f(-q) dq.
inline double eta_quotient_power_q(double n, double x, const PrecisionContext& ctx = {}) {
  const double q0 = u_inverse(x, ctx);
  const double width = 1.0 - q0;
  return integrate_finite_ends(
      [&](double q, double, double to_1) {
        const Nome nq = q < 0.5 ? Nome(q) : Nome::from_log(std::log1p(-to_1));
        return std::exp(n * log_u_of_q(nq) + 5.0 * log_ramanujan_f(nq.pow(5.0)) -
                        log_ramanujan_f(nq));
      },
      q0, q0 + width, ctx);
}

/// int_0^x t^{n-1} / sqrt(125 + 22t + t^2) dt by direct quadrature.
inline double eta_quotient_power_t(double n, double x, const PrecisionContext& ctx = {}) {
  if (!(n > 0.0 && x > 0.0)) throw DomainError("eta_quotient_power_t: requires n > 0, x > 0");
  return integrate_finite(
      [n](double t) { return std::pow(t, n - 1.0) / std::sqrt(125.0 + t * (22.0 + t)); }, 0.0,
      x, true, false, ctx);
}

/// The same integral through Appell F1 with the complex roots -11 -+ 2i.
inline double eta_quotient_power_f1(double n, double x, const PrecisionContext& ctx = {}) {
  if (!(n > 0.0 && x > 0.0)) throw DomainError("eta_quotient_power_f1: requires n > 0, x > 0");
  const auto [r1, r2] = quadratic_roots({1.0, 22.0, 125.0});
  const ComplexValue f1 = appell_f1(n, 0.5, 0.5, n + 1.0, x / r1, x / r2, ctx);
  return (std::pow(x, n) / (n * std::sqrt(125.0)) * f1).real();
}

/// asinh((x + 11)/2) - asinh(11/2): the n = 1 case in elementary form.
inline double eta_quotient_power_n1_closed(double x) {
  return std::asinh(0.5 * (x + 11.0)) - std::asinh(5.5);
}

// ---------------------------------------------------------------------------
// Fractional powers of u over the whole unit interval
// ---------------------------------------------------------------------------

/// int_{q_lo}^{q_hi} u(q)^{nu - 5/6} f(-q)^4 q^{-5/6} dq, with the upper end at 1 unless truncated.
inline double u_power_integral_q(double nu, const PrecisionContext& ctx = {}, double cutoff = 0.0) {
  const double hi = 1.0 - cutoff;
  return integrate_finite_ends(
      [&](double q, double, double to_hi) {
        const Nome n = detail::nome_at(q, to_hi + cutoff);
        return std::exp((nu - 5.0 / 6.0) * log_u_of_q(n) + 4.0 * log_ramanujan_f(n) -
                        5.0 / 6.0 * n.log());
      },
      0.0, hi, ctx);
}

/// 5 int_0^{R(1^-)} u(x)^{nu-1} / x dx, the same integral in the x variable.
inline double u_power_integral_x(double nu, const PrecisionContext& ctx = {}, double gap_cut = 0.0) {
  return 5.0 * integrate_finite_ends(
                   [&](double x, double, double to_end) {
                     return std::pow(u_from_rrcf(x, to_end + gap_cut), nu - 1.0) / x;
                   },
                   0.0, kRrcfLimit - gap_cut, ctx);
}

/// int_0^{1-cutoff} (f(-q^5)/f(-q))^{6 nu + 5} f(-q)^4 q^nu dq.
inline double eta_ratio_integral_q(double nu, const PrecisionContext& ctx = {},
                                   double cutoff = 0.0) {
  const double hi = 1.0 - cutoff;
  return integrate_finite_ends(
      [&](double q, double, double to_hi) {
        const Nome n = detail::nome_at(q, to_hi + cutoff);
        const double lf = log_ramanujan_f(n);
        const double lf5 = log_ramanujan_f(n.pow(5.0));
        return std::exp((6.0 * nu + 5.0) * (lf5 - lf) + 4.0 * lf + nu * n.log());
      },
      0.0, hi, ctx);
}

/// -pi csc(nu pi) / 11^{nu+1} 2F1[(nu+1)/2, (nu+2)/2; 1; -4/121].
inline double eta_ratio_closed_printed(double nu, const PrecisionContext& ctx = {}) {
  return -kPi / std::sin(nu * kPi) / std::pow(11.0, nu + 1.0) *
         gauss_2f1(0.5 * (nu + 1.0), 0.5 * (nu + 2.0), 1.0, -4.0 / 121.0, ctx);
}

/// pi csc(nu pi) 11^{nu-1} 2F1[a(nu), b(nu); 1; -4/121] with the printed
/// parameters ((nu+1)/2, (nu+2)/2) or the reflected ones ((1-nu)/2, (2-nu)/2).
inline double u_power_closed(double nu, bool reflected, const PrecisionContext& ctx = {}) {
  const double a = reflected ? 0.5 * (1.0 - nu) : 0.5 * (nu + 1.0);
  const double b = reflected ? 0.5 * (2.0 - nu) : 0.5 * (nu + 2.0);
  return kPi / std::sin(nu * kPi) * std::pow(11.0, nu - 1.0) *
         gauss_2f1(a, b, 1.0, -4.0 / 121.0, ctx);
}

// ---------------------------------------------------------------------------
// Inverse of v(tau) = R(e^{-pi tau})
// ---------------------------------------------------------------------------

inline double rrcf_of_tau(double tau) { return rrcf(Nome::from_log(-kPi * tau)); }

/// tau > 0 with R(e^{-pi tau}) = x, for 0 < x < R(1^-).
inline double rrcf_tau_inverse(double x, const PrecisionContext& ctx = {}) {
  if (!(x > 0.0 && x < kRrcfLimit)) throw DomainError("rrcf_tau_inverse: x outside (0, R(1))");
  const double lx = std::log(x);
  // R ~ e^{-pi tau / 5} for large tau.
  const double hi = std::log(std::max(5.0 * -lx / kPi, 1.0) + 5.0);
  return std::exp(find_root([&](double lt) { return std::log(rrcf_of_tau(std::exp(lt))) - lx; },
                            -10.0, hi, ctx));
}

/// -5 / (pi eta(i tau / 2)^4 x u(x)^{1/6}) at tau = v^{-1}(x).
inline double rrcf_tau_inverse_derivative(double x, const PrecisionContext& ctx = {}) {
  const double tau = rrcf_tau_inverse(x, ctx);
  return -5.0 / (kPi * std::pow(dedekind_eta(0.5 * tau), 4) * x *
                 std::pow(u_from_rrcf(x), 1.0 / 6.0));
}

}  // namespace rrq
