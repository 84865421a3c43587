#pragma once

// Singular moduli, Klein's j-invariant, and the inverse functions built on
// the continued-fraction integral
//   x = int_0^{F(x)} dt / (t (t^{-5} - 11 - t^5)^{1/6}),
// the eta tail  x = pi int_{sqrt m(x)}^inf eta(i t / 2)^4 dt,
// and the sextic tail  x = (1/5) int_{G(x)}^inf t^{-1/6} (125 + 22t + t^2)^{-1/2} dt.
//
// Nome conventions: functions named *_of_r use q = e^{-pi sqrt r}; the
// sextic side (u evaluated at the squared nome) uses e^{-2 pi sqrt r} and
// says so explicitly.

#include <cmath>
#include <functional>
#include <utility>

#include "rrq/numerics.hpp"
#include "rrq/qseries.hpp"
#include "rrq/quadrature.hpp"
#include "rrq/special.hpp"

namespace rrq {

// ---------------------------------------------------------------------------
// Singular moduli and j
// ---------------------------------------------------------------------------

struct ModulusPair {
  double k;
  double kprime;
  double log_k;
  double log_kprime;
};

/// k_r with K(k'_r) / K(k_r) = sqrt r, returned together with k'_r so that
/// both stay accurate when either is tiny. For r < 1 the pair of 1/r is swapped.
inline ModulusPair singular_modulus_pair(double r, const PrecisionContext& ctx = {}) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("singular_modulus: requires r > 0");
  if (r < 1.0) {
    const ModulusPair p = singular_modulus_pair(1.0 / r, ctx);
    return {p.kprime, p.k, p.log_kprime, p.log_k};
  }
  // Solve in s = ln k on (k ~ 4 e^{-pi sqrt(r)/2}, 1/sqrt 2].
  const double half_log_r = 0.5 * std::log(r);
  auto period_gap = [&](double s) {
    const double k = std::exp(s);
    const double kp = std::sqrt((1.0 - k) * (1.0 + k));
    return std::log(elliptic_k_from_complement(k) / elliptic_k_from_complement(kp)) - half_log_r;
  };
  const double hi = -0.5 * std::log(2.0);
  const double lo = std::max(std::log(4.0) - 0.5 * kPi * std::sqrt(r) - 3.0, -700.0);
  const double s = find_root(period_gap, lo, hi, ctx);
  const double k = std::exp(s);
  return {k, std::sqrt((1.0 - k) * (1.0 + k)), s, 0.5 * std::log1p(-k * k)};
}

inline double singular_modulus(double r, const PrecisionContext& ctx = {}) {
  return singular_modulus_pair(r, ctx).k;
}

/// r with K(k')/K(k) = sqrt r for a given modulus k.
inline double modular_parameter(double k) {
  if (!(k > 0.0 && k < 1.0)) throw DomainError("modular_parameter: requires 0 < k < 1");
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  const double ratio = elliptic_k_from_complement(k) / elliptic_k_from_complement(kp);
  return ratio * ratio;
}

/// 256 (x + (1 - x)^2)^3 / (x^2 (1 - x)^2), x = lambda = k_r^2.
inline double klein_j_lambda_form(double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("klein_j_lambda_form: requires 0 < x < 1");
  const double y = 1.0 - x;
  const double w = x + y * y;
  return 256.0 * w * w * w / (x * x * y * y);
}

/// 16 (1 + 14 t + t^2)^3 / (t (1 - t)^4), t = k_{4r}^2; 1 - t may be passed separately.
inline double klein_j_k4r_form(double t, double one_minus_t) {
  if (!(t > 0.0 && one_minus_t > 0.0)) throw DomainError("klein_j_k4r_form: requires 0 < t < 1");
  const double w = 1.0 + 14.0 * t + t * t;
  const double y2 = one_minus_t * one_minus_t;
  return 16.0 * w * w * w / (t * y2 * y2);
}

inline double klein_j_k4r_form(double t) { return klein_j_k4r_form(t, 1.0 - t); }

/// ln j at tau = i sqrt(r); stays finite where j itself overflows.
inline double log_klein_j(double r, const PrecisionContext& ctx = {}) {
  const ModulusPair p = singular_modulus_pair(4.0 * r, ctx);
  const double t = p.k * p.k;
  return std::log(16.0) + 3.0 * std::log(1.0 + t * (14.0 + t)) - 2.0 * p.log_k -
         8.0 * p.log_kprime;
}

/// j at tau = i sqrt(r), from the singular modulus k_{4r}.
inline double klein_j(double r, const PrecisionContext& ctx = {}) {
  const ModulusPair p = singular_modulus_pair(4.0 * r, ctx);
  if (p.log_k > -300.0 && p.log_kprime > -150.0) {
    return klein_j_k4r_form(p.k * p.k, p.kprime * p.kprime);
  }
  return std::exp(log_klein_j(r, ctx));
}

// ---------------------------------------------------------------------------
// Forward integrals
// ---------------------------------------------------------------------------

/// int_0^y dt / (t (t^{-5} - 11 - t^5)^{1/6}) for 0 <= y <= (sqrt 5 - 1)/2.
inline double rrcf_integral(double y, const PrecisionContext& ctx = {}) {
  if (!(y >= 0.0 && y <= kRrcfLimit)) throw DomainError("rrcf_integral: y outside [0, R(1)]");
  if (y == 0.0) return 0.0;
  const double tail_gap = kRrcfLimit - y;
  return integrate_finite_ends(
      [&](double t, double, double to_y) {
        return 1.0 / (t * std::pow(u_from_rrcf(t, tail_gap + to_y), 1.0 / 6.0));
      },
      0.0, y, ctx);
}

/// int_X^inf t^{-1/6} (125 + 22 t + t^2)^{-1/2} dt for X >= 0.
inline double sextic_tail_integral(double x, const PrecisionContext& ctx = {}) {
  if (!(x >= 0.0)) throw DomainError("sextic_tail_integral: requires X >= 0");
  return integrate_to_infinity(
      [](double t) { return std::pow(t, -1.0 / 6.0) / std::sqrt(125.0 + t * (22.0 + t)); }, x,
      AlgebraicDecay{7.0 / 6.0}, ctx);
}

/// pi int_tau^inf eta(i t / 2)^4 dt. The integrand is bounded by e^{-pi t / 6}.
inline double eta_tail_integral(double tau, const PrecisionContext& ctx = {}) {
  if (!(tau > 0.0)) throw DomainError("eta_tail_integral: requires tau > 0");
  auto eta4 = [](double t) {
    return std::exp(-kPi * t / 6.0 + 4.0 * log_ramanujan_f(Nome::from_log(-kPi * t)));
  };
  return kPi * integrate_to_infinity(eta4, tau, ExponentialDecay{kPi / 6.0}, ctx);
}

/// Common range of the F and G inversions: (1/5) 4^{-1/3} B(1/6, 2/3).
inline double rrcf_integral_limit() {
  return 0.2 * std::pow(4.0, -1.0 / 3.0) * beta_complete(1.0 / 6.0, 2.0 / 3.0);
}

/// Total mass pi int_0^inf eta(it/2)^4 dt = 2^{-2/3} B(1/6, 2/3).
inline double eta_tail_limit() {
  return std::pow(2.0, -2.0 / 3.0) * beta_complete(1.0 / 6.0, 2.0 / 3.0);
}

// ---------------------------------------------------------------------------
// Inversions
// ---------------------------------------------------------------------------

/// F(x): upper limit y with rrcf_integral(y) = x.
inline double F_of_x(double x, const PrecisionContext& ctx = {}) {
  const double limit = rrcf_integral_limit();
  if (!(x >= 0.0 && x < limit)) throw DomainError("F_of_x: x outside [0, x_max)");
  if (x == 0.0) return 0.0;
  return find_root([&](double y) { return rrcf_integral(y, ctx) - x; }, 0.0, kRrcfLimit, ctx);
}

/// m(x): r with eta_tail_integral(sqrt r) = x; strictly decreasing.
inline double m_of_x(double x, const PrecisionContext& ctx = {}) {
  const double limit = eta_tail_limit();
  if (!(x > 0.0 && x < limit)) throw DomainError("m_of_x: x outside (0, x_max)");
  const double hi = std::log(std::max(6.0 / kPi * std::log(6.0 / x) + 5.0, 10.0));
  const double s = find_root(
      [&](double ls) { return std::log(eta_tail_integral(std::exp(ls), ctx) / x); },
      std::log(1e-3), hi, ctx);
  return std::exp(2.0 * s);
}

/// G(x): lower limit X with (1/5) sextic_tail_integral(X) = x.
inline double G_of_x(double x, const PrecisionContext& ctx = {}) {
  const double limit = rrcf_integral_limit();
  if (!(x > 0.0 && x < limit)) throw DomainError("G_of_x: x outside (0, x_max)");
  const double hi = 6.0 * std::log(6.0 / (5.0 * x)) + 5.0;
  const double s = find_root(
      [&](double ls) { return std::log(0.2 * sextic_tail_integral(std::exp(ls), ctx) / x); },
      -60.0, hi, ctx);
  return std::exp(s);
}

/// theta(X): b in (0, 1) with 4^{-1/3} B(b, 1/6, 2/3) = int_X^inf t^{-1/6}(125+22t+t^2)^{-1/2} dt.
inline double theta_of_X(double big_x, const PrecisionContext& ctx = {}) {
  if (!(big_x > 0.0)) throw DomainError("theta_of_X: requires X > 0");
  const double target = std::pow(4.0, 1.0 / 3.0) * sextic_tail_integral(big_x, ctx);
  const BetaBase base{1.0 / 6.0, 2.0 / 3.0};
  const double s = find_root(
      [&](double ls) { return std::log(incomplete_beta(std::exp(ls), base, ctx) / target); },
      -700.0, 0.0, ctx);
  return std::exp(s);
}

/// Unique x in (0, 1) with B(1 - x, base) / B(x, base) = r, solved in the
/// logit variable so that roots near 0 or 1 keep relative accuracy.
inline double beta_ratio_root(BetaBase base, double r, const PrecisionContext& ctx = {}) {
  if (!(r > 0.0)) throw DomainError("beta_ratio_root: requires r > 0");
  const double log_r = std::log(r);
  auto gap = [&](double logit) {
    const double x = 1.0 / (1.0 + std::exp(-logit));
    const double y = 1.0 / (1.0 + std::exp(logit));
    return std::log(incomplete_beta(y, base, ctx)) - std::log(incomplete_beta(x, base, ctx)) -
           log_r;
  };
  const double logit = find_root(gap, -700.0, 700.0, ctx);
  return 1.0 / (1.0 + std::exp(-logit));
}

// ---------------------------------------------------------------------------
// Change of base
// ---------------------------------------------------------------------------

struct BaseChange {
  double alpha;          // root of base(1 - x) / base(x) = sqrt r
  double r0;             // K(sqrt(1 - alpha))^2 / K(sqrt alpha)^2
  double j0;             // lambda-form j at x = alpha
  double alpha_resolved; // root of the lambda-form j equation on alpha's branch
};

/// Solves base(1 - x) / base(x) = sqrt r for any monotone base, then moves the
/// root to the K base and the j-invariant.
inline BaseChange theorem6_base_change(const std::function<double(double)>& base, double r,
                                       const PrecisionContext& ctx = {}) {
  if (!(r > 0.0)) throw DomainError("theorem6_base_change: requires r > 0");
  auto ratio = [&](double x) { return base(1.0 - x) / base(x); };
  {
    constexpr int kGrid = 33;
    double prev = ratio(0.01);
    int direction = 0;
    for (int i = 1; i < kGrid; ++i) {
      const double cur = ratio(0.01 + 0.98 * i / (kGrid - 1));
      const int dir = cur > prev ? 1 : (cur < prev ? -1 : 0);
      if (dir == 0 || (direction != 0 && dir != direction)) {
        throw DomainError("theorem6_base_change: base ratio is not strictly monotone");
      }
      direction = dir;
      prev = cur;
    }
  }
  const double half_log_r = 0.5 * std::log(r);
  const double alpha = find_root(
      [&](double logit) {
        const double x = 1.0 / (1.0 + std::exp(-logit));
        const double y = 1.0 / (1.0 + std::exp(logit));
        return std::log(base(y) / base(x)) - half_log_r;
      },
      -30.0, 30.0, ctx);
  const double a = 1.0 / (1.0 + std::exp(-alpha));
  const double ka = std::sqrt(a), kb = std::sqrt(1.0 / (1.0 + std::exp(alpha)));
  // K(sqrt(1 - a)) has complementary modulus sqrt a, and vice versa.
  const double ratio_k = elliptic_k_from_complement(ka) / elliptic_k_from_complement(kb);
  const double j0 = klein_j_lambda_form(a);
  const bool lower = a <= 0.5;
  const double resolved = find_root([&](double x) { return klein_j_lambda_form(x) - j0; },
                                    lower ? 1e-150 : 0.5, lower ? 0.5 : 1.0 - 1e-16, ctx);
  return {a, ratio_k * ratio_k, j0, resolved};
}

}  // namespace rrq
