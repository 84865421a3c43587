#pragma once

// q-side kernels: Ramanujan's f(-q), the Dedekind eta function on the
// imaginary axis, the Rogers-Ramanujan continued fraction R(q) and the
// eta quotient u(q) = R^{-5} - 11 - R^5.

#include <cmath>

#include "rrq/numerics.hpp"
#include "rrq/special.hpp"

namespace rrq {

/// Real nome q in (0, 1). The logarithm is stored so that nomes near 1
/// (q = e^{-eps}) keep full relative precision in 1 - q.
class Nome {
 public:
  explicit Nome(double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("Nome: q must lie in (0, 1)");
    log_q_ = std::log(q);
  }

  static Nome from_log(double log_q) {
    if (!(log_q < 0.0) || !std::isfinite(log_q)) throw DomainError("Nome: log q must be negative");
    Nome n;
    n.log_q_ = log_q;
    return n;
  }
  /// q = e^{-pi sqrt(r)}.
  static Nome from_r(double r) { return from_log(-kPi * std::sqrt(checked_r(r))); }
  /// q = e^{-2 pi sqrt(r)}, the squared nome of the same r.
  static Nome from_r_doubled(double r) { return from_log(-2.0 * kPi * std::sqrt(checked_r(r))); }

  double value() const { return std::exp(log_q_); }
  double log() const { return log_q_; }
  Nome pow(double p) const { return from_log(p * log_q_); }

 private:
  Nome() = default;
  static double checked_r(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("Nome: r must be positive");
    return r;
  }
  double log_q_ = -1.0;
};

/// ln f(-q), f(-q) = prod_{n>=1} (1 - q^n).
///
/// Below q = 0.9 the product is summed directly in log space. Above it the
/// modular relation eta(i t) = t^{-1/2} eta(i/t) with q = e^{-2 pi t} is
/// applied, which leaves a product in e^{-2 pi / t} < 1e-160.
inline double log_ramanujan_f(Nome q) {
  constexpr double kLogSwitch = -0.10536051565782628;  // ln 0.9
  const double lq = q.log();
  if (lq < kLogSwitch) {
    const double qv = q.value();
    double acc = 0.0, qn = qv;
    const double stop = 1e-18 * (1.0 - qv);
    for (int n = 1; qn > stop && n < 100000; ++n) {
      acc += std::log1p(-qn);
      qn *= qv;
    }
    return acc;
  }
  const double t = -lq / (2.0 * kPi);
  const Nome dual = Nome::from_log(-2.0 * kPi / t);
  return kPi * t / 12.0 - 0.5 * std::log(t) - kPi / (12.0 * t) + log_ramanujan_f(dual);
}

inline double ramanujan_f(Nome q) { return std::exp(log_ramanujan_f(q)); }

/// eta(i t) = e^{-pi t / 12} f(-e^{-2 pi t}).
inline double dedekind_eta(double t) {
  if (!(t > 0.0)) throw DomainError("dedekind_eta: requires t > 0");
  return std::exp(-kPi * t / 12.0 + log_ramanujan_f(Nome::from_log(-2.0 * kPi * t)));
}

/// ln kappa with kappa = f(-q^{1/5}) / (q^{1/5} f(-q^5)) = 1/R - 1 - R.
inline double log_rrcf_kappa(Nome q) {
  return log_ramanujan_f(q.pow(0.2)) - 0.2 * q.log() - log_ramanujan_f(q.pow(5.0));
}

/// Rogers-Ramanujan continued fraction through the eta quotient: R is the
/// positive root of R^2 + (kappa + 1) R - 1 = 0.
inline double rrcf(Nome q) {
  const double kappa = std::exp(log_rrcf_kappa(q));
  const double s = kappa + 1.0;
  return 2.0 / (s + std::sqrt(s * s + 4.0));
}

/// Bottom-up evaluation of q^{1/5} / (1 + q / (1 + q^2 / (1 + ...))) truncated at depth.
inline double rrcf_cf_oracle(Nome q, int depth) {
  if (depth < 1) throw DomainError("rrcf_cf_oracle: depth must be >= 1");
  const double qv = q.value();
  double tail = 1.0;
  for (int n = depth; n >= 1; --n) tail = 1.0 + std::pow(qv, n) / tail;
  return std::exp(0.2 * q.log()) / tail;
}

/// Largest value of R on (0, 1): R(1^-) = (sqrt 5 - 1) / 2.
inline constexpr double kRrcfLimit = 0.61803398874989484820458683436563812;

/// x^{-5} - 11 - x^5 in factored form
///   (s1 - s)(s - s2) / x^5,  s = x^5,  s1,2 = (-11 +- 5 sqrt 5) / 2,
/// with gap = kRrcfLimit - x supplied separately so that the zero at the
/// upper end of (0, kRrcfLimit] is resolved without cancellation.
inline double u_from_rrcf(double x, double gap) {
  if (!(x > 0.0)) throw DomainError("u_from_rrcf: requires x > 0");
  constexpr double r = kRrcfLimit;
  constexpr double s2 = -11.090169943749474241022934171828191;  // (-11 - 5 sqrt 5) / 2
  const double x2 = x * x, r2 = r * r;
  // s1 - s = r^5 - x^5 = (r - x)(r^4 + r^3 x + r^2 x^2 + r x^3 + x^4)
  const double s1_minus_s = gap * (r2 * r2 + r2 * r * x + r2 * x2 + r * x2 * x + x2 * x2);
  const double x5 = x2 * x2 * x;
  return s1_minus_s * (x5 - s2) / x5;
}

inline double u_from_rrcf(double x) { return u_from_rrcf(x, kRrcfLimit - x); }

/// ln u(q), u(q) = f(-q)^6 / (q f(-q^5)^6).
inline double log_u_of_q(Nome q) {
  return 6.0 * log_ramanujan_f(q) - q.log() - 6.0 * log_ramanujan_f(q.pow(5.0));
}

inline double u_of_q(Nome q) { return std::exp(log_u_of_q(q)); }

/// R'(q) = (1/5) q^{-5/6} f(-q)^4 R (R^{-5} - 11 - R^5)^{1/6}.
inline double rrcf_derivative(Nome q) {
  const double r = rrcf(q);
  const double lead = std::exp(-5.0 / 6.0 * q.log() + 4.0 * log_ramanujan_f(q));
  return 0.2 * lead * r * std::pow(u_from_rrcf(r), 1.0 / 6.0);
}

/// q = e^{-pi K(k') / K(k)}.
inline Nome nome_from_modulus(double k) {
  if (!(k > 0.0 && k < 1.0)) throw DomainError("nome_from_modulus: requires 0 < k < 1");
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  return Nome::from_log(-kPi * elliptic_k_from_complement(k) / elliptic_k_from_complement(kp));
}

namespace detail {
inline void require_consistent(double k, Nome q) {
  const double expected = nome_from_modulus(k).log();
  if (std::abs(expected - q.log()) > 1e-9 * std::abs(expected)) {
    throw DomainError("modulus and nome are inconsistent: q != exp(-pi K'/K)");
  }
}
}  // namespace detail

/// dq/dk in the printed form -q pi^2 / (2 k k'^2 K(k)^2). The map k -> q is
/// increasing, so this carries the opposite sign of the true derivative.
inline double dq_dk(double k, Nome q) {
  detail::require_consistent(k, q);
  const double kp2 = (1.0 - k) * (1.0 + k);
  const double big_k = elliptic_k(k);
  return -q.value() * kPi * kPi / (2.0 * k * kp2 * big_k * big_k);
}

/// dR/dk in the printed form -(1/5) 2^{1/3} (k k')^{-2/3} R (R^{-5} - 11 - R^5)^{1/6};
/// sign convention matches dq_dk.
inline double dR_dk(double k, Nome q) {
  detail::require_consistent(k, q);
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  const double r = rrcf(q);
  return -0.2 * std::cbrt(2.0) * std::pow(k * kp, -2.0 / 3.0) * r *
         std::pow(u_from_rrcf(r), 1.0 / 6.0);
}

}  // namespace rrq
