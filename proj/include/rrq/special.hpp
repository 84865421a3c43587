#pragma once

// Classical special functions: Gamma, Gauss 2F1, Appell F1, the incomplete
// Beta function, the complete elliptic integral K, and the terminating
// polynomials P_n(nu, x) = 2F1(-n, nu; 1 - n - nu; x).

#include <array>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "rrq/numerics.hpp"
#include "rrq/quadrature.hpp"

namespace rrq {

// ---------------------------------------------------------------------------
// Gamma
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_nonpositive_integer(const ComplexValue& z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::nearbyint(z.real()) == z.real();
}

inline bool is_real(const ComplexValue& z) { return z.imag() == 0.0; }

// Lanczos approximation, g = 7, n = 9.
inline ComplexValue gamma_lanczos(ComplexValue z) {
  static constexpr std::array<double, 9> kCoef = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double kG = 7.0;
  z -= 1.0;
  ComplexValue x = kCoef[0];
  for (int i = 1; i < 9; ++i) x += kCoef[i] / (z + double(i));
  const ComplexValue t = z + kG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

}  // namespace detail

/// Gamma function on the complex plane; reflection below Re z = 1/2.
inline ComplexValue gamma(ComplexValue z) {
  if (detail::is_nonpositive_integer(z)) throw PoleError("gamma: pole at non-positive integer");
  if (z.real() < 0.5) {
    return kPi / (std::sin(kPi * z) * detail::gamma_lanczos(1.0 - z));
  }
  return detail::gamma_lanczos(z);
}

inline double gamma(double x) { return gamma(ComplexValue(x, 0.0)).real(); }

inline double beta_complete(double a, double b) { return gamma(a) * gamma(b) / gamma(a + b); }

/// (a)_n for any integer n; (a)_{-n} = 1 / (a - n)_n.
inline ComplexValue pochhammer(ComplexValue a, int n) {
  if (n >= 0) {
    ComplexValue p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + double(k);
    return p;
  }
  const ComplexValue denom = pochhammer(a + double(n), -n);
  if (denom == 0.0) throw PoleError("pochhammer: negative index hits a pole");
  return 1.0 / denom;
}

inline double pochhammer(double a, int n) { return pochhammer(ComplexValue(a), n).real(); }

// ---------------------------------------------------------------------------
// Gauss hypergeometric 2F1
// ---------------------------------------------------------------------------

/// Direct power series. Terminates when a or b is a non-positive integer.
inline ComplexValue gauss_2f1_series(ComplexValue a, ComplexValue b, ComplexValue c,
                                     ComplexValue z, const PrecisionContext& ctx) {
  long terminate_at = -1;
  for (const auto& p : {a, b}) {
    if (detail::is_nonpositive_integer(p)) {
      const long m = std::lround(-p.real());
      terminate_at = terminate_at < 0 ? m : std::min(terminate_at, m);
    }
  }
  if (detail::is_nonpositive_integer(c)) {
    const long k = std::lround(-c.real());
    if (terminate_at < 0 || terminate_at > k) throw PoleError("gauss_2f1: c is a pole");
  }
  if (terminate_at >= 0) {
    ComplexValue sum = 1.0, term = 1.0;
    for (long n = 0; n < terminate_at; ++n) {
      term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
      sum += term;
    }
    return sum;
  }
  if (!(std::abs(z) < 1.0)) throw DomainError("gauss_2f1_series: requires |z| < 1");
  ComplexValue term = 1.0;
  return sum_series(
             [&](std::size_t n) {
               if (n > 0) {
                 const double k = double(n - 1);
                 term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
               }
               return term;
             },
             ctx)
      .value;
}

/// Euler integral
///   Gamma(c) / (Gamma(b) Gamma(c-b)) * int_0^1 t^{b-1} (1-t)^{c-b-1} (1-zt)^{-a} dt,
/// admissible for real c > b > 0 and z off the cut [1, inf).
inline ComplexValue gauss_2f1_euler(double a, double b, double c, ComplexValue z,
                                    const PrecisionContext& ctx) {
  if (!(c > b && b > 0.0)) throw DomainError("gauss_2f1_euler: requires c > b > 0");
  if (z.imag() == 0.0 && z.real() > 1.0) throw DomainError("gauss_2f1_euler: z on branch cut");
  const double norm = gamma(c) / (gamma(b) * gamma(c - b));
  auto integrand = [&](double t, double t_from_0, double t_from_1) -> ComplexValue {
    return std::pow(t_from_0, b - 1.0) * std::pow(t_from_1, c - b - 1.0) *
           std::pow(1.0 - z * t, -a);
  };
  return norm * integrate_finite_ends(integrand, 0.0, 1.0, ctx);
}

/// 1/Gamma(z), zero at the poles.
inline ComplexValue reciprocal_gamma(ComplexValue z) {
  return detail::is_nonpositive_integer(z) ? ComplexValue(0.0) : 1.0 / gamma(z);
}

/// 2F1 dispatcher: series for |z| <= 0.8, Gauss's sum at z = 1, Pfaff
/// transformation z -> z/(z-1) when that lands inside 0.9, the 1 - z
/// connection formula for non-integer c - a - b, otherwise the Euler integral.
inline ComplexValue gauss_2f1(ComplexValue a, ComplexValue b, ComplexValue c, ComplexValue z,
                              const PrecisionContext& ctx) {
  constexpr double kSeriesRadius = 0.8;
  constexpr double kPfaffRadius = 0.9;
  if (std::abs(z) <= kSeriesRadius || detail::is_nonpositive_integer(a) ||
      detail::is_nonpositive_integer(b)) {
    return gauss_2f1_series(a, b, c, z, ctx);
  }
  const ComplexValue s = c - a - b;
  if (z == 1.0 && s.real() > 0.0) {
    return gamma(c) * gamma(s) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
  }
  const ComplexValue w = z / (z - 1.0);
  if (std::abs(w) <= kPfaffRadius) {
    return std::pow(1.0 - z, -a) * gauss_2f1_series(a, c - b, c, w, ctx);
  }
  const bool integer_gap = detail::is_real(s) && s.real() == std::round(s.real());
  if (std::abs(1.0 - z) <= kSeriesRadius && !integer_gap) {
    const ComplexValue one_minus_z = 1.0 - z;
    const ComplexValue first = gamma(c) * gamma(s) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b) *
                               gauss_2f1_series(a, b, 1.0 - s, one_minus_z, ctx);
    const ComplexValue second = std::pow(one_minus_z, s) * gamma(c) * gamma(-s) * reciprocal_gamma(a) *
                                reciprocal_gamma(b) * gauss_2f1_series(c - a, c - b, s + 1.0, one_minus_z, ctx);
    return first + second;
  }
  if (detail::is_real(a) && detail::is_real(b) && detail::is_real(c)) {
    const double ar = a.real(), br = b.real(), cr = c.real();
    if (cr > br && br > 0.0) return gauss_2f1_euler(ar, br, cr, z, ctx);
    if (cr > ar && ar > 0.0) return gauss_2f1_euler(br, ar, cr, z, ctx);
  }
  throw DomainError("gauss_2f1: argument outside the supported region");
}

inline double gauss_2f1(double a, double b, double c, double z, const PrecisionContext& ctx) {
  return gauss_2f1(ComplexValue(a), ComplexValue(b), ComplexValue(c), ComplexValue(z), ctx).real();
}

// ---------------------------------------------------------------------------
// Appell F1
// ---------------------------------------------------------------------------

/// Double series summed along anti-diagonals m + n = N, requires |x|, |y| < 1.
inline ComplexValue appell_f1_series(double a, double b1, double b2, double c, ComplexValue x,
                                     ComplexValue y, const PrecisionContext& ctx) {
  if (!(std::abs(x) < 1.0 && std::abs(y) < 1.0)) {
    throw DomainError("appell_f1_series: requires |x| < 1 and |y| < 1");
  }
  if (detail::is_nonpositive_integer(c)) throw PoleError("appell_f1: c is a pole");
  std::vector<ComplexValue> cx{1.0}, cy{1.0};  // (b1)_m x^m / m!, (b2)_n y^n / n!
  ComplexValue outer = 1.0;                     // (a)_N / (c)_N
  return sum_series(
             [&](std::size_t n) {
               if (n > 0) {
                 const double k = double(n - 1);
                 cx.push_back(cx.back() * (b1 + k) / (k + 1.0) * x);
                 cy.push_back(cy.back() * (b2 + k) / (k + 1.0) * y);
                 outer *= (a + k) / (c + k);
               }
               ComplexValue diag = 0.0;
               for (std::size_t m = 0; m <= n; ++m) diag += cx[m] * cy[n - m];
               return outer * diag;
             },
             ctx)
      .value;
}

/// Single-integral representation, admissible for c > a > 0:
///   Gamma(c)/(Gamma(a)Gamma(c-a)) int_0^1 t^{a-1}(1-t)^{c-a-1}(1-xt)^{-b1}(1-yt)^{-b2} dt.
inline ComplexValue appell_f1_integral(double a, double b1, double b2, double c, ComplexValue x,
                                       ComplexValue y, const PrecisionContext& ctx) {
  if (!(c > a && a > 0.0)) throw DomainError("appell_f1_integral: requires c > a > 0");
  for (const auto& v : {x, y}) {
    if (v.imag() == 0.0 && v.real() > 1.0) throw DomainError("appell_f1_integral: on branch cut");
  }
  const double norm = gamma(c) / (gamma(a) * gamma(c - a));
  auto integrand = [&](double t, double t_from_0, double t_from_1) -> ComplexValue {
    return std::pow(t_from_0, a - 1.0) * std::pow(t_from_1, c - a - 1.0) *
           std::pow(1.0 - x * t, -b1) * std::pow(1.0 - y * t, -b2);
  };
  return norm * integrate_finite_ends(integrand, 0.0, 1.0, ctx);
}

inline ComplexValue appell_f1(double a, double b1, double b2, double c, ComplexValue x,
                              ComplexValue y, const PrecisionContext& ctx) {
  const double r = std::max(std::abs(x), std::abs(y));
  if (r <= 0.8) return appell_f1_series(a, b1, b2, c, x, y, ctx);
  if (c > a && a > 0.0) return appell_f1_integral(a, b1, b2, c, x, y, ctx);
  if (r < 1.0) return appell_f1_series(a, b1, b2, c, x, y, ctx);
  throw DomainError("appell_f1: arguments outside the supported region");
}

// ---------------------------------------------------------------------------
// Incomplete Beta
// ---------------------------------------------------------------------------

/// Exponent pair of B(x, a, b) = int_0^x t^{a-1} (1-t)^{b-1} dt.
struct BetaBase {
  double a;
  double b;
};

inline double incomplete_beta(double x, BetaBase base, const PrecisionContext& ctx = {}) {
  if (!(base.a > 0.0 && base.b > 0.0)) throw DomainError("incomplete_beta: exponents must be > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("incomplete_beta: x outside [0, 1]");
  if (x == 0.0) return 0.0;
  if (x <= 0.5) {
    return std::pow(x, base.a) / base.a * gauss_2f1(base.a, 1.0 - base.b, base.a + 1.0, x, ctx);
  }
  return beta_complete(base.a, base.b) - incomplete_beta(1.0 - x, {base.b, base.a}, ctx);
}

// ---------------------------------------------------------------------------
// Complete elliptic integral of the first kind
// ---------------------------------------------------------------------------

/// K expressed through the complementary modulus: K = pi / (2 AGM(1, k')).
inline double elliptic_k_from_complement(double kprime) {
  if (!(kprime > 0.0 && kprime <= 1.0)) {
    throw DomainError("elliptic_k: complementary modulus must lie in (0, 1]");
  }
  double a = 1.0, g = kprime;
  for (int i = 0; i < 64 && std::abs(a - g) > 1e-16 * a; ++i) {
    const double an = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = an;
  }
  return kPi / (a + g);
}

inline double elliptic_k(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw DomainError("elliptic_k: requires 0 <= k < 1");
  return elliptic_k_from_complement(std::sqrt((1.0 - k) * (1.0 + k)));
}

// ---------------------------------------------------------------------------
// Terminating polynomials and quadratic-power expansions
// ---------------------------------------------------------------------------

/// P_n(nu, x) = 2F1(-n, nu; 1 - n - nu; x), summed exactly over n + 1 terms.
inline ComplexValue pn_poly(int n, double nu, ComplexValue x) {
  if (n < 0) throw DomainError("pn_poly: n must be non-negative");
  ComplexValue sum = 1.0, term = 1.0;
  for (int l = 0; l < n; ++l) {
    const double denom = 1.0 - n - nu + l;
    if (denom == 0.0) throw PoleError("pn_poly: 1 - n - nu hits a pole");
    term *= (double(l - n) * (nu + l)) / (denom * (l + 1.0)) * x;
    sum += term;
  }
  return sum;
}

struct Quadratic {
  double a, b, c;
};

/// Roots (-b -+ sqrt(b^2 - 4ac)) / (2a), principal square root.
inline std::pair<ComplexValue, ComplexValue> quadratic_roots(const Quadratic& q) {
  if (q.a == 0.0) throw DomainError("quadratic_roots: leading coefficient is zero");
  const ComplexValue disc = std::sqrt(ComplexValue(q.b * q.b - 4.0 * q.a * q.c));
  return {(-q.b - disc) / (2.0 * q.a), (-q.b + disc) / (2.0 * q.a)};
}

/// Partial sums S_0..S_{N-1} of the expansion
///   int_0^x t^mu (a t^2 + b t + c)^{-nu} dt
///     = c^{-nu} x^{mu+1} sum_n (nu)_n P_n(nu, r1/r2) (x/r1)^n / (n! (n + mu + 1)),
/// where r1, r2 are the roots returned by quadratic_roots.
inline std::vector<ComplexValue> quadratic_power_partial_sums(const Quadratic& q, double mu,
                                                              double nu, ComplexValue x,
                                                              std::size_t n_terms) {
  const auto [r1, r2] = quadratic_roots(q);
  const ComplexValue prefactor = std::pow(ComplexValue(q.c), -nu) * std::pow(x, mu + 1.0);
  const ComplexValue ratio = r1 / r2;
  std::vector<ComplexValue> sums;
  sums.reserve(n_terms);
  ComplexValue acc = 0.0, scale = 1.0;  // scale = (nu)_n (x/r1)^n / n!
  for (std::size_t n = 0; n < n_terms; ++n) {
    if (n > 0) scale *= (nu + double(n - 1)) / double(n) * (x / r1);
    acc += scale * pn_poly(int(n), nu, ratio) / (double(n) + mu + 1.0);
    sums.push_back(prefactor * acc);
  }
  return sums;
}

/// sin(6 theta) written in y = sin(theta): 6x^5 y - 20x^3 y^3 + 6x y^5 with x = sqrt(1 - y^2).
inline double sin_multiple_p6(double y) {
  if (!(std::abs(y) <= 1.0)) throw DomainError("sin_multiple_p6: requires |y| <= 1");
  const double x = std::sqrt((1.0 - y) * (1.0 + y));
  const double x2 = x * x, y2 = y * y;
  return x * y * (6.0 * x2 * x2 - 20.0 * x2 * y2 + 6.0 * y2 * y2);
}

}  // namespace rrq
