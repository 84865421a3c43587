#pragma once

// Trigonometric singular values: the arcsin bases
//   psi(x)  = sqrt(2 arcsin x),       psi*(x) = sqrt(arcsin sqrt x),
// the closed form m(R) = sin(pi / (2(R + 1)))^2, and the arcsin series.

#include <cmath>
#include <vector>

#include "rrq/numerics.hpp"
#include "rrq/special.hpp"

namespace rrq {

inline double psi_arcsin(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("psi_arcsin: requires 0 <= x <= 1");
  return std::sqrt(2.0 * std::asin(x));
}

inline double psi_star(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("psi_star: requires 0 <= x <= 1");
  return std::sqrt(std::asin(std::sqrt(x)));
}

/// m(R) = sin(pi / (2(R + 1)))^2.
inline double trig_modular(double big_r) {
  if (!(big_r > 0.0)) throw DomainError("trig_modular: requires R > 0");
  const double s = std::sin(kPi / (2.0 * (big_r + 1.0)));
  return s * s;
}

/// -(1/4) e^{-i pi/(1+R)} (e^{i pi/(1+R)} - 1)^2, the exponential form of m(R).
inline ComplexValue trig_modular_exponential(double big_r) {
  if (!(big_r > 0.0)) throw DomainError("trig_modular_exponential: requires R > 0");
  const ComplexValue e = std::polar(1.0, kPi / (1.0 + big_r));
  return -0.25 / e * (e - 1.0) * (e - 1.0);
}

/// (1 - sqrt(1 - m(R/2))) / 2, the right side of the duplication relation for m(R + 1).
inline double trig_modular_step(double big_r) {
  const double m = trig_modular(0.5 * big_r);
  return 0.5 * (1.0 - std::sqrt(1.0 - m));
}

/// s in (0, 1) with psi(1 - s) / psi(s) = sqrt r, i.e. arcsin(1 - s) = r arcsin(s).
inline double arcsin_singular_value(double r, const PrecisionContext& ctx = {}) {
  if (!(r > 0.0)) throw DomainError("arcsin_singular_value: requires r > 0");
  return find_root([r](double s) { return std::asin(1.0 - s) - r * std::asin(s); }, 0.0, 1.0,
                   ctx);
}

/// 2i + y^{-1} - y + y^{-r} - y^r with y = i s + sqrt(1 - s^2).
inline ComplexValue arcsin_unit_circle_form(double s, double r) {
  const ComplexValue y(std::sqrt((1.0 - s) * (1.0 + s)), s);
  const ComplexValue two_i(0.0, 2.0);
  return two_i + 1.0 / y - y + std::pow(y, -r) - std::pow(y, r);
}

/// (sqrt(1 - w^2) - i w)^r - (sqrt(1 - w^2) + i w)^r + 2i(1 - w).
inline ComplexValue arcsin_binomial_form(double w, double r) {
  const double c = std::sqrt((1.0 - w) * (1.0 + w));
  return std::pow(ComplexValue(c, -w), r) - std::pow(ComplexValue(c, w), r) +
         ComplexValue(0.0, 2.0 * (1.0 - w));
}

/// The xi / x_r construction with xi = (-i - sqrt 3)/2, principal branches throughout.
struct XiChain {
  ComplexValue x_r;
  ComplexValue x;
  ComplexValue t;  // arcsin(x)
};

inline XiChain xi_chain(double r) {
  if (!(r > 0.0)) throw DomainError("xi_chain: requires r > 0");
  const ComplexValue i(0.0, 1.0);
  const ComplexValue xi = 0.5 * (-i - std::sqrt(3.0));
  const ComplexValue xi2 = xi * xi;
  const ComplexValue root = std::sqrt(1.0 - 4.0 * i * xi - 2.0 * xi2 + 4.0 * i * xi2 * xi + xi2 * xi2);
  const ComplexValue inner = (1.0 - 2.0 * i * xi - xi2 + root) / xi;
  const ComplexValue x_r = std::pow(2.0, -1.0 / r) * std::pow(inner, 1.0 / r);
  const ComplexValue x = -i * (1.0 - x_r * x_r) / (2.0 * x_r);
  return {x_r, x, std::asin(x)};
}

/// Coefficient (1/4)_n (3/4)_{-n} / ((1/2)_{-n} n!), negative indices via (a)_{-n} = 1/(a - n)_n.
inline double arcsin_series_coefficient(int n) {
  if (n < 0) throw DomainError("arcsin_series_coefficient: requires n >= 0");
  return pochhammer(0.25, n) * pochhammer(0.75, -n) / (pochhammer(0.5, -n) * gamma(n + 1.0));
}

struct ArcsinSeries {
  std::vector<double> partial_sums;  // S_0 .. S_{N-1}
  double tail_bound;                 // bound on |limit - S_{N-1}|
};

/// Partial sums of sum_n c_n m^{n+1/2} / (n + 1/2) for 0 < m < 1.
inline ArcsinSeries arcsin_series(double m, int n_terms) {
  if (!(m > 0.0 && m < 1.0)) throw DomainError("arcsin_series: requires 0 < m < 1");
  if (n_terms < 1) throw DomainError("arcsin_series: requires at least one term");
  ArcsinSeries out;
  out.partial_sums.reserve(std::size_t(n_terms));
  double acc = 0.0, c_last = 0.0;
  for (int n = 0; n < n_terms; ++n) {
    c_last = arcsin_series_coefficient(n);
    acc += c_last * std::pow(m, n + 0.5) / (n + 0.5);
    out.partial_sums.push_back(acc);
  }
  // Coefficients are positive and non-increasing.
  const double next = n_terms + 0.5;
  out.tail_bound = c_last * std::pow(m, next) / (next * (1.0 - m));
  return out;
}

}  // namespace rrq
