#pragma once

// The sextic  a X^2 + b X + b^2 / (20 a) = C1 X^{5/3}  solved through the
// continued fraction, along two independent paths.

#include <cmath>
#include <limits>

#include "rrq/modular.hpp"

namespace rrq {

struct SexticInstance {
  double a;
  double b;
  double c1;

  /// 250 C1^3 / (a^2 b).
  double j() const {
    if (a == 0.0 || b == 0.0) throw DomainError("SexticInstance: a and b must be nonzero");
    const double value = 250.0 * c1 * c1 * c1 / (a * a * b);
    if (!std::isfinite(value)) throw DomainError("SexticInstance: j is not finite");
    return value;
  }

  /// Instance with given a, b whose invariant equals j.
  static SexticInstance with_j(double a, double b, double j) {
    return {a, b, std::cbrt(j * a * a * b / 250.0)};
  }
};

struct SexticSolution {
  double X;
  double t;
  double r;
  double k4r;
  double X_alt;
  double residual;
  double residual_rel;
  double argument;  // the G argument of path A
};

namespace detail {

inline constexpr double kSexticTmax = 0.029437251522859363;  // (3 - 2 sqrt 2)^2

inline double signed_pow_five_thirds(double x) {
  const double c = std::cbrt(x);
  return c * c * c * c * c;
}

}  // namespace detail

/// j = 16 (1 + 14t + t^2)^3 / (t (1 - t)^4) for t = k_{4r}^2 on the branch (0, (3 - 2 sqrt 2)^2].
/// Values of j within 1e-9 relative of 1728 map to the branch endpoint.
inline double sextic_t_from_j(double j, const PrecisionContext& ctx = {}) {
  if (!std::isfinite(j)) throw DomainError("sextic_t_from_j: j is not finite");
  constexpr double kJmin = 1728.0;
  if (j < kJmin * (1.0 - 1e-9)) {
    throw DomainError("sextic_t_from_j: no real modulus for j = " + std::to_string(j) +
                      " (requires j > 1728)");
  }
  const double log_tmax = std::log(detail::kSexticTmax);
  auto gap = [&](double lt) { return std::log(klein_j_k4r_form(std::exp(lt)) / j); };
  if (gap(log_tmax) >= 0.0) return detail::kSexticTmax;
  const double lo = std::log(16.0 / j) - 5.0;
  return std::exp(find_root(gap, lo, log_tmax, ctx));
}

/// The G argument on path A: (3/5) 2^{1/3} t^{1/6} 2F1[1/3, 1/6; 7/6; t].
inline double sextic_argument(double t, const PrecisionContext& ctx = {}) {
  return 0.6 * std::cbrt(2.0) * std::pow(t, 1.0 / 6.0) *
         gauss_2f1(1.0 / 3.0, 1.0 / 6.0, 7.0 / 6.0, t, ctx);
}

/// |a X^2 + b X + b^2/(20a) - C1 X^{5/3}|, absolute and relative to the largest term.
inline std::pair<double, double> sextic_residual(const SexticInstance& inst, double x) {
  const double terms[] = {inst.a * x * x, inst.b * x, inst.b * inst.b / (20.0 * inst.a),
                          -inst.c1 * detail::signed_pow_five_thirds(x)};
  double sum = 0.0, scale = 0.0;
  for (double v : terms) {
    sum += v;
    scale = std::max(scale, std::abs(v));
  }
  return {std::abs(sum), scale > 0.0 ? std::abs(sum) / scale : std::abs(sum)};
}

inline SexticSolution solve_sextic(const SexticInstance& inst, const PrecisionContext& ctx = {}) {
  const double j = inst.j();
  const double t = sextic_t_from_j(j, ctx);
  const double k4r = std::sqrt(t);
  const double scale = inst.b / (250.0 * inst.a);

  const double argument = sextic_argument(t, ctx);
  const double x_a = scale * G_of_x(argument, ctx);

  const double r = 0.25 * modular_parameter(k4r);
  const double x_b = scale * u_of_q(Nome::from_r_doubled(r));

  const auto [res, res_rel] = sextic_residual(inst, x_a);
  return {x_a, t, r, k4r, x_b, res, res_rel, argument};
}

}  // namespace rrq
