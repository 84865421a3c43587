#pragma once

// Double-exponential (tanh-sinh) quadrature for integrands with algebraic
// endpoint singularities, plus semi-infinite ranges.
//
// The core rule hands the integrand the sample point together with its exact
// distances to both ends of the interval. Integrands whose singular factor is
// (b - x)^s should use that distance instead of recomputing b - x, which
// cancels catastrophically close to b.

#include <cmath>
#include <limits>
#include <variant>

#include "rrq/numerics.hpp"

namespace rrq {

template <typename T>
struct QuadEstimate {
  T value{};
  double gap = 0.0;  // |I_L - I_{L-1}| at the last level
  int levels = 0;
  std::size_t evaluations = 0;
};

struct EndpointFlags {
  bool singular_at_a = true;
  bool singular_at_b = true;
};

namespace detail {

// Smallest endpoint distance sampled next to a singular end.
inline constexpr double kSingularFloor = 1e-300;

template <typename T>
T add_checked(T acc, T v) {
  if (!std::isfinite(detail::magnitude(v))) {
    throw DomainError("quadrature: integrand is not finite at a sample point");
  }
  return acc + v;
}

}  // namespace detail

/// g(x, dist_a, dist_b) -> double or ComplexValue, integrated over (a, b).
template <typename G>
auto tanh_sinh(G&& g, double a, double b, EndpointFlags flags, const PrecisionContext& ctx)
    -> QuadEstimate<std::decay_t<decltype(g(0.0, 0.0, 0.0))>> {
  using T = std::decay_t<decltype(g(0.0, 0.0, 0.0))>;
  if (!(a < b)) throw DomainError("tanh_sinh: requires a < b");
  const double width = b - a;
  const double half = 0.5 * width;
  const double mid = a + half;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double floor_a =
      flags.singular_at_a ? detail::kSingularFloor : 4.0 * kEps * std::max(std::abs(a), half);
  const double floor_b =
      flags.singular_at_b ? detail::kSingularFloor : 4.0 * kEps * std::max(std::abs(b), half);

  std::size_t evals = 0;
  // Sum of weighted samples at abscissae t = start, start + stride, ...
  auto sweep = [&](double start, double stride) {
    T acc{};
    bool live_a = true, live_b = true;
    for (double t = start; live_a || live_b; t += stride) {
      const double u = 0.5 * kPi * std::sinh(t);
      const double cu = std::cosh(u);
      const double d = 1.0 / (std::exp(u) * cu);  // 1 - tanh(u)
      const double w = 0.5 * kPi * std::cosh(t) / (cu * cu) * half;
      const double dist = half * d;
      if (w == 0.0 || !std::isfinite(cu)) break;
      if (live_b) {
        if (dist < floor_b) {
          live_b = false;
        } else {
          acc = detail::add_checked(acc, T(w * g(b - dist, width - dist, dist)));
          ++evals;
        }
      }
      if (live_a) {
        if (dist < floor_a) {
          live_a = false;
        } else {
          acc = detail::add_checked(acc, T(w * g(a + dist, dist, width - dist)));
          ++evals;
        }
      }
    }
    return acc;
  };

  double h = 1.0;
  T sum = T(0.5 * kPi * half * g(mid, half, half));
  ++evals;
  sum += sweep(h, h);
  T estimate = h * sum;
  double gap = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= ctx.max_quad_levels; ++level) {
    h *= 0.5;
    sum += sweep(h, 2.0 * h);
    const T next = h * sum;
    gap = detail::magnitude(next - estimate);
    estimate = next;
    if (level >= 3 && gap <= 100.0 * ctx.eps_rel * detail::magnitude(estimate) + ctx.eps_abs) {
      return {estimate, gap, level, evals};
    }
  }
  throw AccuracyError("tanh_sinh: level cap reached without agreement",
                      detail::magnitude(estimate), gap);
}

/// Integral of f over (a, b); f is never evaluated at a or b themselves.
template <typename F>
double integrate_finite(F&& f, double a, double b, bool singular_at_a, bool singular_at_b,
                        const PrecisionContext& ctx) {
  if (a == b) return 0.0;
  if (a > b) return -integrate_finite(f, b, a, singular_at_b, singular_at_a, ctx);
  return tanh_sinh([&](double x, double, double) { return f(x); }, a, b,
                   {singular_at_a, singular_at_b}, ctx)
      .value;
}

/// Distance-aware variant: g(x, x - a, b - x).
template <typename G>
auto integrate_finite_ends(G&& g, double a, double b, const PrecisionContext& ctx) {
  return tanh_sinh(std::forward<G>(g), a, b, {true, true}, ctx).value;
}

struct AlgebraicDecay {
  double p;  // f(t) = O(t^{-p}) as t -> infinity
};
struct ExponentialDecay {
  double lambda;  // f(t) = O(exp(-lambda t))
};
using Decay = std::variant<AlgebraicDecay, ExponentialDecay>;

/// Integral of f over (a, infinity).
///
/// Exponential decay: truncated at T with lambda (T - a) >= ln(1/eps_abs) + 10.
/// Algebraic decay: t = a + s/(1 - s) maps onto s in (0, 1); the Jacobian
/// leaves an integrable (1 - s)^{p-2} singularity at s = 1.
template <typename F>
double integrate_to_infinity(F&& f, double a, Decay decay, const PrecisionContext& ctx) {
  if (const auto* e = std::get_if<ExponentialDecay>(&decay)) {
    if (!(e->lambda > 0.0)) throw DomainError("integrate_to_infinity: lambda must be positive");
    const double span = (std::log(1.0 / ctx.eps_abs) + 10.0) / e->lambda;
    return integrate_finite(f, a, a + span, true, false, ctx);
  }
  const double p = std::get<AlgebraicDecay>(decay).p;
  if (!(p > 1.0)) throw DivergenceError("integrate_to_infinity: algebraic decay p <= 1", {}, 0);
  return tanh_sinh(
             [&](double s, double, double one_minus_s) {
               const double t = a + s / one_minus_s;
               return f(t) / one_minus_s / one_minus_s;
             },
             0.0, 1.0, {true, true}, ctx)
      .value;
}

}  // namespace rrq
