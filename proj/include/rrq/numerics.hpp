#pragma once

// Precision policy, error types and the small numerical kernels shared by
// every other header: series summation, bracketed root finding and
// Richardson-refined central differences.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace rrq {

using ComplexValue = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Series failed the tail criterion within the term cap.
class DivergenceError : public NumericError {
 public:
  DivergenceError(const std::string& what, ComplexValue partial_sum, std::size_t terms)
      : NumericError(what), partial_sum_(partial_sum), terms_(terms) {}
  ComplexValue partial_sum() const noexcept { return partial_sum_; }
  std::size_t terms() const noexcept { return terms_; }

 private:
  ComplexValue partial_sum_;
  std::size_t terms_;
};

class BracketError : public NumericError {
 public:
  BracketError(const std::string& what, double lo, double hi, double flo, double fhi)
      : NumericError(what), lo_(lo), hi_(hi), flo_(flo), fhi_(fhi) {}
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double f_lo() const noexcept { return flo_; }
  double f_hi() const noexcept { return fhi_; }

 private:
  double lo_, hi_, flo_, fhi_;
};

class IterationCapError : public NumericError {
 public:
  IterationCapError(const std::string& what, double lo, double hi)
      : NumericError(what), lo_(lo), hi_(hi) {}
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_, hi_;
};

/// Quadrature refinement ran out of levels before successive estimates agreed.
class AccuracyError : public NumericError {
 public:
  AccuracyError(const std::string& what, double estimate, double gap)
      : NumericError(what), estimate_(estimate), gap_(gap) {}
  double estimate() const noexcept { return estimate_; }
  double gap() const noexcept { return gap_; }

 private:
  double estimate_, gap_;
};

// ---------------------------------------------------------------------------
// Precision policy
// ---------------------------------------------------------------------------

struct PrecisionContext {
  double eps_rel = 1e-12;
  double eps_abs = 1e-15;
  std::size_t max_series_terms = 20000;
  int max_quad_levels = 12;
  int max_root_iters = 300;
  double fd_step = std::cbrt(std::numeric_limits<double>::epsilon());

  void validate() const {
    if (!(eps_rel > 0.0) || !(eps_abs > 0.0) || !(fd_step > 0.0) || max_series_terms < 1 ||
        max_quad_levels < 1 || max_root_iters < 1) {
      throw DomainError("PrecisionContext: tolerances must be positive and caps >= 1");
    }
  }

  /// Defaults, with eps_rel taken from RRCF_EPS when that variable parses as a positive number.
  static PrecisionContext from_environment() {
    PrecisionContext ctx;
    if (const char* env = std::getenv("RRCF_EPS")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end != env && v > 0.0 && std::isfinite(v)) ctx.eps_rel = v;
    }
    return ctx;
  }
};

// ---------------------------------------------------------------------------
// Series summation
// ---------------------------------------------------------------------------

template <typename T>
struct SeriesSum {
  T value{};
  std::size_t terms = 0;
};

namespace detail {
inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const ComplexValue& v) { return std::abs(v); }
inline ComplexValue as_complex(double v) { return {v, 0.0}; }
inline ComplexValue as_complex(const ComplexValue& v) { return v; }
}  // namespace detail

/// Sums term(0) + term(1) + ... until two consecutive terms satisfy
/// |term(n)| <= eps_rel*|S_n| + eps_abs. Two terms are required so that an
/// isolated zero coefficient does not end the sum early.
template <typename Term>
auto sum_series(Term&& term, const PrecisionContext& ctx)
    -> SeriesSum<std::decay_t<decltype(term(std::size_t{0}))>> {
  using T = std::decay_t<decltype(term(std::size_t{0}))>;
  T sum{};
  int quiet = 0;
  for (std::size_t n = 0; n < ctx.max_series_terms; ++n) {
    const T t = term(n);
    sum += t;
    if (!std::isfinite(detail::magnitude(sum))) {
      throw DivergenceError("sum_series: partial sum is not finite", detail::as_complex(sum), n + 1);
    }
    if (detail::magnitude(t) <= ctx.eps_rel * detail::magnitude(sum) + ctx.eps_abs) {
      if (++quiet >= 2) return {sum, n + 1};
    } else {
      quiet = 0;
    }
  }
  throw DivergenceError("sum_series: no convergence within max_series_terms",
                        detail::as_complex(sum), ctx.max_series_terms);
}

/// Wynn epsilon extrapolation of a sequence of partial sums. Returns the
/// even-column estimate that moved least from its predecessor.
template <typename T>
T wynn_epsilon(std::span<const T> partial_sums) {
  if (partial_sums.empty()) throw DomainError("wynn_epsilon: empty sequence");
  const std::size_t n = partial_sums.size();
  std::vector<T> prev(n, T{});  // eps_{k-1}
  std::vector<T> cur(partial_sums.begin(), partial_sums.end());  // eps_k
  T best = cur.back();
  T last = best;
  double best_change = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<T> next(n - k);
    bool ok = true;
    for (std::size_t i = 0; i + k < n; ++i) {
      const T diff = cur[i + 1] - cur[i];
      if (detail::magnitude(diff) == 0.0) {
        ok = false;
        break;
      }
      next[i] = prev[i + 1] + T(1) / diff;
    }
    if (!ok) break;
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0) {
      const T cand = cur.back();
      if (!std::isfinite(detail::magnitude(cand))) break;
      const double change = detail::magnitude(cand - last);
      if (change < best_change) {
        best_change = change;
        best = cand;
      }
      last = cand;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

struct RootResult {
  double x = 0.0;
  double f = 0.0;
  int iterations = 0;
};

/// Brent's method on a sign-changing bracket. Inverse quadratic / secant steps
/// are accepted only while they shrink the bracket fast enough; otherwise the
/// step falls back to bisection, so convergence is guaranteed.
template <typename F>
RootResult find_root_detailed(F&& f, double lo, double hi, const PrecisionContext& ctx) {
  if (!(lo < hi)) std::swap(lo, hi);
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (!std::isfinite(fa) || !std::isfinite(fb)) {
    throw BracketError("find_root: function not finite at bracket ends", lo, hi, fa, fb);
  }
  if (fa == 0.0) return {a, fa, 0};
  if (fb == 0.0) return {b, fb, 0};
  if ((fa > 0.0) == (fb > 0.0)) {
    throw BracketError("find_root: no sign change on bracket", lo, hi, fa, fb);
  }
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int it = 1; it <= ctx.max_root_iters; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                       0.5 * (ctx.eps_rel * std::abs(b) + ctx.eps_abs);
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return {b, fb, it};
    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc, r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
    if (!std::isfinite(fb)) {
      throw BracketError("find_root: function not finite inside bracket", lo, hi, fa, fb);
    }
  }
  throw IterationCapError("find_root: iteration cap reached", std::min(b, c), std::max(b, c));
}

template <typename F>
double find_root(F&& f, double lo, double hi, const PrecisionContext& ctx) {
  return find_root_detailed(std::forward<F>(f), lo, hi, ctx).x;
}

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------

struct Derivative {
  double value = 0.0;
  double error = 0.0;
};

/// Central difference at steps h and h/2 combined by one Richardson step.
template <typename F>
Derivative differentiate(F&& f, double x, const PrecisionContext& ctx) {
  const double h = ctx.fd_step * std::max(1.0, std::abs(x));
  auto central = [&](double step) {
    const double fp = f(x + step), fm = f(x - step);
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
      throw DomainError("differentiate: non-finite sample near x");
    }
    return (fp - fm) / (2.0 * step);
  };
  const double d1 = central(h);
  const double d2 = central(0.5 * h);
  const double value = (4.0 * d2 - d1) / 3.0;
  return {value, std::abs(value - d2)};
}

}  // namespace rrq
