#pragma once

// The check registry: every identity of the library evaluated by independent
// routes, with status, timing and a machine-readable report.

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "rrq/check.hpp"
#include "rrq/identities.hpp"
#include "rrq/modular.hpp"
#include "rrq/modular_checks.hpp"
#include "rrq/sextic.hpp"
#include "rrq/trig_modular.hpp"

namespace rrq {

class UnknownCheckError : public std::out_of_range {
 public:
  explicit UnknownCheckError(const std::string& id) : std::out_of_range("unknown check id: " + id) {}
};

struct CheckEntry {
  CheckSpec spec;
  std::function<CheckResult(const CheckSpec&, const PrecisionContext&)> run;
};

// ---------------------------------------------------------------------------
// Series helpers shared by several checks
// ---------------------------------------------------------------------------

/// Partial sums of
///   prefactor sum_n [sum_l C(n,l) (nu)_l / (d0 - n)_l ratio^l] (nu)_n / n! z^n / (n + mu + 1),
/// evaluated term by term exactly as written.
inline std::vector<ComplexValue> double_sum_partials(double nu, double d0, ComplexValue ratio,
                                                     ComplexValue z, double mu,
                                                     ComplexValue prefactor, int n_terms) {
  std::vector<ComplexValue> out;
  out.reserve(std::size_t(n_terms));
  ComplexValue acc = 0.0, outer = 1.0;  // outer = (nu)_n z^n / n!
  for (int n = 0; n < n_terms; ++n) {
    if (n > 0) outer *= (nu + n - 1.0) / double(n) * z;
    ComplexValue inner = 0.0, term = 1.0;
    for (int l = 0; l <= n; ++l) {
      if (l > 0) term *= double(n - l + 1) / double(l) * (nu + l - 1.0) / (d0 - n + l - 1.0) * ratio;
      inner += term;
    }
    acc += inner * outer / (n + mu + 1.0);
    out.push_back(prefactor * acc);
  }
  return out;
}

/// Series for Gamma(alpha)^2 / ((r + 1) Gamma(2 alpha)) at x = beta_r.
inline double beta_singular_series(double alpha, double beta, int n_terms) {
  const double nu = 0.5 * (1.0 - alpha);
  return double_sum_partials(nu, 0.5 * (1.0 + alpha), -1.0, beta, alpha - 1.0,
                             std::pow(beta, alpha), n_terms)
      .back()
      .real();
}

namespace detail {

inline constexpr double kDefaultEps = 1e-12;

inline double ramanujan_point() {
  const double s5 = std::sqrt(5.0);
  return -(1.0 + s5) / 2.0 + std::sqrt((5.0 + s5) / 2.0);
}

inline double theorem3_hyp(double k, const PrecisionContext& ctx) {
  return 3.0 * std::cbrt(2.0 * k) * gauss_2f1(1.0 / 3.0, 1.0 / 6.0, 7.0 / 6.0, k * k, ctx);
}

inline Evidence evidence(std::string method, ComplexValue value, ComplexValue rhs) {
  return {std::move(method), value, relative_distance(value, rhs)};
}

/// Literal radicals for the (1/6, 1/6) singular values.
inline double beta16_radical(const std::string& which) {
  const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
  const double c2 = std::cbrt(2.0), c4 = c2 * c2;
  if (which == "2") return 0.25 * (2.0 - s3);
  if (which == "3") return 0.25 * (2.0 - std::sqrt(3.0 * (3.0 - s3)));
  if (which == "3/2") return 0.125 * (4.0 - std::sqrt(-9.0 + 9.0 * s5 - 3.0 * std::sqrt(150.0 - 66.0 * s5)));
  if (which == "4") return 0.125 * (4.0 - std::sqrt(-9.0 + 9.0 * s5 + 3.0 * std::sqrt(150.0 - 66.0 * s5)));
  if (which == "5") return (1.0 + 3.0 * c2 - 3.0 * c4) / (8.0 + 4.0 * std::sqrt(3.0 * (1.0 - c2 + c4)));
  throw DomainError("beta16_radical: unknown index");
}

inline double parse_ratio(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return std::stod(s);
  return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

inline std::vector<CheckEntry> build_registry() {
  using detail::evidence;
  std::vector<CheckEntry> reg;
  auto add = [&reg](CheckSpec spec, std::function<CheckResult(const CheckSpec&, const PrecisionContext&)> fn) {
    reg.push_back({std::move(spec), std::move(fn)});
  };
  const auto flag = StatusPolicy::flag_on_fail;
  const auto strict = StatusPolicy::strict;
  const auto absolute = Comparison::absolute;

  // --- continued fraction and eta quotients ---------------------------------
  add({"RRCF.e2pi", "R(e^{-2pi}) = -(1+sqrt5)/2 + sqrt((5+sqrt5)/2)", 1e-10, strict, absolute},
      [](const CheckSpec& s, const PrecisionContext&) {
        const Nome q = Nome::from_r_doubled(1.0);
        const double cf = rrcf_cf_oracle(q, 60);
        return make_check(s, rrcf(q), detail::ramanujan_point(),
                          "lhs: eta quotient; rhs: radical",
                          {evidence("continued fraction, depth 60", cf, detail::ramanujan_point())});
      });
  for (double q : {0.05, 0.1, 0.2, 0.3, 0.5}) {
    const std::string tag = "q=" + param_string(q);
    add({"Eq5." + tag, "1/R(q) - 1 - R(q) = f(-q^{1/5}) / (q^{1/5} f(-q^5))", 1e-10},
        [q](const CheckSpec& s, const PrecisionContext&) {
          const double r = rrcf_cf_oracle(Nome(q), 400);
          return make_check(s, 1.0 / r - 1.0 - r, std::exp(log_rrcf_kappa(Nome(q))),
                            "lhs: continued fraction depth 400; rhs: eta products");
        });
    add({"Eq6." + tag, "1/R^5(q) - 11 - R^5(q) = f(-q)^6 / (q f(-q^5)^6)", 1e-10},
        [q](const CheckSpec& s, const PrecisionContext&) {
          const double r = rrcf_cf_oracle(Nome(q), 400);
          const double r5 = std::pow(r, 5);
          return make_check(s, 1.0 / r5 - 11.0 - r5, u_of_q(Nome(q)),
                            "lhs: continued fraction depth 400; rhs: eta products");
        });
  }
  for (double q : {0.05, 0.2}) {
    add({"Eq7.q=" + param_string(q), "R'(q) = 5^{-1} q^{-5/6} f(-q)^4 R(q) (R^{-5} - 11 - R^5)^{1/6}", 1e-6},
        [q](const CheckSpec& s, const PrecisionContext& ctx) {
          const Derivative d = differentiate([](double x) { return rrcf(Nome(x)); }, q, ctx);
          return make_check(s, rrcf_derivative(Nome(q)), d.value,
                            "lhs: closed form; rhs: Richardson central difference");
        });
  }

  // --- moments of R^{5 nu} ---------------------------------------------------
  for (auto [nu, label] : {std::pair{0.5, "1/2"}, std::pair{1.0, "1"}}) {
    add({std::string("T1.nu=") + label,
         "int f(-q)^4 q^{-5/6} R(q)^{5nu} dq = Gamma(5/6) ((11+5sqrt5)/2)^{-1/6-nu} Gamma(1/6+nu)/Gamma(1+nu) 2F1(...)",
         1e-7, strict, Comparison::relative, true},
        [nu](const CheckSpec& s, const PrecisionContext& ctx) {
          const double rhs = rrcf_moment_closed(nu, ctx);
          return make_check(s, rrcf_moment_q(nu, ctx), rhs,
                            "lhs: q-side tanh-sinh over (0,1); rhs: Gauss 2F1 closed form",
                            {evidence("x-side quadrature 5 int x^{5nu-1} u(x)^{-1/6} dx",
                                      rrcf_moment_x(nu, ctx), rhs)});
        });
  }
  add({"Eq13.n0", "27 Gamma(5/6) Gamma(8/3) sin((2/3) arctan sqrt((-11+5sqrt5)/(11+5sqrt5))) / (2 sqrt(5 pi))",
       1e-7, flag},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double rhs = rrcf_half_moment_closed();
        const double q_side = rrcf_moment_q(0.5, ctx);
        return make_check(s, q_side, rhs, "lhs: q-side quadrature at nu = 1/2; rhs: printed constant",
                          {evidence("x-side quadrature", rrcf_moment_x(0.5, ctx), rhs),
                           evidence("hypergeometric closed form at nu = 1/2", rrcf_moment_closed(0.5, ctx), rhs)});
      });

  // --- powers of u ------------------------------------------------------------
  add({"T2.n=1", "int u(q)^n f(-q^5)^5/f(-q) dq = int_0^x t^{n-1} / sqrt(125+22t+t^2) dt", 1e-7, strict,
       Comparison::relative, true},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double x = 10.0;
        const double rhs = eta_quotient_power_n1_closed(x);
        return make_check(s, eta_quotient_power_q(1.0, x, ctx), rhs,
                          "x = 10; q-integral taken from u^{-1}(x) to 1 (the printed lower limit 0 diverges); "
                          "rhs: asinh((x+11)/2) - asinh(11/2)",
                          {evidence("t-side quadrature", eta_quotient_power_t(1.0, x, ctx), rhs),
                           evidence("Appell F1 with roots -11 -+ 2i", eta_quotient_power_f1(1.0, x, ctx), rhs)});
      });
  add({"T2.n=3/2", "int u(q)^n f(-q^5)^5/f(-q) dq = int_0^x t^{n-1} / sqrt(125+22t+t^2) dt", 1e-7, strict,
       Comparison::relative, true},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double x = 10.0;
        const double rhs = eta_quotient_power_f1(1.5, x, ctx);
        return make_check(s, eta_quotient_power_q(1.5, x, ctx), rhs,
                          "x = 10; q-integral taken from u^{-1}(x) to 1; rhs: Appell F1 with roots -11 -+ 2i",
                          {evidence("t-side quadrature", eta_quotient_power_t(1.5, x, ctx), rhs)});
      });
  add({"Eq16.m=1.n=1/2", "int_0^{rho1} x^m (ax^2+bx+c)^n dx = c^n rho1^{m+1} B(m+1,n+1) 2F1(m+1,-n;m+n+2;rho1/rho2)",
       1e-7},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        // x^2 - 5x + 6 = (x - 2)(x - 3)
        const double m = 1.0, n = 0.5, c = 6.0, r1 = 2.0, r2 = 3.0;
        const double lhs = integrate_finite_ends(
            [&](double x, double, double to_r1) { return std::pow(x, m) * std::pow(to_r1 * (r2 - x), n); },
            0.0, r1, ctx);
        const double rhs = std::pow(c, n) * std::pow(r1, m + 1.0) * gamma(m + 1.0) * gamma(n + 1.0) /
                           gamma(m + n + 2.0) * gauss_2f1(m + 1.0, -n, m + n + 2.0, r1 / r2, ctx);
        return make_check(s, lhs, rhs, "a=1, b=-5, c=6; lhs: quadrature; rhs: Gauss 2F1");
      });
  add({"Eq17.nu=-1/2", "int_0^1 (f(-q^5)/f(-q))^{6nu+5} f(-q)^4 q^nu dq = -pi csc(nu pi)/11^{nu+1} 2F1[(nu+1)/2,(nu+2)/2;1;-4/121]",
       1e-7, strict, Comparison::relative, true},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double rhs = eta_ratio_closed_printed(-0.5, ctx);
        return make_check(s, eta_ratio_integral_q(-0.5, ctx), rhs,
                          "lhs converges exactly for -1 < nu < 0; the printed sign is consistent there",
                          {evidence("x-side quadrature 5 int u(x)^{-nu-1}/x dx at nu=-1/2",
                                    u_power_integral_x(0.5, ctx), rhs)});
      });
  add({"Eq17.nu=1/2", "int_0^1 (f(-q^5)/f(-q))^{6nu+5} f(-q)^4 q^nu dq = -pi csc(nu pi)/11^{nu+1} 2F1[(nu+1)/2,(nu+2)/2;1;-4/121]",
       1e-7, flag},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double rhs = eta_ratio_closed_printed(0.5, ctx);
        const double q1 = eta_ratio_integral_q(0.5, ctx, 0.1);
        const double q2 = eta_ratio_integral_q(0.5, ctx, 0.05);
        const double q3 = eta_ratio_integral_q(0.5, ctx, 0.025);
        const double x3 = u_power_integral_x(-0.5, ctx, 1e-6);
        return make_check(s, q3, rhs,
                          "positive integrand grows like exp(4 nu pi^2 / (5 (1-q))) near q = 1, so the lhs diverges "
                          "for nu > 0 while the printed rhs is negative; lhs is the integral truncated at q = 0.975",
                          {evidence("q-side truncated at 0.9", q1, rhs), evidence("q-side truncated at 0.95", q2, rhs),
                           evidence("q-side truncated at 0.975", q3, rhs),
                           evidence("x-side 5 int u^{-nu-1}/x truncated 1e-6 below R(1)", x3, rhs),
                           evidence("convergent reading nu -> -nu", eta_ratio_integral_q(-0.5, ctx),
                                    eta_ratio_closed_printed(-0.5, ctx))});
      });
  add({"Eq18.nu=1/2", "int_0^1 u(q)^{nu-5/6} f(-q)^4 q^{-5/6} dq = pi csc(nu pi) 11^{nu-1} 2F1[(nu+1)/2,(nu+2)/2;1;-4/121]",
       1e-7, flag},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double rhs = u_power_closed(0.5, false, ctx);
        return make_check(s, u_power_integral_q(0.5, ctx), rhs,
                          "printed 2F1 parameters; the integral equals the reflected parameters (1-nu)/2, (2-nu)/2",
                          {evidence("x-side quadrature", u_power_integral_x(0.5, ctx), rhs),
                           evidence("reflected-parameter closed form", u_power_closed(0.5, true, ctx), rhs)});
      });
  for (auto [nu, label] : {std::pair{0.5, "1/2"}, std::pair{1.0 / 3.0, "1/3"}}) {
    add({std::string("Eq18.reflected.nu=") + label,
         "int_0^1 u(q)^{nu-5/6} f(-q)^4 q^{-5/6} dq = pi csc(nu pi) 11^{nu-1} 2F1[(1-nu)/2,(2-nu)/2;1;-4/121]", 1e-7,
         strict, Comparison::relative, true},
        [nu](const CheckSpec& s, const PrecisionContext& ctx) {
          const double rhs = u_power_closed(nu, true, ctx);
          return make_check(s, u_power_integral_q(nu, ctx), rhs,
                            "lhs: q-side quadrature; rhs: the nu -> -nu form of the eta-ratio integral",
                            {evidence("x-side quadrature", u_power_integral_x(nu, ctx), rhs),
                             evidence("eta-ratio integral at -nu", eta_ratio_integral_q(-nu, ctx), rhs)});
        });
  }

  // --- elliptic bridge --------------------------------------------------------
  for (double r : {1.0, 2.0, 4.0}) {
    add({"Eq19.r=" + param_string(r), "f(-q) = 2^{1/3} pi^{-1/2} q^{-1/24} k^{1/12} k'^{1/3} K(k)^{1/2}", 1e-9},
        [r](const CheckSpec& s, const PrecisionContext& ctx) {
          const ModulusPair p = singular_modulus_pair(r, ctx);
          const Nome q = Nome::from_r(r);
          const double rhs = std::cbrt(2.0) / std::sqrt(kPi) * std::exp(-q.log() / 24.0) *
                             std::pow(p.k, 1.0 / 12.0) * std::cbrt(p.kprime) *
                             std::sqrt(elliptic_k_from_complement(p.kprime));
          return make_check(s, ramanujan_f(q), rhs, "lhs: product; rhs: singular modulus and AGM");
        });
  }
  {
    auto q_of_k = [](double k) {
      const double kp = std::sqrt((1.0 - k) * (1.0 + k));
      return std::exp(-kPi * elliptic_k_from_complement(k) / elliptic_k_from_complement(kp));
    };
    add({"Eq20.sign.r=4", "dq/dk = -q pi^2 / (2 k k'^2 K(k)^2)", 1e-6, flag},
        [q_of_k](const CheckSpec& s, const PrecisionContext& ctx) {
          const double k = singular_modulus(4.0, ctx);
          const Nome q = Nome::from_r(4.0);
          const double fd = differentiate(q_of_k, k, ctx).value;
          const double printed = dq_dk(k, q);
          return make_check(s, fd, printed, "lhs: central difference of q(k) = exp(-pi K'/K); rhs: printed form",
                            {evidence("finite difference", fd, printed), evidence("negated printed form", -printed, fd)});
        });
    add({"Eq20.magnitude.r=4", "|dq/dk| = q pi^2 / (2 k k'^2 K(k)^2)", 1e-6},
        [q_of_k](const CheckSpec& s, const PrecisionContext& ctx) {
          const double k = singular_modulus(4.0, ctx);
          return make_check(s, differentiate(q_of_k, k, ctx).value, -dq_dk(k, Nome::from_r(4.0)),
                            "lhs: central difference; rhs: printed form with sign reversed");
        });
    add({"Eq21.chain.r=4", "dR/dk = -5^{-1} 2^{1/3} (k k')^{-2/3} R (R^{-5}-11-R^5)^{1/6}", 1e-9},
        [](const CheckSpec& s, const PrecisionContext& ctx) {
          const double k = singular_modulus(4.0, ctx);
          const Nome q = Nome::from_r(4.0);
          return make_check(s, dR_dk(k, q), rrcf_derivative(q) * dq_dk(k, q),
                            "lhs: printed dR/dk; rhs: R'(q) times printed dq/dk (chain rule)");
        });
    add({"Eq21.sign.r=4", "dR/dk = -5^{-1} 2^{1/3} (k k')^{-2/3} R (R^{-5}-11-R^5)^{1/6}", 1e-6, flag},
        [q_of_k](const CheckSpec& s, const PrecisionContext& ctx) {
          const double k = singular_modulus(4.0, ctx);
          const double fd =
              differentiate([&](double kk) { return rrcf(Nome(q_of_k(kk))); }, k, ctx).value;
          const double printed = dR_dk(k, Nome::from_r(4.0));
          return make_check(s, fd, printed, "lhs: central difference of R(q(k)); rhs: printed form",
                            {evidence("finite difference", fd, printed), evidence("negated printed form", -printed, fd)});
        });
  }
  add({"Eq22.r=4", "(3 2^{1/3}/5) k^{1/3} 2F1[1/3,1/6;7/6;k^2] = int_0^{R(q)} dx / (x (x^{-5}-11-x^5)^{1/6})", 1e-7},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double k = singular_modulus(4.0, ctx);
        return make_check(s, detail::theorem3_hyp(k, ctx) / 5.0, rrcf_integral(rrcf(Nome::from_r(4.0)), ctx),
                          "lhs: Gauss 2F1; rhs: quadrature to R(e^{-2pi})");
      });
  for (double r : {1.0, 4.0}) {
    add({"T3.r=" + param_string(r),
         "pi int_{sqrt r}^inf eta(it/2)^4 dt = 3 (2k_r)^{1/3} 2F1[1/3,1/6;7/6;k_r^2] = 5 int_0^{R(q)} dx/(x (...)^{1/6})",
         1e-7, strict, Comparison::relative, true},
        [r](const CheckSpec& s, const PrecisionContext& ctx) {
          const double hyp = detail::theorem3_hyp(singular_modulus(r, ctx), ctx);
          const double eta = eta_tail_integral(std::sqrt(r), ctx);
          const double cf = 5.0 * rrcf_integral(rrcf(Nome::from_r(r)), ctx);
          return make_check(s, eta, hyp, "lhs: eta quadrature; rhs: Gauss 2F1; evidence: continued-fraction quadrature",
                            {evidence("5 x continued-fraction integral", cf, hyp),
                             evidence("continued fraction vs eta", cf, eta)});
        });
  }
  add({"App1.r=4", "int_2^inf eta(it/2)^4 dt = 5 pi^{-1} int_0^{R(e^{-2pi})} dx / (x (x^{-5}-11-x^5)^{1/6})", 1e-7},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        return make_check(s, eta_tail_integral(2.0, ctx) / kPi,
                          5.0 / kPi * rrcf_integral(detail::ramanujan_point(), ctx),
                          "lhs: eta quadrature; rhs: quadrature up to the radical value");
      });
  {
    auto fd_inverse = [](const PrecisionContext& ctx) {
      return 1.0 / differentiate([](double t) { return rrcf_of_tau(t); }, 2.0, ctx).value;
    };
    const double radical =
        std::sqrt((1.0 + 3.0 * std::sqrt(5.0) + 2.0 * std::sqrt(10.0 + 2.0 * std::sqrt(5.0))) / 10.0);
    add({"App2.derivative", "d/dx v^{-1}(x) = -5 pi^{-1} / (eta(i v^{-1}(x)/2)^4 x (x^{-5}-11-x^5)^{1/6})", 1e-6},
        [fd_inverse](const CheckSpec& s, const PrecisionContext& ctx) {
          return make_check(s, rrcf_tau_inverse_derivative(detail::ramanujan_point(), ctx), fd_inverse(ctx),
                            "at x = R(e^{-2pi}); rhs: reciprocal central difference of v(tau) at tau = 2");
        });
    add({"App2.radical", "sqrt((1 + 3 sqrt5 + 2 sqrt(10 + 2 sqrt5))/10)", 1e-10},
        [radical](const CheckSpec& s, const PrecisionContext&) {
          const double x = detail::ramanujan_point();
          return make_check(s, radical, 1.0 / (x * std::pow(u_from_rrcf(x), 1.0 / 6.0)),
                            "rhs: 1 / (x (x^{-5}-11-x^5)^{1/6}) at the radical value of R(e^{-2pi})");
        });
    add({"App2.printed", "d/dx v^{-1} = -5 pi^{-1} eta(2i)^{-4} sqrt((1 + 3 sqrt5 + 2 sqrt(10 + 2 sqrt5))/10)", 1e-6,
         flag},
        [fd_inverse, radical](const CheckSpec& s, const PrecisionContext& ctx) {
          const double fd = fd_inverse(ctx);
          const double printed = -5.0 / kPi * std::pow(dedekind_eta(2.0), -4) * radical;
          const double with_eta_i = -5.0 / kPi * std::pow(dedekind_eta(1.0), -4) * radical;
          return make_check(s, printed, fd, "rhs: reciprocal central difference of v(tau) at tau = 2",
                            {evidence("printed form with eta(2i)", printed, fd),
                             evidence("same form with eta(i) = eta(i v^{-1}/2)", with_eta_i, fd)});
        });
  }

  // --- inverse functions -------------------------------------------------------
  add({"T4.r=4", "R(q) = F((3/5) (2k_r)^{1/3} 2F1[1/3,1/6;7/6;k_r^2])", 1e-5},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double arg = detail::theorem3_hyp(singular_modulus(4.0, ctx), ctx) / 5.0;
        return make_check(s, F_of_x(arg, ctx), detail::ramanujan_point(),
                          "lhs: F by root finding on the quadrature; rhs: radical value of R(e^{-2pi})");
      });
  add({"Eq26.roundtrip.x=0.3", "x = int_0^{F(x)} dt / (t (t^{-5}-11-t^5)^{1/6})", 1e-9, strict, absolute},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        return make_check(s, rrcf_integral(F_of_x(0.3, ctx), ctx), 0.3, "forward quadrature at the returned root");
      });
  add({"Eq26.F1.x=0.3", "x = (6/5) h^{-1/6} F1[1/6,1/2,1/2,7/6; -(11-2i)/h, -(11+2i)/h], h = F^{-5}-11-F^5", 1e-7,
       strict, Comparison::relative, true},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double h = u_from_rrcf(F_of_x(0.3, ctx));
        const ComplexValue f1 = appell_f1(1.0 / 6.0, 0.5, 0.5, 7.0 / 6.0, ComplexValue(-11.0, 2.0) / h,
                                          ComplexValue(-11.0, -2.0) / h, ctx);
        const ComplexValue rhs = 1.2 * std::pow(h, -1.0 / 6.0) * f1;
        return make_check(s, 0.3, rhs, "rhs: Appell F1 at complex conjugate arguments",
                          {evidence("(1/5) int_h^inf t^{-1/6} (125+22t+t^2)^{-1/2} dt", 0.2 * sextic_tail_integral(h, ctx), rhs)});
      });
  add({"Eq27.roundtrip.x=0.2", "x = pi int_{sqrt m(x)}^inf eta(it/2)^4 dt", 1e-9, strict, absolute},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        return make_check(s, eta_tail_integral(std::sqrt(m_of_x(0.2, ctx)), ctx), 0.2,
                          "forward quadrature at the returned root");
      });
  add({"Eq30.printed.x=0.2", "F(x) = R(e^{-pi sqrt m(x)})", 1e-5, flag},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double x = 0.2;
        const double rhs = rrcf(Nome::from_r(m_of_x(x, ctx)));
        return make_check(s, F_of_x(x, ctx), rhs, "lhs: F by inversion; rhs: R at the nome of m(x)",
                          {evidence("F(x/5)", F_of_x(x / 5.0, ctx), rhs)});
      });
  add({"Eq31.rescaled.x=0.2", "F(x/5) = R(e^{-pi sqrt m(x)})", 1e-5},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double x = 0.2;
        return make_check(s, F_of_x(x / 5.0, ctx), rrcf(Nome::from_r(m_of_x(x, ctx))),
                          "m integrates pi eta(it/2)^4, which is 5 times the continued-fraction integral");
      });
  add({"Eq32.r=4", "m(3 (2k_r)^{1/3} 2F1[1/3,1/6;7/6;k_r^2]) = r", 1e-6},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        return make_check(s, m_of_x(detail::theorem3_hyp(singular_modulus(4.0, ctx), ctx), ctx), 4.0,
                          "m by root finding on the eta quadrature");
      });
  add({"G.x=0.15", "G(x) = F(x)^{-5} - 11 - F(x)^5", 1e-7},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        return make_check(s, G_of_x(0.15, ctx), u_from_rrcf(F_of_x(0.15, ctx)),
                          "lhs: sextic-tail inversion; rhs: continued-fraction inversion");
      });

  // --- sextic -------------------------------------------------------------------
  auto sextic_check = [](const SexticInstance& inst) {
    return [inst](const CheckSpec& s, const PrecisionContext& ctx) {
      const SexticSolution sol = solve_sextic(inst, ctx);
      return make_check(s, sol.X, sol.X_alt,
                        "lhs: G at the hypergeometric argument; rhs: u at the nome of r = (K'/K)^2/4; j = " +
                            param_string(inst.j()) + ", t = " + param_string(sol.t),
                        {{"relative residual of a X^2 + b X + b^2/(20a) - C1 X^{5/3}", sol.residual_rel,
                          sol.residual_rel}});
    };
  };
  const double k4 = 3.0 - 2.0 * std::sqrt(2.0);
  const SexticInstance prop1{1.0, 250.0, std::cbrt(klein_j_k4r_form(k4 * k4))};
  add({"T5.prop1", "a X^2 + b X + b^2/(20a) = C1 X^{5/3}, X = (b/250a) G(...), j_r = 250 C1^3 a^{-2} b^{-1}", 1e-6,
       strict, Comparison::relative, true},
      sextic_check(prop1));
  add({"T5.j=4000", "a X^2 + b X + b^2/(20a) = C1 X^{5/3}, X = (b/250a) G(...), j_r = 250 C1^3 a^{-2} b^{-1}", 1e-6,
       strict, Comparison::relative, true},
      sextic_check(SexticInstance::with_j(1.0, 3.0, 4000.0)));
  add({"T5.j=1728+eps", "a X^2 + b X + b^2/(20a) = C1 X^{5/3}, X = (b/250a) G(...), j_r = 250 C1^3 a^{-2} b^{-1}", 1e-6,
       strict, Comparison::relative, true},
      sextic_check(SexticInstance::with_j(1.0, 3.0, 1728.0 * (1.0 + 1e-6))));
  add({"T5.printed_argument", "X = (b/250a) G(3 2^{1/3} t^{1/6} 2F1[1/3,1/6;7/6;t])", 1e-6, flag},
      [prop1](const CheckSpec& s, const PrecisionContext& ctx) {
        const SexticSolution sol = solve_sextic(prop1, ctx);
        const double needed = 0.2 * sextic_tail_integral(sol.X * 250.0 * prop1.a / prop1.b, ctx);
        const double printed = 5.0 * sol.argument;
        return make_check(s, printed, needed,
                          "rhs: the G argument that returns the solution; G is defined only below " +
                              param_string(rrcf_integral_limit()),
                          {evidence("printed argument", printed, needed),
                           evidence("argument with the factor 3/5", sol.argument, needed)});
      });
  add({"Prop1.Eq45.r1=1", "X_{r1} = R(e^{-2pi sqrt r1})^{-5} - 11 - R(e^{-2pi sqrt r1})^5", 1e-5},
      [prop1](const CheckSpec& s, const PrecisionContext& ctx) {
        return make_check(s, solve_sextic(prop1, ctx).X, u_of_q(Nome::from_r_doubled(1.0)),
                          "a = 1, b = 250, C1^3 from b_r = k_4^2; lhs: sextic solver; rhs: eta quotient");
      });
  add({"Prop1.Eq42.r1=1", "B(b_r,1/6,2/3) = 4^{1/3} int_{X_r}^inf dx / (x^{1/6} sqrt(125+22x+x^2))", 1e-7},
      [prop1, k4](const CheckSpec& s, const PrecisionContext& ctx) {
        const double x = solve_sextic(prop1, ctx).X;
        return make_check(s, incomplete_beta(k4 * k4, {1.0 / 6.0, 2.0 / 3.0}, ctx),
                          std::cbrt(4.0) * sextic_tail_integral(x, ctx), "lhs: incomplete Beta; rhs: tail quadrature");
      });
  add({"Prop1.beta_star.r1=1", "sqrt(B(1-x,1/6,2/3)/B(x,1/6,2/3)) = sqrt r, r1 = k^{-1}(beta^{1/2})/4", 1e-8, strict,
       Comparison::relative, true},
      [k4](const CheckSpec& s, const PrecisionContext& ctx) {
        const BetaBase base{1.0 / 6.0, 2.0 / 3.0};
        const double b = k4 * k4;
        const double r = incomplete_beta(1.0 - b, base, ctx) / incomplete_beta(b, base, ctx);
        const double beta = beta_ratio_root(base, r, ctx);
        return make_check(s, 0.25 * modular_parameter(std::sqrt(beta)), 1.0,
                          "beta* solved at r = B-ratio of k_4^2; lhs: r1 recovered from beta*",
                          {evidence("beta* against k_4^2", beta, b)});
      });
  add({"Eq46.X=50", "int_X^inf dx / (x^{1/6} sqrt(125+22x+x^2)) = 4^{-1/3} B(theta(X),1/6,2/3)", 1e-8},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double b = theta_of_X(50.0, ctx);
        return make_check(s, std::pow(4.0, -1.0 / 3.0) * incomplete_beta(b, {1.0 / 6.0, 2.0 / 3.0}, ctx),
                          sextic_tail_integral(50.0, ctx), "forward evaluation at the returned root");
      });
  add({"Eq46.X1", "theta(X_{r1}) = k_{4 r1}^2 at r1 = 1", 1e-7},
      [k4](const CheckSpec& s, const PrecisionContext& ctx) {
        return make_check(s, theta_of_X(u_of_q(Nome::from_r_doubled(1.0)), ctx), k4 * k4,
                          "X_1 = u(e^{-2pi}) from the eta quotient");
      });

  // --- change of base -------------------------------------------------------------
  auto base_change = [](std::function<double(double)> base, double r, std::function<double(const PrecisionContext&)> expected,
                        std::string note) {
    return [base, r, expected, note](const CheckSpec& s, const PrecisionContext& ctx) {
      const BaseChange bc = theorem6_base_change(base, r, ctx);
      const double want = expected(ctx);
      const double r0_back = modular_parameter(std::sqrt(bc.alpha));
      return make_check(s, bc.alpha, want, note + "; r0 = " + param_string(bc.r0) + ", j0 = " + param_string(bc.j0),
                        {evidence("alpha re-solved from j0 by the lambda form", bc.alpha_resolved, bc.alpha),
                         evidence("r0 against K'/K squared at sqrt(alpha)", bc.r0, r0_back)});
    };
  };
  add({"T6.K.r=2", "F(1-x)/F(x) = sqrt r, r0 = K(sqrt(1-alpha))^2 / K(sqrt alpha)^2, 256(x+(1-x)^2)^3/(x^2(1-x)^2) = j",
       1e-8, strict, Comparison::relative, true},
      base_change([](double x) { return elliptic_k(std::sqrt(x)); }, 2.0,
                  [](const PrecisionContext& ctx) { return std::pow(singular_modulus(2.0, ctx), 2); },
                  "base K(sqrt x); expected alpha = k_2^2"));
  add({"T6.psistar.r=3", "F(1-x)/F(x) = sqrt r, r0 = K(sqrt(1-alpha))^2 / K(sqrt alpha)^2, 256(x+(1-x)^2)^3/(x^2(1-x)^2) = j",
       1e-8, strict, Comparison::relative, true},
      base_change([](double x) { return psi_star(x); }, 3.0,
                  [](const PrecisionContext&) { return trig_modular(3.0); },
                  "base sqrt(arcsin sqrt x); expected alpha = m(R) at R = r (m at R = sqrt r = " +
                      param_string(trig_modular(std::sqrt(3.0))) + " does not match)"));
  add({"T6.beta16.r=4", "F(1-x)/F(x) = sqrt r, r0 = K(sqrt(1-alpha))^2 / K(sqrt alpha)^2, 256(x+(1-x)^2)^3/(x^2(1-x)^2) = j",
       1e-8, strict, Comparison::relative, true},
      base_change([](double x) { return std::sqrt(incomplete_beta(x, {1.0 / 6.0, 1.0 / 6.0})); }, 4.0,
                  [](const PrecisionContext& ctx) { return beta_ratio_root({1.0 / 6.0, 1.0 / 6.0}, 4.0, ctx); },
                  "base sqrt(B(x,1/6,1/6)); a square-root base at ratio sqrt r is the B-ratio r"));

  // --- derivative of X(r) ----------------------------------------------------------
  for (double r : {1.0, 2.0}) {
    const std::string tag = ".r=" + param_string(r);
    add({"T7.sign" + tag, "X'(r) = -pi eta(i sqrt r)^4 / sqrt r X(r)^{1/6} sqrt(125+22X+X^2)", 1e-5, flag},
        [r](const CheckSpec& s, const PrecisionContext& ctx) {
          CheckResult c = theorem7_derivative_check(r, ctx);
          return make_check(s, c.lhs, c.rhs,
                            "lhs: central difference of X(r); X increases with r, so the printed minus sign fails",
                            c.evidence);
        });
    add({"T7.magnitude" + tag, "|X'(r)| = pi eta(i sqrt r)^4 / sqrt r X(r)^{1/6} sqrt(125+22X+X^2)", 1e-5},
        [r](const CheckSpec& s, const PrecisionContext& ctx) {
          const DerivativeIdentity d = derivative_identity(r, ctx);
          return make_check(s, d.fd.value, -d.printed_rhs, "lhs: central difference; rhs: printed form with sign reversed");
        });
  }
  add({"T7.m_sign.r=2", "m(r) = -2^{5/3} B(k_r^2, 1/6, 2/3)", 1e-7, flag},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const DerivativeIdentity d = derivative_identity(2.0, ctx);
        return make_check(s, d.printed_m, d.eta_tail,
                          "rhs: pi int_{sqrt r}^inf eta(it/2)^4 dt by quadrature",
                          {evidence("printed -2^{5/3} B(k_r^2,1/6,2/3) via incomplete Beta", d.printed_m, d.eta_tail),
                           evidence("2^{-2/3} B(k_r^2,1/6,2/3) via incomplete Beta", d.beta_form, d.eta_tail)});
      });
  add({"T7.normalization.r=2", "pi int_{sqrt r}^inf eta(it/2)^4 dt = 2^{-2/3} B(k_r^2, 1/6, 2/3)", 1e-7},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const DerivativeIdentity d = derivative_identity(2.0, ctx);
        return make_check(s, d.eta_tail, d.beta_form, "lhs: eta quadrature; rhs: incomplete Beta at k_2^2");
      });
  add({"T7.dB.r=2", "d/dr B(k_r^2,1/6,2/3) = pi 4^{1/3} eta(i sqrt r/2)^4 / (2 sqrt r)", 1e-6, flag},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const DerivativeIdentity d = derivative_identity(2.0, ctx);
        return make_check(s, d.beta_fd.value, d.printed_beta_derivative, "lhs: central difference in r",
                          {evidence("negated printed form", -d.printed_beta_derivative, d.beta_fd.value)});
      });
  add({"T7.tail.r=2", "(1/5) int_{X(r/4)}^inf dt / (t^{1/6} sqrt(125+22t+t^2)) = B(k_r^2,1/6,2/3) / (5 4^{1/3})", 1e-7},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const DerivativeIdentity d = derivative_identity(2.0, ctx);
        return make_check(s, d.sextic_tail, d.sextic_tail_rhs, "lhs: tail quadrature; rhs: incomplete Beta");
      });

  // --- j integrals ------------------------------------------------------------------
  for (double x : {0.5, 1.0}) {
    add({"Eq50.x=" + param_string(x), "int_0^x j(Y^{-1}(w))^{-1/3} dw = (3x^{8/3}/25000) F1[8/3,1,1,11/3;...]", 1e-5,
         strict, Comparison::relative, true},
        [x](const CheckSpec& s, const PrecisionContext& ctx) {
          CheckResult c = j_integral_identity(x, ctx);
          return make_check(s, c.lhs, c.rhs,
                            "lhs: quadrature of j^{-1/3} through u-inversion and klein_j; the printed exponent +1/3 "
                            "diverges at w = 0",
                            c.evidence);
        });
  }
  add({"Eq50.derivative.x=0.5", "d/dx (3x^{8/3}/25000) F1[...] at x = Y(q) equals j_r^{-1/3}", 1e-6},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const JIntegralIdentity v = j_integral_values(0.5, ctx);
        return make_check(s, v.f1_derivative.value, std::pow(v.j_at_x, -1.0 / 3.0),
                          "lhs: central difference of the F1 form; rhs: klein_j at the inverted r");
      });
  add({"Eq50.printed.x=0.5", "int_0^x j(Y^{-1}(w))^{1/3} dw = (3x^{8/3}/25000) F1[...]", 1e-6, flag},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const JIntegralIdentity v = j_integral_values(0.5, ctx);
        const double deriv = v.f1_derivative.value;
        return make_check(s, deriv, std::cbrt(v.j_at_x),
                          "integrands compared: d/dx of the F1 form against j^{+1/3}",
                          {evidence("j^{+1/3}", std::cbrt(v.j_at_x), deriv),
                           evidence("j^{-1/3}", std::pow(v.j_at_x, -1.0 / 3.0), deriv)});
      });
  add({"Eq51.x2.x=0.5", "(3x^{8/3}/(25000(x-1))) [-phi((5+2sqrt5)x/125) + x phi((5+2sqrt5)x^2/125)]", 1e-8, flag},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const JIntegralIdentity v = j_integral_values(0.5, ctx);
        return make_check(s, v.phi_printed_x2, v.f1_form, "rhs: Appell F1 form",
                          {evidence("printed x^2 argument", v.phi_printed_x2, v.f1_form),
                           evidence("quadrature of j^{-1/3}", v.quadrature_minus, v.f1_form),
                           evidence("x in place of x^2", v.phi_printed_x, v.f1_form)});
      });
  add({"Eq51.x.x=0.5", "(3x^{8/3}/(25000(x-1))) [-phi((5+2sqrt5)x/125) + x phi((5+2sqrt5)x/125)]", 1e-8, flag},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const JIntegralIdentity v = j_integral_values(0.5, ctx);
        return make_check(s, v.phi_printed_x, v.f1_form, "rhs: Appell F1 form",
                          {evidence("x in place of x^2", v.phi_printed_x, v.f1_form),
                           evidence("quadrature of j^{-1/3}", v.quadrature_minus, v.f1_form)});
      });
  add({"Eq51.partial_fractions.x=0.5", "F1[a,1,1,c;X,Y] = (X phi(X) - Y phi(Y)) / (X - Y), phi = 2F1[1,8/3;11/3;.]",
       1e-10},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        return make_check(s, j_integral_partial_fractions(0.5, ctx), j_integral_f1_form(0.5, ctx),
                          "X = -x/(25(5-2sqrt5)) = -(5+2sqrt5)x/125, Y = -x/(25(5+2sqrt5))");
      });
  add({"Eq51.special.x=1", "int_0^1 j(Y^{-1}(w))^{1/3} dw = (100/719)(60+sqrt5) - 5 2F1[1,8/3;11/3;(5+2sqrt5)/125]",
       1e-8, flag},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const JIntegralIdentity v = j_integral_values(1.0, ctx);
        const double printed = j_integral_special_value_printed(ctx);
        return make_check(s, printed, v.f1_form, "rhs: Appell F1 form at x = 1",
                          {evidence("quadrature of j^{-1/3} via inversion", v.quadrature_minus, printed),
                           evidence("quadrature of w^{5/3}/(w^2+250w+3125)", v.quadrature_rational, printed)});
      });

  // --- quadratic-power series ----------------------------------------------------------
  add({"Eq8.dual", "F1[a,b1,b2,c;x,y] = sum (a)_{m+n} (b1)_m (b2)_n / ((c)_{m+n} m! n!) x^m y^n", 1e-9},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        return make_check(s, appell_f1_series(0.5, 1.0 / 3.0, 0.25, 1.5, 0.3, -0.4, ctx),
                          appell_f1_integral(0.5, 1.0 / 3.0, 0.25, 1.5, 0.3, -0.4, ctx),
                          "lhs: double series; rhs: Euler-type integral");
      });
  add({"Eq9.F1", "int x^m (ax^2+bx+c)^n dx = c^n x^{m+1}/(m+1) F1[m+1,-n,-n,m+2;x/rho1,x/rho2]", 1e-7},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double m = 1.0, n = 0.5, x = 0.5;
        const Quadratic quad{1.0, 3.0, 2.0};
        const auto [r1, r2] = quadratic_roots(quad);
        const double lhs = integrate_finite(
            [&](double t) { return std::pow(t, m) * std::pow(t * t + 3.0 * t + 2.0, n); }, 0.0, x, false, false, ctx);
        const ComplexValue rhs = std::pow(quad.c, n) * std::pow(x, m + 1.0) / (m + 1.0) *
                                 appell_f1(m + 1.0, -n, -n, m + 2.0, x / r1, x / r2, ctx);
        return make_check(s, lhs, rhs, "a=1, b=3, c=2 with roots (-b -+ sqrt(b^2-4ac))/(2a)");
      });
  add({"Eq9.printed_roots", "rho_{1,2} = (b +- sqrt(b^2-4ac)) / (2a)", 1e-12, flag, absolute},
      [](const CheckSpec& s, const PrecisionContext&) {
        const double a = 1.0, b = 3.0, c = 2.0;
        const double printed = (b + std::sqrt(b * b - 4 * a * c)) / (2 * a);
        const auto [r1, r2] = quadratic_roots({a, b, c});
        auto value = [&](ComplexValue r) { return a * r * r + b * r + c; };
        return make_check(s, value(printed), 0.0, "quadratic evaluated at the printed root for a=1, b=3, c=2",
                          {{"printed root", value(printed), std::abs(value(printed))},
                           {"root (-b - sqrt)/(2a)", value(r1), std::abs(value(r1))},
                           {"root (-b + sqrt)/(2a)", value(r2), std::abs(value(r2))}});
      });
  {
    const double target = std::log(1.0 + 2.0 / std::sqrt(3.0));
    auto ex1_sums = [] { return quadratic_power_partial_sums({1.0, 1.0, 1.0}, 0.0, 0.5, 1.0, 200); };
    add({"Ex1.wynn", "log(1 + 2/sqrt3) = sum_n [sum_l C(n,l) (1/2)_l/(1/2-n)_l ((1-i sqrt3)/2)^l] (1/2)_n/(n+1)! (2i/(sqrt3-i))^n",
         1e-8},
        [ex1_sums, target](const CheckSpec& s, const PrecisionContext&) {
          const auto sums = ex1_sums();
          const std::span<const ComplexValue> head(sums.data(), 40);
          const ComplexValue acc = wynn_epsilon<ComplexValue>(head);
          return make_check(s, acc, target,
                            "Wynn epsilon applied to the first 40 partial sums; |x/rho1| = 1 so the raw sums converge slowly",
                            {evidence("raw partial sum S_199", sums.back(), target)});
        });
    add({"Ex1.raw", "log(1 + 2/sqrt3) = sum_n [...] (1/2)_n/(n+1)! (2i/(sqrt3-i))^n", 1e-8, flag},
        [ex1_sums, target](const CheckSpec& s, const PrecisionContext&) {
          const auto sums = ex1_sums();
          return make_check(s, sums.back(), target, "raw partial sum after 200 terms",
                            {evidence("raw partial sum S_99", sums[99], target),
                             evidence("raw partial sum S_199", sums.back(), target)});
        });
    add({"Ex1.literal", "sum_n [sum_l C(n,l) (1/2)_l/(1/2-n)_l ((1-i sqrt3)/2)^l] (1/2)_n/(n+1)! (2i/(sqrt3-i))^n", 1e-10},
        [ex1_sums](const CheckSpec& s, const PrecisionContext&) {
          const ComplexValue ratio(0.5, -0.5 * std::sqrt(3.0));
          const ComplexValue z = ComplexValue(0.0, 2.0) / ComplexValue(std::sqrt(3.0), -1.0);
          const auto literal = double_sum_partials(0.5, 0.5, ratio, z, 0.0, 1.0, 200);
          return make_check(s, literal.back(), ex1_sums().back(),
                            "lhs: printed constants summed term by term; rhs: expansion built from the roots of t^2+t+1");
        });
  }
  {
    const double p = 0.6;
    auto hyp = [p](const PrecisionContext& ctx) { return 2.0 * gauss_2f1(0.5, 0.25, 1.25, p * p, ctx); };
    add({"Ex2.hyp.p=0.6", "(1/p) int_0^{p^2} dt / sqrt(t(1-t/p)(1+t/p)) = 2 2F1[1/2,1/4;5/4;p^2]", 1e-7},
        [p, hyp](const CheckSpec& s, const PrecisionContext& ctx) {
          const double quad = integrate_finite(
              [p](double t) { return 1.0 / std::sqrt(t * (1.0 - t / p) * (1.0 + t / p)); }, 0.0, p * p, true, false, ctx);
          return make_check(s, quad / p, hyp(ctx), "lhs: quadrature; rhs: Gauss 2F1");
        });
    add({"Ex2.beta.p=0.6", "2 2F1[1/2,1/4;5/4;p^2] = (sqrt p / 2) B(p^2, 1/4, 1/2)", 1e-7, flag},
        [p, hyp](const CheckSpec& s, const PrecisionContext& ctx) {
          const double beta = std::sqrt(p) / 2.0 * incomplete_beta(p * p, {0.25, 0.5}, ctx);
          const double h = hyp(ctx);
          return make_check(s, beta, h, "the Beta form equals p times the hypergeometric form",
                            {evidence("Beta form divided by p", beta / p, h)});
        });
    add({"Ex2.series.printed.p=0.6", "sum_n (sum_l (-1)^l C(n,l) (1/2)_l/(1/2-n)_l) (1/2)_n / (p^n (n+1/2) n!)", 1e-7, flag},
        [p, hyp](const CheckSpec& s, const PrecisionContext& ctx) {
          const auto sums = double_sum_partials(0.5, 0.5, -1.0, 1.0 / p, -0.5, 1.0, 60);
          const double h = hyp(ctx);
          return make_check(s, sums.back(), h, "printed series after 60 terms; the ratio 1/p > 1 makes it diverge",
                            {evidence("printed series after 30 terms", sums[29], h),
                             evidence("printed series after 60 terms", sums.back(), h)});
        });
    add({"Ex2.series.p=0.6", "int_0^x t^mu (at^2+bt+c)^{-nu} dt = c^{-nu} x^{mu+1} sum_n [...] (nu)_n/n! (x/rho1)^n/(n+mu+1)", 1e-10},
        [p, hyp](const CheckSpec& s, const PrecisionContext& ctx) {
          const auto sums = quadratic_power_partial_sums({-1.0 / (p * p), 0.0, 1.0}, -0.5, 0.5, p * p, 120);
          const double h = hyp(ctx);
          const auto literal = double_sum_partials(0.5, 0.5, 1.0, p, -0.5, 1.0, 120);
          return make_check(s, sums.back() / p, h,
                            "roots +-p give -rho1/rho2 = +1 and x/rho1 = p; 120 terms",
                            {evidence("printed constants with (+1)^l and p^n", literal.back(), h)});
        });
  }

  // --- Beta singular values -----------------------------------------------------------
  for (const char* idx : {"2", "3", "3/2", "4", "5"}) {
    const std::string which = idx;
    add({"Ex3.beta_" + which, "B(1-beta_r,1/6,1/6)/B(beta_r,1/6,1/6) = r, radical values of beta_r",
         which == "2" ? 1e-10 : 1e-8},
        [which](const CheckSpec& s, const PrecisionContext& ctx) {
          return make_check(s, beta_ratio_root({1.0 / 6.0, 1.0 / 6.0}, detail::parse_ratio(which), ctx),
                            detail::beta16_radical(which), "lhs: logit-space root of the Beta ratio; rhs: radical");
        });
  }
  for (auto [n, r] : {std::pair{2, 1.0}, std::pair{2, 2.0}}) {
    add({"Eq57.probe.n=" + std::to_string(n) + ".r=" + param_string(r),
         "B(beta_{n^2 r},1/6,1/6) / B(beta_r,1/6,1/6) = rational", 1e-8, flag},
        [n, r](const CheckSpec& s, const PrecisionContext& ctx) {
          const BetaBase base{1.0 / 6.0, 1.0 / 6.0};
          const double lhs = incomplete_beta(beta_ratio_root(base, n * n * r, ctx), base, ctx) /
                             incomplete_beta(beta_ratio_root(base, r, ctx), base, ctx);
          return make_check(s, lhs, (r + 1.0) / (n * n * r + 1.0),
                            "report only; rhs: (r+1)/(n^2 r+1) from the complete-Beta split");
        });
  }
  for (auto [alpha, alabel] : {std::pair{1.0 / 6.0, "1/6"}, std::pair{0.25, "1/4"}}) {
    for (double r : {2.0, 5.0}) {
      add({std::string("Eq59.a=") + alabel + ".r=" + param_string(r),
           "B_a(beta_r) = sqrt(Gamma(a)^2 / (Gamma(2a) (r+1))), B_a(1-beta_r)/B_a(beta_r) = sqrt r", 1e-9, strict,
           Comparison::relative, true},
          [alpha, r](const CheckSpec& s, const PrecisionContext& ctx) {
            const BetaBase base{alpha, alpha};
            const double beta = beta_ratio_root(base, r, ctx);
            const double lhs = std::sqrt(incomplete_beta(beta, base, ctx));
            const double ratio = std::sqrt(incomplete_beta(1.0 - beta, base, ctx)) / lhs;
            return make_check(s, lhs, std::sqrt(gamma(alpha) * gamma(alpha) / (gamma(2.0 * alpha) * (r + 1.0))),
                              "beta_r from the Beta-ratio root",
                              {evidence("ratio B_a(1-beta)/B_a(beta)", ratio, std::sqrt(r))});
          });
    }
  }
  add({"Eq60", "Gamma(1/6)^2 / (6 Gamma(1/3)) = sum_n (sum_l (-1)^l C(n,l) (5/12)_l/(7/12-n)_l) (5/12)_n beta_5^{n+1/6}/(n!(n+1/6))",
       1e-9, strict, Comparison::relative, true},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double beta5 = beta_ratio_root({1.0 / 6.0, 1.0 / 6.0}, 5.0, ctx);
        const double lhs = gamma(1.0 / 6.0) * gamma(1.0 / 6.0) / (6.0 * gamma(1.0 / 3.0));
        return make_check(s, lhs, beta_singular_series(1.0 / 6.0, beta5, 40), "rhs: 40 terms at the root beta_5",
                          {evidence("B(beta_5,1/6,1/6)", incomplete_beta(beta5, {1.0 / 6.0, 1.0 / 6.0}, ctx), lhs)});
      });
  for (auto [alpha, r, alabel] : {std::tuple{1.0 / 6.0, 5.0, "1/6"}, std::tuple{0.25, 3.0, "1/4"}}) {
    add({std::string("T9.a=") + alabel + ".r=" + param_string(r),
         "Gamma(a)^2/((r+1) Gamma(2a)) = sum_n (sum_l (-1)^l C(n,l) ((1-a)/2)_l/((1+a)/2-n)_l) ((1-a)/2)_n beta_r^{n+a}/(n!(n+a))",
         1e-8, strict, Comparison::relative, true},
        [alpha, r](const CheckSpec& s, const PrecisionContext& ctx) {
          const double beta = beta_ratio_root({alpha, alpha}, r, ctx);
          const double lhs = gamma(alpha) * gamma(alpha) / ((r + 1.0) * gamma(2.0 * alpha));
          const double lib = quadratic_power_partial_sums({1.0, -2.0, 1.0}, alpha - 1.0, 0.5 * (1.0 - alpha), beta, 60)
                                 .back()
                                 .real();
          return make_check(s, lhs, beta_singular_series(alpha, beta, 60), "rhs: 60 terms of the printed double sum",
                            {evidence("expansion of t^{a-1}(t^2-2t+1)^{(a-1)/2} from its roots", lib, lhs)});
        });
  }

  // --- trigonometric base -----------------------------------------------------------------
  for (double r : {1.0, 2.0, 3.0}) {
    for (std::size_t part = 0; part < 3; ++part) {
      static const char* kIds[] = {"Ex4.unit_circle.", "Ex4.t_claim.", "Ex4.xi_chain."};
      static const char* kRefs[] = {"2i + y^{-1} - y + y^{-r} - y^r = 0, y = is + sqrt(1-s^2)",
                                    "t = sin(pi/(4+2r)) solves psi(1-2t^2)/psi(t) = sqrt r",
                                    "xi = (-i - sqrt 3)/2, x = -i(1 - x_r^2)/(2x_r), t = arcsin(x)"};
      const bool flagged = part == 1 || part == 2;
      add({kIds[part] + std::string("r=") + param_string(r), kRefs[part], part == 2 ? 1e-10 : 1e-12,
           flagged ? flag : strict, part == 0 ? absolute : Comparison::relative},
          [r, part](const CheckSpec& s, const PrecisionContext& ctx) {
            const CheckResult c = example4_checks(r, ctx)[part];
            return make_check(s, c.lhs, c.rhs, c.notes, c.evidence);
          });
    }
  }
  add({"Ex5.root.R=3", "psi*(1-x)/psi*(x) = sqrt R at x = m(R), psi*(x) = sqrt(arcsin(x^{1/2}))", 1e-12, strict, absolute},
      [](const CheckSpec& s, const PrecisionContext&) {
        const double m = trig_modular(3.0);
        return make_check(s, psi_star(1.0 - m) / psi_star(m), std::sqrt(3.0), "m(3) = sin(pi/8)^2");
      });
  for (double big_r : {1.0, 2.0, 3.5}) {
    add({"Ex5.duplication.R=" + param_string(big_r), "m(R+1) = (1 - sqrt(1 - m(R/2)))/2", 1e-12, strict, absolute},
        [big_r](const CheckSpec& s, const PrecisionContext& ctx) {
          const CheckResult c = trig_modular_equation_check(big_r, ctx);
          return make_check(s, c.lhs, c.rhs, c.notes, c.evidence);
        });
  }
  add({"Eq65.forms.R=2", "m(R) = -(1/4) e^{-i pi/(1+R)} (-1 + e^{i pi/(1+R)})^2 = sin(pi/(2(R+1)))^2", 1e-12, strict, absolute},
      [](const CheckSpec& s, const PrecisionContext&) {
        return make_check(s, trig_modular_exponential(2.0), trig_modular(2.0), "exponential against sine form");
      });
  for (auto [big_r, n] : {std::pair{1.0, 60}, std::pair{3.0, 40}}) {
    add({"Ex6.series.R=" + param_string(big_r), "pi/(R+1) = sum (1/4)_n (3/4)_{-n} / ((1/2)_{-n} n!) m(R)^{n+1/2}/(n+1/2)",
         1e-10, strict, absolute},
        [big_r, n](const CheckSpec& s, const PrecisionContext& ctx) {
          CheckResult c = pi_formula_check(big_r, n, ctx);
          CheckSpec tight = s;
          tight.tolerance = std::max(std::min(s.tolerance, c.tolerance), 1e-14);
          return make_check(tight, c.lhs, c.rhs, c.notes + "; tail bound " + param_string(pi_formula(big_r, n).series.tail_bound),
                            c.evidence);
        });
    add({"Ex6.closed.R=" + param_string(big_r), "sum (...) m(R)^{n+1/2}/(n+1/2) = 2 arcsin(sqrt m(R))", 1e-10, strict, absolute},
        [big_r](const CheckSpec& s, const PrecisionContext&) {
          const PiFormula p = pi_formula(big_r, 1);
          return make_check(s, p.closed, p.target, "2 arcsin(sqrt m(R)) against pi/(R+1)");
        });
  }
  add({"Ex6.coefficients", "(1/4)_n (3/4)_{-n} / ((1/2)_{-n} n!) with (a)_{-n} = 1/(a-n)_n", 1e-12, strict, absolute},
      [](const CheckSpec& s, const PrecisionContext&) {
        double worst = 0.0;
        for (int n = 0; n < 40; ++n) {
          const double taylor = pochhammer(0.5, n) / gamma(n + 1.0);  // 2 arcsin sqrt x = sum (1/2)_n/n! x^{n+1/2}/(n+1/2)
          worst = std::max(worst, std::abs(arcsin_series_coefficient(n) - taylor));
        }
        return make_check(s, worst, 0.0, "largest deviation from the Taylor coefficients of 2 arcsin(sqrt x), n < 40");
      });
  add({"Eq69.R=1", "B(m(R),1/2,1/2) = pi/(R+1) = sum (sum_l (-1)^l C(n,l) (1/4)_l/(3/4-n)_l) (1/4)_n m^{n+1/2}/(n!(n+1/2))",
       1e-10, strict, Comparison::relative, true},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const double m = trig_modular(1.0);
        return make_check(s, beta_singular_series(0.5, m, 90), kPi / 2.0, "90 terms at m(1) = 1/2",
                          {evidence("incomplete Beta B(1/2,1/2,1/2)", incomplete_beta(m, {0.5, 0.5}, ctx), kPi / 2.0)});
      });
  add({"Note.p6", "p_6(y) = 6x^5 y - 20x^3 y^3 + 6x y^5, x = sqrt(1-y^2), equals sin(6 arcsin y)", 1e-12, strict, absolute},
      [](const CheckSpec& s, const PrecisionContext&) {
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
          const double y = -0.95 + 0.21 * i;
          worst = std::max(worst, std::abs(sin_multiple_p6(y) - std::sin(6.0 * std::asin(y))));
        }
        return make_check(s, worst, 0.0, "largest deviation over 10 points in [-0.95, 0.94]");
      });

  // --- singular moduli and j ------------------------------------------------------------
  add({"Kmod.k4", "singular modulus k_4 = 3 - 2 sqrt 2", 1e-12},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        return make_check(s, singular_modulus(4.0, ctx), 3.0 - 2.0 * std::sqrt(2.0), "lhs: root of K'/K = 2");
      });
  add({"Kmod.k2", "k_2 = sqrt 2 - 1", 1e-12},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        return make_check(s, singular_modulus(2.0, ctx), std::sqrt(2.0) - 1.0, "lhs: root of K'/K = sqrt 2");
      });
  add({"Kmod.ratio.r=3", "K(k'_r)/K(k_r) = sqrt r", 1e-12},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        const ModulusPair p = singular_modulus_pair(3.0, ctx);
        return make_check(s, elliptic_k_from_complement(p.k) / elliptic_k_from_complement(p.kprime), std::sqrt(3.0),
                          "AGM periods at the returned modulus");
      });
  add({"Kj.r=1", "j_r = 16(1+14k_{4r}^2+k_{4r}^4)^3 / (k_{4r}^2 (1-k_{4r}^2)^4) at r = 1", 1e-6},
      [](const CheckSpec& s, const PrecisionContext& ctx) {
        return make_check(s, klein_j(1.0, ctx), 1728.0, "k_4 from the root finder");
      });
  for (double r : {2.0, 3.0}) {
    add({"Kj.forms.r=" + param_string(r), "16(1+14k_{4r}^2+k_{4r}^4)^3/(k_{4r}^2(1-k_{4r}^2)^4) = 256(x+(1-x)^2)^3/(x^2(1-x)^2), x = k_r^2",
         1e-8, strict, Comparison::relative, true},
        [r](const CheckSpec& s, const PrecisionContext& ctx) {
          const double k = singular_modulus(r, ctx);
          const double lam = klein_j_lambda_form(k * k);
          return make_check(s, klein_j(r, ctx), lam, "lhs: k_{4r}; rhs: k_r",
                            {evidence("(Y^2+250Y+3125)^3/Y^5 at Y = u(e^{-2pi sqrt r})",
                                      klein_j_from_u(u_of_q(Nome::from_r_doubled(r))), lam)});
        });
  }

  std::sort(reg.begin(), reg.end(), [](const CheckEntry& a, const CheckEntry& b) { return a.spec.id < b.spec.id; });
  return reg;
}

inline const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> reg = build_registry();
  return reg;
}

/// Registered ids in report order.
inline std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const auto& e : registry()) ids.push_back(e.spec.id);
  return ids;
}

/// Tolerance actually applied: the tier at default precision, relaxed to
/// 100 eps_rel when the context is looser than the default.
inline double effective_tolerance(double tier, const PrecisionContext& ctx) {
  if (ctx.eps_rel <= detail::kDefaultEps) return tier;
  return std::max(tier, 100.0 * ctx.eps_rel);
}

inline CheckResult run_entry(const CheckEntry& entry, const PrecisionContext& ctx) {
  CheckSpec spec = entry.spec;
  spec.tolerance = effective_tolerance(spec.tolerance, ctx);
  const auto start = std::chrono::steady_clock::now();
  CheckResult result;
  try {
    result = entry.run(spec, ctx);
  } catch (const std::exception& e) {
    const double nan = std::nan("");
    result = make_check(spec, nan, nan, std::string("error: ") + e.what());
  }
  result.id = spec.id;
  result.paper_ref = spec.paper_ref;
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

inline CheckResult run_check(const std::string& id, const PrecisionContext& ctx = {}) {
  for (const auto& e : registry()) {
    if (e.spec.id == id) return run_entry(e, ctx);
  }
  throw UnknownCheckError(id);
}

struct Report {
  std::vector<CheckResult> results;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t flagged = 0;
  double seconds = 0.0;

  bool ok() const { return failed == 0; }
};

inline bool matches_filter(const std::string& id, const std::optional<std::string>& filter) {
  return !filter || filter->empty() || fnmatch(filter->c_str(), id.c_str(), 0) == 0;
}

/// Runs every check whose id matches the glob filter, in parallel, reported in id order.
inline Report run_all(const std::optional<std::string>& filter = std::nullopt, const PrecisionContext& ctx = {},
                      unsigned workers = 0) {
  ctx.validate();
  std::vector<const CheckEntry*> selected;
  for (const auto& e : registry()) {
    if (matches_filter(e.spec.id, filter)) selected.push_back(&e);
  }
  Report report;
  report.results.resize(selected.size());
  const auto start = std::chrono::steady_clock::now();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, unsigned(std::max<std::size_t>(selected.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) report.results[i] = run_entry(*selected[i], ctx);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& r : report.results) {
    switch (r.status) {
      case CheckStatus::pass: ++report.passed; break;
      case CheckStatus::fail: ++report.failed; break;
      case CheckStatus::flagged: ++report.flagged; break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

/// 15 significant digits.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

/// "re+im i", or just the real part when the imaginary part is zero.
inline std::string format_number(ComplexValue v) {
  if (v.imag() == 0.0) return format_number(v.real());
  const std::string im = format_number(std::abs(v.imag()));
  return format_number(v.real()) + (v.imag() < 0.0 ? "-" : "+") + im + "i";
}

inline nlohmann::ordered_json to_json(const CheckResult& r) {
  std::string notes = r.notes;
  for (const auto& e : r.evidence) {
    notes += "; " + e.method + " = " + format_number(e.value) + " (residual " + format_number(e.residual) + ")";
  }
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["paper_ref"] = r.paper_ref;
  j["lhs"] = format_number(r.lhs);
  j["rhs"] = format_number(r.rhs);
  j["residual_abs"] = format_number(r.residual_abs);
  j["residual_rel"] = format_number(r.residual_rel);
  j["tolerance"] = format_number(r.tolerance);
  j["status"] = to_string(r.status);
  j["notes"] = notes;
  j["seconds"] = format_number(r.seconds);
  return j;
}

inline nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : report.results) arr.push_back(to_json(r));
  return arr;
}

}  // namespace rrq
