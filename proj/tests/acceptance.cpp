// Acceptance criteria AC1..AC12, one PASS/FAIL line each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rrq/rrq.hpp"

using namespace rrq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

int failures = 0;

void report(const char* name, const std::function<void(Criterion&)>& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "[exception: " << e.what() << "]";
  }
  if (!c.ok) ++failures;
  std::printf("%-5s %s  %s\n", name, c.ok ? "PASS" : "FAIL", c.detail.str().c_str());
}

double residual(const CheckResult& r) { return r.residual_rel; }

}  // namespace

int main() {
  const PrecisionContext ctx;
  const double s5 = std::sqrt(5.0);

  report("AC1", [&](Criterion& c) {
    const double expected = -(1.0 + s5) / 2.0 + std::sqrt((5.0 + s5) / 2.0);
    const auto t0 = Clock::now();
    const double v = rrcf(Nome(std::exp(-2.0 * kPi)));
    const double dt = seconds_since(t0);
    c.detail << "R(e^-2pi)=" << format_number(v) << " abs err " << std::abs(v - expected) << " time " << dt * 1e3
             << " ms";
    c.require(std::abs(v - expected) <= 1e-10, "abs error <= 1e-10");
    c.require(dt < 0.010, "runtime < 10 ms");
  });

  report("AC2", [&](Criterion& c) {
    double worst56 = 0.0, worst7 = 0.0;
    for (const char* q : {"0.05", "0.1", "0.2", "0.3", "0.5"}) {
      worst56 = std::max({worst56, residual(run_check(std::string("Eq5.q=") + q, ctx)),
                          residual(run_check(std::string("Eq6.q=") + q, ctx))});
    }
    for (const char* q : {"0.05", "0.2"}) worst7 = std::max(worst7, residual(run_check(std::string("Eq7.q=") + q, ctx)));
    c.detail << "continued fraction vs eta quotients max rel " << worst56 << "; derivative vs finite difference max rel "
             << worst7;
    c.require(worst56 <= 1e-10, "eta quotient identities <= 1e-10");
    c.require(worst7 <= 1e-6, "derivative <= 1e-6");
  });

  report("AC3", [&](Criterion& c) {
    double worst19 = 0.0;
    for (const char* r : {"1", "2", "4"}) worst19 = std::max(worst19, residual(run_check(std::string("Eq19.r=") + r, ctx)));
    const double k4 = singular_modulus(4.0, ctx);
    const double j1 = klein_j(1.0, ctx);
    double worst_j = 0.0;
    for (double r : {1.0, 2.0, 3.0}) {
      const double k = singular_modulus(r, ctx);
      worst_j = std::max(worst_j, relative_distance(klein_j(r, ctx), klein_j_lambda_form(k * k)));
    }
    c.detail << "f(-q) elliptic form max rel " << worst19 << "; |k4-(3-2sqrt2)| " << std::abs(k4 - (3 - 2 * std::sqrt(2.0)))
             << "; j(1) rel " << std::abs(j1 / 1728.0 - 1.0) << "; j forms max rel " << worst_j;
    c.require(worst19 <= 1e-9, "f(-q) elliptic form <= 1e-9");
    c.require(std::abs(k4 - (3 - 2 * std::sqrt(2.0))) <= 1e-12, "k4 to 1e-12");
    c.require(std::abs(j1 / 1728.0 - 1.0) <= 1e-6, "j(1) = 1728");
    c.require(worst_j <= 1e-8, "j forms agree");
  });

  report("AC4", [&](Criterion& c) {
    const auto t0 = Clock::now();
    const double k = singular_modulus(4.0, ctx);
    const double eta = eta_tail_integral(2.0, ctx);
    const double hyp = 3.0 * std::cbrt(2.0 * k) * gauss_2f1(1.0 / 3.0, 1.0 / 6.0, 7.0 / 6.0, k * k, ctx);
    const double cf = 5.0 * rrcf_integral(rrcf(Nome::from_r(4.0)), ctx);
    const double dt = seconds_since(t0);
    const double worst = std::max({relative_distance(eta, hyp), relative_distance(eta, cf), relative_distance(hyp, cf)});
    c.detail << "eta " << format_number(eta) << " hyp " << format_number(hyp) << " cf " << format_number(cf)
             << " max pairwise rel " << worst << " time " << dt << " s";
    c.require(worst <= 1e-7, "pairwise <= 1e-7");
    c.require(dt < 5.0, "quadrature time < 5 s");
  });

  report("AC5", [&](Criterion& c) {
    const double lhs = rrcf_moment_q(1.0, ctx), rhs = rrcf_moment_closed(1.0, ctx);
    const CheckResult n0 = run_check("Eq13.n0", ctx);
    std::size_t methods = 0;
    for (const auto& e : n0.evidence) methods += std::isfinite(e.residual);
    c.detail << "nu=1 rel " << relative_distance(lhs, rhs) << "; constant check " << to_string(n0.status) << " rel "
             << n0.residual_rel << " with " << methods << " evidence methods";
    c.require(relative_distance(lhs, rhs) <= 1e-6, "nu=1 <= 1e-6");
    c.require(n0.status == CheckStatus::pass || (n0.status == CheckStatus::flagged && methods >= 2),
              "constant pass or flagged with dual evidence");
  });

  report("AC6", [&](Criterion& c) {
    const double k = singular_modulus(4.0, ctx);
    const double arg = 0.6 * std::cbrt(2.0 * k) * gauss_2f1(1.0 / 3.0, 1.0 / 6.0, 7.0 / 6.0, k * k, ctx);
    const double v = F_of_x(arg, ctx);
    const double expected = -(1.0 + s5) / 2.0 + std::sqrt((5.0 + s5) / 2.0);
    c.detail << "F(...) = " << format_number(v) << " rel " << relative_distance(v, expected);
    c.require(relative_distance(v, expected) <= 1e-5, "composite F <= 1e-5");
  });

  report("AC7", [&](Criterion& c) {
    const double k4 = 3.0 - 2.0 * std::sqrt(2.0);
    const SexticInstance prop1{1.0, 250.0, std::cbrt(klein_j_k4r_form(k4 * k4))};
    for (const auto& [name, inst] : {std::pair{"prop1", prop1}, std::pair{"j=4000", SexticInstance::with_j(1, 3, 4000)}}) {
      const SexticSolution s = solve_sextic(inst, ctx);
      const double cross = relative_distance(s.X, s.X_alt);
      c.detail << name << ": X " << format_number(s.X) << " residual rel " << s.residual_rel << " cross-path rel " << cross
               << "; ";
      c.require(s.residual_rel <= 1e-6, std::string(name) + " residual");
      c.require(cross <= 1e-6, std::string(name) + " cross-path");
    }
  });

  report("AC8", [&](Criterion& c) {
    const double b2 = beta_ratio_root({1.0 / 6.0, 1.0 / 6.0}, 2.0, ctx);
    c.detail << "beta_2 abs err " << std::abs(b2 - (2.0 - std::sqrt(3.0)) / 4.0) << "; ";
    c.require(std::abs(b2 - (2.0 - std::sqrt(3.0)) / 4.0) <= 1e-10, "beta_2 to 1e-10");
    double worst = 0.0;
    for (const char* idx : {"2", "3", "3/2", "4", "5"}) {
      worst = std::max(worst, residual(run_check(std::string("Ex3.beta_") + idx, ctx)));
    }
    const double r59 = residual(run_check("Eq59.a=1/6.r=5", ctx));
    const double r60 = residual(run_check("Eq60", ctx));
    c.detail << "radicals max rel " << worst << "; (1/6,5) closed form rel " << r59 << "; gamma-quotient series rel " << r60;
    c.require(worst <= 1e-8, "radicals to 1e-8");
    c.require(r59 <= 1e-9, "closed form at (1/6,5)");
    c.require(r60 <= 1e-9, "gamma quotient series");
  });

  report("AC9", [&](Criterion& c) {
    const auto sums = quadratic_power_partial_sums({1.0, 1.0, 1.0}, 0.0, 0.5, 1.0, 200);
    const double target = std::log(1.0 + 2.0 / std::sqrt(3.0));
    const ComplexValue acc = wynn_epsilon<ComplexValue>(std::span<const ComplexValue>(sums.data(), 40));
    const double ex1 = std::abs(acc - target);
    const CheckResult t9 = run_check("T9.a=1/6.r=5", ctx);
    c.detail << "log(1+2/sqrt3) accelerated err " << ex1 << " (raw S_199 err " << std::abs(sums.back() - target)
             << "); series at (1/6,5) rel " << t9.residual_rel << "; ";
    c.require(ex1 <= 1e-8, "log series within 1e-8 using <= 200 partial sums");
    c.require(t9.residual_rel <= 1e-8, "double series at (1/6,5)");
    for (double big_r : {1.0, 3.0}) {
      const PiFormula p = pi_formula(big_r, 60);
      const double closed_err = std::abs(p.closed - p.target);
      const double series_err = std::abs(p.series.partial_sums.back() - p.target);
      c.detail << "R=" << big_r << " closed err " << closed_err << " series err " << series_err << " tail bound "
               << p.series.tail_bound << "; ";
      c.require(closed_err <= 1e-10, "arcsin closed form");
      c.require(series_err <= p.series.tail_bound + 1e-14, "partial sum within tail bound");
    }
  });

  report("AC10", [&](Criterion& c) {
    double worst = 0.0;
    for (double big_r : {1.0, 2.0, 3.5}) worst = std::max(worst, std::abs(trig_modular(big_r + 1.0) - trig_modular_step(big_r)));
    double worst_p6 = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double y = -0.95 + 0.21 * i;
      worst_p6 = std::max(worst_p6, std::abs(sin_multiple_p6(y) - std::sin(6.0 * std::asin(y))));
    }
    c.detail << "duplication max abs " << worst << "; sextuple-angle polynomial max abs " << worst_p6;
    c.require(worst <= 1e-12, "duplication");
    c.require(worst_p6 <= 1e-12, "sextuple angle");
  });

  report("AC11", [&](Criterion& c) {
    const Report rep = run_all(std::nullopt, ctx);
    c.detail << rep.results.size() << " checks, " << rep.passed << " passed, " << rep.failed << " failed, " << rep.flagged
             << " flagged in " << rep.seconds << " s";
    for (const auto& r : rep.results) {
      if (r.status == CheckStatus::fail) c.detail << " [" << r.id << "]";
    }
    c.require(rep.results.size() >= 40, ">= 40 checks");
    c.require(rep.failed == 0, "no unflagged failures");
    c.require(rep.seconds < 60.0, "wall clock < 60 s");
  });

  report("AC12", [&](Criterion& c) {
    for (const char* id : {"Eq17.nu=1/2", "Eq51.x2.x=0.5", "Eq13.n0", "Eq51.special.x=1", "T7.m_sign.r=2",
                           "Ex4.t_claim.r=2"}) {
      const CheckResult r = run_check(id, ctx);
      std::size_t methods = 0;
      for (const auto& e : r.evidence) methods += std::isfinite(e.residual);
      c.detail << id << " " << to_string(r.status) << " (" << methods << " methods); ";
      c.require(methods >= 2, std::string(id) + " has two evidence residuals");
      c.require(r.status != CheckStatus::fail, std::string(id) + " not failed");
    }
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
