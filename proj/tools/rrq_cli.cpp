#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rrq/rrq.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFailure = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw UsageError("not a number: " + s);
  return v;
}

struct EvalFunction {
  std::vector<std::string> params;
  std::function<rrq::ComplexValue(const std::vector<double>&, const rrq::PrecisionContext&)> fn;
};

const std::map<std::string, EvalFunction>& eval_table() {
  using rrq::ComplexValue;
  using rrq::PrecisionContext;
  using Args = std::vector<double>;
  static const std::map<std::string, EvalFunction> table = {
      {"rrcf", {{"q"}, [](const Args& a, const PrecisionContext&) -> ComplexValue { return rrq::rrcf(rrq::Nome(a[0])); }}},
      {"f", {{"q"}, [](const Args& a, const PrecisionContext&) -> ComplexValue { return rrq::ramanujan_f(rrq::Nome(a[0])); }}},
      {"eta", {{"t"}, [](const Args& a, const PrecisionContext&) -> ComplexValue { return rrq::dedekind_eta(a[0]); }}},
      {"u", {{"q"}, [](const Args& a, const PrecisionContext&) -> ComplexValue { return rrq::u_of_q(rrq::Nome(a[0])); }}},
      {"K", {{"k"}, [](const Args& a, const PrecisionContext&) -> ComplexValue { return rrq::elliptic_k(a[0]); }}},
      {"k_r", {{"r"}, [](const Args& a, const PrecisionContext& c) -> ComplexValue { return rrq::singular_modulus(a[0], c); }}},
      {"j", {{"r"}, [](const Args& a, const PrecisionContext& c) -> ComplexValue { return rrq::klein_j(a[0], c); }}},
      {"2f1",
       {{"a", "b", "c", "z"},
        [](const Args& a, const PrecisionContext& c) -> ComplexValue { return rrq::gauss_2f1(a[0], a[1], a[2], a[3], c); }}},
      {"f1",
       {{"a", "b1", "b2", "c", "x", "y"},
        [](const Args& a, const PrecisionContext& c) { return rrq::appell_f1(a[0], a[1], a[2], a[3], a[4], a[5], c); }}},
      {"beta_inc",
       {{"x", "a", "b"},
        [](const Args& a, const PrecisionContext& c) -> ComplexValue { return rrq::incomplete_beta(a[0], {a[1], a[2]}, c); }}},
      {"F", {{"x"}, [](const Args& a, const PrecisionContext& c) -> ComplexValue { return rrq::F_of_x(a[0], c); }}},
      {"m", {{"x"}, [](const Args& a, const PrecisionContext& c) -> ComplexValue { return rrq::m_of_x(a[0], c); }}},
      {"G", {{"x"}, [](const Args& a, const PrecisionContext& c) -> ComplexValue { return rrq::G_of_x(a[0], c); }}},
      {"beta_root",
       {{"a", "b", "r"},
        [](const Args& a, const PrecisionContext& c) -> ComplexValue { return rrq::beta_ratio_root({a[0], a[1]}, a[2], c); }}},
      {"m65", {{"R"}, [](const Args& a, const PrecisionContext&) -> ComplexValue { return rrq::trig_modular(a[0]); }}},
  };
  return table;
}

std::string function_list() {
  std::string out;
  for (const auto& [name, f] : eval_table()) {
    out += "  " + name;
    for (const auto& p : f.params) out += " <" + p + ">";
    out += "\n";
  }
  return out;
}

int cmd_eval(const std::string& name, const std::vector<std::string>& raw, const rrq::PrecisionContext& ctx) {
  const auto it = eval_table().find(name);
  if (it == eval_table().end()) throw UsageError("unknown function '" + name + "'; available:\n" + function_list());
  const EvalFunction& f = it->second;
  if (raw.size() != f.params.size()) {
    throw UsageError(name + " expects " + std::to_string(f.params.size()) + " argument(s), got " +
                     std::to_string(raw.size()));
  }
  std::vector<double> args;
  for (const auto& s : raw) args.push_back(parse_number(s));
  const rrq::ComplexValue value = f.fn(args, ctx);
  // Error estimate: distance to a re-evaluation at coarser settings.
  rrq::PrecisionContext coarse = ctx;
  coarse.eps_rel = std::min(1e-6, ctx.eps_rel * 1e3);
  coarse.max_quad_levels = std::max(1, ctx.max_quad_levels - 2);
  double estimate = std::abs(value);
  try {
    estimate = std::abs(value - f.fn(args, coarse));
  } catch (const rrq::NumericError&) {
  }
  std::cout << rrq::format_number(value) << "  (est. error " << rrq::format_number(estimate) << ")\n";
  return 0;
}

int cmd_verify(const std::string& filter, bool json, const rrq::PrecisionContext& ctx) {
  const rrq::Report report = rrq::run_all(filter.empty() ? std::nullopt : std::optional(filter), ctx);
  if (json) {
    std::cout << rrq::to_json(report).dump(2) << "\n";
  } else {
    for (const auto& r : report.results) {
      std::string status = rrq::to_string(r.status);
      for (auto& ch : status) ch = char(std::toupper(ch));
      std::printf("%-8s %-32s rel %-22s abs %-22s tol %-8s %8.4fs\n", status.c_str(), r.id.c_str(),
                  rrq::format_number(r.residual_rel).c_str(), rrq::format_number(r.residual_abs).c_str(),
                  rrq::format_number(r.tolerance).c_str(), r.seconds);
    }
    std::printf("%zu checks: %zu passed, %zu failed, %zu flagged in %.3f s\n", report.results.size(), report.passed,
                report.failed, report.flagged, report.seconds);
  }
  return report.ok() ? 0 : kExitFailure;
}

int cmd_solve_sextic(double a, double b, std::optional<double> c1, std::optional<double> j,
                     const rrq::PrecisionContext& ctx) {
  if (a == 0.0 || b == 0.0) throw UsageError("solve-sextic needs a != 0 and b != 0");
  if (c1.has_value() == j.has_value()) throw UsageError("solve-sextic needs exactly one of <c1> or --j");
  const rrq::SexticInstance inst = j ? rrq::SexticInstance::with_j(a, b, *j) : rrq::SexticInstance{a, b, *c1};
  const rrq::SexticSolution s = rrq::solve_sextic(inst, ctx);
  const auto n = [](double v) { return rrq::format_number(v); };
  std::cout << "j        " << n(inst.j()) << "\n"
            << "X        " << n(s.X) << "\n"
            << "t        " << n(s.t) << "\n"
            << "r        " << n(s.r) << "\n"
            << "k_4r     " << n(s.k4r) << "\n"
            << "X_alt    " << n(s.X_alt) << "\n"
            << "residual " << n(s.residual) << " (relative " << n(s.residual_rel) << ")\n"
            << "delta    " << n(rrq::relative_distance(s.X, s.X_alt)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rogers-Ramanujan continued fraction kernels and identity checks"};
  app.require_subcommand(1);

  rrq::PrecisionContext ctx = rrq::PrecisionContext::from_environment();
  std::optional<double> eps;
  std::optional<std::size_t> max_terms;
  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--eps", eps, "relative tolerance (default 1e-12 or RRCF_EPS)")->check(CLI::PositiveNumber);
    sub->add_option("--max-terms", max_terms, "series term cap")->check(CLI::PositiveNumber);
  };

  std::string filter;
  bool json = false;
  CLI::App* verify = app.add_subcommand("verify", "run the check registry");
  verify->add_option("--filter", filter, "glob over check ids, e.g. \"T3*\"");
  verify->add_flag("--json", json, "emit a JSON array of check results");
  add_precision(verify);

  std::string fn_name;
  std::vector<std::string> fn_args;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a kernel");
  eval->add_option("function", fn_name, "function name")->required();
  eval->add_option("args", fn_args, "numeric arguments");
  eval->footer("functions:\n" + function_list());
  add_precision(eval);

  double a = 0.0, b = 0.0;
  std::optional<double> c1, j;
  CLI::App* sextic = app.add_subcommand("solve-sextic", "solve a X^2 + b X + b^2/(20a) = C1 X^(5/3)");
  sextic->add_option("a", a)->required();
  sextic->add_option("b", b)->required();
  sextic->add_option("c1", c1);
  sextic->add_option("--j", j, "give the instance by its j-invariant instead of c1");
  add_precision(sextic);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (eps) ctx.eps_rel = *eps;
  if (max_terms) ctx.max_series_terms = *max_terms;

  try {
    ctx.validate();
    if (*verify) return cmd_verify(filter, json, ctx);
    if (*eval) return cmd_eval(fn_name, fn_args, ctx);
    return cmd_solve_sextic(a, b, c1, j, ctx);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rrq::DomainError& e) {
    if (*sextic) {
      std::cerr << "sextic a X^2 + b X + b^2/(20a) = C1 X^(5/3): " << e.what() << "\n";
    } else {
      std::cerr << "domain error: " << e.what() << "\n";
    }
    return kExitFailure;
  } catch (const rrq::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitFailure;
  }
}
