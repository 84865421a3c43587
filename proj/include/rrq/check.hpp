#pragma once

// One verified identity: both sides, residuals, tolerance, status and the
// independent evaluation routes that produced them.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rrq/numerics.hpp"

namespace rrq {

enum class CheckStatus { pass, fail, flagged };

/// flag_on_fail: a miss is reported as flagged instead of failed. Reserved for
/// identities whose printed form is known or suspected to be inexact.
enum class StatusPolicy { strict, flag_on_fail };

enum class Comparison { relative, absolute };

struct Evidence {
  std::string method;
  ComplexValue value;
  double residual = 0.0;  // relative distance to the check's rhs
};

struct CheckResult {
  std::string id;
  std::string paper_ref;
  ComplexValue lhs;
  ComplexValue rhs;
  double residual_abs = 0.0;
  double residual_rel = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::fail;
  std::string notes;
  double seconds = 0.0;
  std::vector<Evidence> evidence;
};

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::flagged: return "flagged";
  }
  return "fail";
}

inline double relative_distance(ComplexValue a, ComplexValue b) {
  const double d = std::abs(a - b);
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? d / scale : d;
}

struct CheckSpec {
  std::string id;
  std::string paper_ref;
  double tolerance = 1e-10;
  StatusPolicy policy = StatusPolicy::strict;
  Comparison comparison = Comparison::relative;
  bool gate_on_evidence = false;  // every evidence residual must also be within tolerance
};

/// Shortest round-trip-free rendering of a check parameter: 0.5 -> "0.5", 4 -> "4".
inline std::string param_string(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

inline CheckResult make_check(const CheckSpec& spec, ComplexValue lhs, ComplexValue rhs,
                              std::string notes = {}, std::vector<Evidence> evidence = {}) {
  CheckResult r;
  r.id = spec.id;
  r.paper_ref = spec.paper_ref;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual_abs = std::abs(lhs - rhs);
  r.residual_rel = relative_distance(lhs, rhs);
  r.tolerance = spec.tolerance;
  const double measured = spec.comparison == Comparison::relative ? r.residual_rel : r.residual_abs;
  bool ok = std::isfinite(measured) && measured <= spec.tolerance;
  if (spec.gate_on_evidence) {
    for (const auto& e : evidence) {
      ok = ok && std::isfinite(e.residual) && e.residual <= spec.tolerance;
    }
  }
  if (ok) {
    r.status = CheckStatus::pass;
  } else {
    r.status = spec.policy == StatusPolicy::flag_on_fail ? CheckStatus::flagged : CheckStatus::fail;
  }
  r.notes = std::move(notes);
  r.evidence = std::move(evidence);
  return r;
}

}  // namespace rrq
