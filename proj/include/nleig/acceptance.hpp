#pragma once

#include <functional>
#include <string>
#include <vector>

namespace nleig {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  int n = 4000;
  /// Bracket width for the critical-coupling searches.
  double critical_tol = 1e-3;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

/// Runs the twelve end-to-end acceptance checks in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

}  // namespace nleig
