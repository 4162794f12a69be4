#pragma once

#include <string>
#include <vector>

namespace fliess {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs every acceptance criterion with fixed seeds; results come back in
// criterion order regardless of execution details.
std::vector<CriterionResult> run_acceptance_suite();

bool all_passed(const std::vector<CriterionResult>& results);

// "PASS  3  hilbert-dimensions ... (0.12s)"
std::string format_criterion_line(const CriterionResult& r);

}  // namespace fliess
