// Acceptance gate: runs every criterion at its stated tolerance and prints one
// pass/fail line per criterion. Exit status is nonzero if any criterion fails.

#include <cstdio>

#include "fliess/acceptance.hpp"

int main() {
  auto results = fliess::run_acceptance_suite();
  for (const auto& r : results) std::puts(fliess::format_criterion_line(r).c_str());
  if (!fliess::all_passed(results)) {
    std::puts("CRITERIA FAILED");
    return 1;
  }
  std::puts("ALL CRITERIA PASSED");
  return 0;
}
