// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any criterion fails.

#include <cstdio>

#include "nleig/acceptance.hpp"

int main() {
  nleig::AcceptanceOptions opts;
  opts.on_result = [](const nleig::CriterionResult& r) {
    std::printf("[%s] criterion %2d  %-55s %8.2f s  %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
  };
  const auto results = nleig::run_acceptance(opts);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}
