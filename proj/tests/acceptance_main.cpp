// Runs the full verification suite and prints one line per criterion.
// Exits nonzero when any criterion fails.

#include <cstdio>

#include "lw/suite.hpp"

int main() {
  lw::SuiteOptions opts;  // full ranges
  lw::SuiteReport report = lw::run_acceptance_suite(opts);
  int failed = 0;
  for (const auto& r : report.results) {
    std::printf("%s  %2d  %-34s %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str(), r.seconds);
    if (!r.passed) ++failed;
  }
  if (failed > 0) {
    std::printf("%d criterion(s) failed\n", failed);
    return 1;
  }
  std::printf("all %zu criteria passed\n", report.results.size());
  return 0;
}
