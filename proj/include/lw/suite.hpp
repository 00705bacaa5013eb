#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lw {

// Self-contained verification suite: ten independent checks covering the
// exactly-checkable identities (Takagi sums, dyadic entropy), the certified
// inequalities (Lipschitz sandwich, covers), the cross-solver consistency
// report, and the symbolic rate tables.  Each check returns pass/fail with a
// one-line detail; the CLI and the test binary render them.
struct SuiteOptions {
  bool quick = false;              // trimmed index ranges, same checks
  bool inject_takagi_fault = false;  // corrupt coefficients; checks 1-2 must fail
  std::uint64_t seed = 20240801;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteReport {
  std::vector<CriterionResult> results;
  bool all_passed() const;
};

SuiteReport run_acceptance_suite(const SuiteOptions& opts = {});

}  // namespace lw
