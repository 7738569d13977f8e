#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace corestat {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant suite (bijections, oracle equivalence, counts, PF roots,
/// conditional closed forms, condition reports, subset-sum variances) and
/// writes one PASS/FAIL line per check to `log`. `quick` shrinks the scales.
std::vector<CheckResult> run_verification(bool quick, std::ostream& log);

}  // namespace corestat
