// acceptance.hpp — End-to-end validation checks with pinned tolerances, shared
// by the `validate` CLI command and the acceptance test suite.

#pragma once

#include <string>
#include <vector>

namespace rwc {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;  // the quantity compared against the bound
  double bound = 0.0;
  std::string detail;
};

// Runs every check on the reference bath (alpha = 0.05, omega_c = 5).
// Deterministic; `threads` only affects wall time.
std::vector<CheckResult> run_acceptance_checks(unsigned threads = 0);

// One line per check: "[PASS|FAIL] name  measured=...  bound=...  detail".
std::string format_check_line(const CheckResult& r);

}  // namespace rwc
