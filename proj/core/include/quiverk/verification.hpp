#pragma once

#include <string>
#include <vector>

namespace quiverk {

// Outcome of one acceptance check. `detail` is empty on success and holds a
// human-readable mismatch description otherwise.
struct CheckResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

// Runs the complete acceptance suite. Every comparison is exact; there are
// no numeric tolerances anywhere. Checks appear in a fixed order and never
// throw: failures (including exceptions) are captured in the result.
std::vector<CheckResult> run_verification();

// One line per check, "PASS <name> (<seconds> s)" or "FAIL <name>: <detail>",
// followed by a summary line.
std::string verification_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace quiverk
