#include <cstdio>

#include "quiverk/verification.hpp"

// Acceptance gate: runs every built-in check, prints one line per check,
// exits nonzero if any failed.
int main() {
  const auto results = quiverk::run_verification();
  std::fputs(quiverk::verification_report(results).c_str(), stdout);
  return quiverk::all_passed(results) ? 0 : 1;
}
