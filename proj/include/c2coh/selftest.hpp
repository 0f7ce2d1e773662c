#pragma once

#include <string>
#include <vector>

namespace c2coh {

struct SelftestResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the invariant suite at the given degree bound.  Checks run on up to
// `jobs` threads; results come back in a fixed order.
std::vector<SelftestResult> run_selftest(int bound, int jobs = 1);

}  // namespace c2coh
