#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace om {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  bool quick = false;            // only the fast deterministic criteria
  std::vector<int> criteria;     // empty = all (or the quick subset)
  std::uint64_t seed = 20260809; // master seed for the statistical criteria
};

// Runs the golden acceptance checks and returns one result per criterion.
std::vector<CheckResult> run_acceptance(const VerifyOptions& opts = {});

}  // namespace om
