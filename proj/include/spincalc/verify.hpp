#pragma once

#include <string>
#include <vector>

#include "spincalc/trace_oracle.hpp"

namespace spincalc {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  unsigned long long seed = 123456789ULL;
  double identity_tol = 1e-12;
  double composed_tol = 1e-10;
  // Debug fault injection: flips one sign of the epsilon component matrix
  // inside the epsilon checks, which must then fail by name.
  bool inject_epsilon_flip = false;
  // Sample counts for the randomized suites.
  int quaternion_samples = 10000;
  int ivdw_samples = 10000;
  int bilinear_pairs = 1000;
  int va_samples = 1000;
  int spin_sum_samples = 100;
};

/// Runs every module invariant suite and reports one named residual per
/// check.  All randomized draws come from the seed in the options.
std::vector<CheckResult> run_verification_suite(const VerifyOptions& opt);

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace spincalc
