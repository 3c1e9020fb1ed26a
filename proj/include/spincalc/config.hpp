#pragma once

#include <stdexcept>
#include <string>

#include "spincalc/amplitude.hpp"

namespace spincalc {

/// Raised for malformed or invalid run configuration; what() names the
/// offending field path.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double identity = 1e-12;
  double composed = 1e-10;
};

/// One amplitude run: the fixed process tag, the four external legs, the
/// couplings and the check tolerances.
struct RunConfig {
  std::string process = "nu_n_to_p_e";
  VaKinematics particles;
  Couplings couplings;
  Tolerances tolerances;
};

/// Parses and validates a JSON config file.  Throws ConfigError with the
/// field path on malformed input, std::domain_error (wrapped) on invalid
/// kinematics naming the particle.
RunConfig load_run_config(const std::string& path);

/// Same from an in-memory JSON document (used by tests).
RunConfig parse_run_config(const std::string& json_text);

}  // namespace spincalc
