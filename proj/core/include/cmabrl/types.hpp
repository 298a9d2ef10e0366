#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmabrl {

// Best-achievable-reward values reported by grid-based oracles are accurate
// to this tolerance; regret series may dip below monotone by at most this.
inline constexpr double kOracleTolerance = 1e-3;

// Point in the context unit box [0,1]^{context_dim}.
struct ContextVector {
  std::vector<double> values;
};

// Point in the arm unit box [0,1]^{arm_dim}.
struct ArmVector {
  std::vector<double> values;
};

inline void validate_unit_box(std::span<const double> values, int expected_dim,
                              const char* what) {
  if (static_cast<int>(values.size()) != expected_dim) {
    throw std::invalid_argument(std::string(what) + ": expected dimension " +
                                std::to_string(expected_dim) + ", got " +
                                std::to_string(values.size()));
  }
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument(std::string(what) +
                                  ": coordinate outside [0,1]");
    }
  }
}

// One round of the interaction loop, with the environment-reported
// expected and best-achievable rewards used for regret accounting.
struct RoundRecord {
  long round = 0;  // 1-based
  ContextVector context;
  ArmVector arm;
  double reward = 0.0;
  double expected_reward = 0.0;
  double oracle_reward = 0.0;
};

// Shared run-level parameters; algorithm- and environment-specific knobs
// live in the respective config structs.
struct RunConfig {
  int context_dim = 0;
  int arm_dim = 0;
  int relevant_context_dims = 0;  // known upper bound
  int relevant_arm_dims = 0;      // known upper bound
  long horizon = 0;
  double lipschitz = 1.0;
  double confidence_multiplier = 1.0;
  int repetitions = 1;
  std::uint64_t base_seed = 0;

  void validate() const {
    if (context_dim < 1 || arm_dim < 1)
      throw std::invalid_argument("RunConfig: dimensions must be positive");
    if (relevant_context_dims < 1 || relevant_arm_dims < 1)
      throw std::invalid_argument(
          "RunConfig: relevant-dimension bounds must be positive");
    if (relevant_arm_dims > arm_dim)
      throw std::invalid_argument(
          "RunConfig: relevant_arm_dims exceeds arm_dim");
    if (2 * relevant_context_dims > context_dim)
      throw std::invalid_argument(
          "RunConfig: requires 2 * relevant_context_dims <= context_dim");
    if (horizon < 1) throw std::invalid_argument("RunConfig: horizon >= 1");
    if (!(lipschitz > 0.0))
      throw std::invalid_argument("RunConfig: lipschitz > 0");
    if (!(confidence_multiplier > 0.0))
      throw std::invalid_argument("RunConfig: confidence_multiplier > 0");
    if (repetitions < 1)
      throw std::invalid_argument("RunConfig: repetitions >= 1");
  }
};

}  // namespace cmabrl
