#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cmabrl/contracts.hpp"
#include "cmabrl/gmm_env.hpp"
#include "cmabrl/sparse_env.hpp"

namespace cmabrl {

// Parsed experiment description. File format is line-oriented
// `key = value` with `#` comments; list values are whitespace-separated.
// Keys (schema version 1):
//
//   schema_version = 1
//   horizon, repetitions, seed, stride (0 = auto), lipschitz
//   context_dim, arm_dim, relevant_context_dims, relevant_arm_dims
//   partition_number (0 = horizon rule; applies to cmab-rl)
//   algorithms = cmab-rl c-hoo iup uniform
//   multiplier.<algorithm> = <confidence multiplier>
//   env.type = gmm | sparse
//   gmm: env.scale, env.weights, env.mean.<k> (two numbers),
//        env.cov.<k> (three numbers: var_context cov var_arm),
//        env.relevant_context_dim, env.relevant_arm_dim
//   sparse: env.bias, env.arm_tuple, env.arm_weights,
//           env.context_tuple, env.context_weights
//   oracle.resolution, oracle.tolerance
struct ExperimentSpec {
  int schema_version = 1;
  long horizon = 0;
  int repetitions = 1;
  std::uint64_t base_seed = 0;
  long stride = 0;
  double lipschitz = 1.0;
  int context_dim = 0;
  int arm_dim = 0;
  int relevant_context_dims = 1;
  int relevant_arm_dims = 1;
  int partition_number = 0;
  std::vector<std::string> algorithms;
  std::map<std::string, double> multipliers;
  std::string env_type;
  GmmEnvConfig gmm;
  SparseRelevanceEnvConfig sparse;

  // Original key/value pairs in file order, echoed into summaries.
  std::vector<std::pair<std::string, std::string>> raw;

  void validate() const;
  long effective_stride() const {
    return stride > 0 ? stride : (horizon >= 1000 ? horizon / 1000 : 1);
  }
  double multiplier_for(const std::string& algorithm) const;
};

ExperimentSpec parse_experiment_spec(std::istream& in);
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

std::unique_ptr<Environment> make_environment(const ExperimentSpec& spec);
std::unique_ptr<Policy> make_policy(const ExperimentSpec& spec,
                                    const std::string& algorithm,
                                    long horizon, double multiplier);

bool is_learning_algorithm(const std::string& algorithm);

}  // namespace cmabrl
