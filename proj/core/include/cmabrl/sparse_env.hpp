#pragma once

#include <vector>

#include "cmabrl/contracts.hpp"
#include "cmabrl/oracle.hpp"
#include "cmabrl/tuples.hpp"

namespace cmabrl {

// One arm-region of a sparse-relevance fixture: for arms whose first
// relevant coordinate lies in [arm_lo, arm_hi], the expected reward reads
// the context coordinates in context_tuple with the given weights.
struct SparseRegion {
  double arm_lo = 0.0;
  double arm_hi = 1.0;
  DimensionTuple context_tuple;
  std::vector<double> context_weights;
};

// Test-fixture environment with declared relevant dimensions: the expected
// reward is an affine function (clamped to [0,1]) of the relevant context
// and arm coordinates only, so relevance-learning behavior can be checked
// against ground truth. Rewards are Bernoulli draws of the expected value;
// contexts arrive uniformly.
struct SparseRelevanceEnvConfig {
  int context_dim = 0;
  int arm_dim = 0;
  DimensionTuple arm_tuple;  // relevant arm dimensions (may be empty)
  std::vector<double> arm_weights;
  double bias = 0.0;
  std::vector<SparseRegion> regions;  // first matching region wins
  OracleConfig oracle;

  void validate() const;
  // Largest admissible Lipschitz constant of the configured reward with
  // respect to the Euclidean norm on relevant coordinates (per region).
  double lipschitz() const;
};

class SparseRelevanceEnvironment final : public Environment {
 public:
  explicit SparseRelevanceEnvironment(SparseRelevanceEnvConfig config);

  int context_dim() const override { return config_.context_dim; }
  int arm_dim() const override { return config_.arm_dim; }
  ContextVector sample_context(RngStream& rng) const override;
  double expected_reward(const ContextVector& context,
                         const ArmVector& arm) const override;
  double sample_reward(const ContextVector& context, const ArmVector& arm,
                       RngStream& rng) const override;
  double oracle_best(const ContextVector& context) const override;

  const SparseRelevanceEnvConfig& config() const { return config_; }
  // Union of relevant context dimensions over all regions.
  const DimensionTuple& declared_context_dims() const {
    return declared_context_dims_;
  }

 private:
  const SparseRegion& region_for(const ArmVector& arm) const;

  SparseRelevanceEnvConfig config_;
  DimensionTuple declared_context_dims_;
};

}  // namespace cmabrl
