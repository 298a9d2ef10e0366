#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cmabrl/contracts.hpp"
#include "cmabrl/stats_store.hpp"

namespace cmabrl {

// Smallest integer m with m^(2 + context_dim + arm_dim) >= horizon,
// i.e. ceil(T^(1/(2+dx+da))).
long iup_m(long horizon, int context_dim, int arm_dim);

struct IupConfig {
  int context_dim = 0;
  int arm_dim = 0;
  long horizon = 0;
  double confidence_multiplier = 1.0;
  int partition_number = 0;  // 0 -> horizon rule

  void validate() const;
  int effective_partition_number() const;
};

// Uniform partitioning of the joint context-arm box into m^(dx+da)
// hypercubes with one UCB index per cube. Each round the cubes whose
// context projection contains the observed context compete; the winner's
// arm-projection center is played. Cube statistics are allocated lazily.
class IupPolicy final : public Policy {
 public:
  explicit IupPolicy(IupConfig config);

  int context_dim() const override { return config_.context_dim; }
  int arm_dim() const override { return config_.arm_dim; }
  ArmVector choose(const ContextVector& context) override;
  void learn(const ContextVector& context, const ArmVector& arm,
             double reward) override;
  void reset(std::uint64_t seed) override;
  std::string_view name() const override { return "iup"; }

  int partition_number() const { return m_; }
  // Cubes competing for any fixed context: m^{arm_dim}.
  std::uint64_t candidates_per_round() const { return arm_cell_count_; }
  std::size_t entry_count() const { return cells_.size(); }
  long rounds_played() const { return rounds_played_; }

 private:
  IupConfig config_;
  int m_ = 0;
  std::uint64_t arm_cell_count_ = 0;
  std::unordered_map<std::uint64_t, CellStats> cells_;
  RngStream rng_;
  long rounds_played_ = 0;
  std::uint64_t last_cell_ = 0;
  ArmVector last_arm_;
  bool pending_learn_ = false;
  std::vector<std::uint64_t> scratch_ties_;
};

}  // namespace cmabrl
