#pragma once

#include <cstdint>
#include <vector>

#include "cmabrl/contracts.hpp"

namespace cmabrl {

struct ChooConfig {
  int context_dim = 0;
  int arm_dim = 0;
  long horizon = 0;
  double confidence_multiplier = 1.0;
  double smoothness_scale = 0.0;  // v1; 0 -> 2*sqrt(dx+da)
  double shrink_rate = 0.0;       // rho; 0 -> 2^(-1/(dx+da))
  int depth_cap = 0;              // 0 -> ceil(ln(T) / (2 ln(1/rho)))

  void validate() const;
  double effective_smoothness_scale() const;
  double effective_shrink_rate() const;
  int effective_depth_cap() const;
};

// Contextual truncated hierarchical optimistic optimization: a binary tree
// of axis-aligned boxes over the joint context-arm space, refined one node
// per round toward high-reward regions. Descent follows the B-values of
// children whose context projection contains the observed context; boxes
// split in half along their longest edge (ties to the lowest dimension).
// Depth is capped; at the cap the box center's arm projection is played.
class ChooPolicy final : public Policy {
 public:
  explicit ChooPolicy(ChooConfig config);

  int context_dim() const override { return config_.context_dim; }
  int arm_dim() const override { return config_.arm_dim; }
  ArmVector choose(const ContextVector& context) override;
  void learn(const ContextVector& context, const ArmVector& arm,
             double reward) override;
  void reset(std::uint64_t seed) override;
  std::string_view name() const override { return "c-hoo"; }

  struct Node {
    int depth = 0;
    std::vector<double> lo, hi;  // joint box, context dims then arm dims
    std::int64_t visits = 0;
    double mean = 0.0;
    double ucb = 0.0;     // U-value
    double bvalue = 0.0;  // B-value
    int children[2] = {-1, -1};
    int split_dim = -1;
    double split_at = 0.0;
  };

  std::size_t node_count() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  int depth_cap() const { return depth_cap_; }
  double smoothness_scale() const { return v1_; }
  double shrink_rate() const { return rho_; }
  long rounds_played() const { return rounds_played_; }
  const std::vector<int>& last_path() const { return path_; }

 private:
  int create_child(int parent, int side);
  bool region_contains_context(const Node& node,
                               const ContextVector& context) const;
  void refresh_ucb(Node& node) const;

  ChooConfig config_;
  double v1_ = 0.0;
  double rho_ = 0.0;
  int depth_cap_ = 0;
  std::vector<Node> nodes_;
  std::vector<int> path_;  // root..leaf of the pending round
  RngStream rng_;
  long rounds_played_ = 0;
  ArmVector last_arm_;
  bool pending_learn_ = false;
};

}  // namespace cmabrl
