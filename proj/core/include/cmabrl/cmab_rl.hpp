#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <vector>

#include "cmabrl/arm_grid.hpp"
#include "cmabrl/contracts.hpp"
#include "cmabrl/stats_store.hpp"
#include "cmabrl/tuples.hpp"

namespace cmabrl {

// Smallest integer m with m^(2 + 2*relevant_context_dims + relevant_arm_dims)
// >= horizon, i.e. ceil(T^(1/(2+2*dx_rel+da_rel))). Exact for integer inputs.
long m_for_horizon(long horizon, int relevant_context_dims,
                   int relevant_arm_dims);

// Confidence radius of a cell visited n times. log_constant is
// 2 + 4*ln(2 * |arms| * tuples_containing_dim * m^(2*dx_rel) * T^(3/2));
// unvisited cells get +infinity so they dominate any finite index.
inline double uncertainty(std::int64_t n, double log_constant,
                          double multiplier) {
  if (n < 1) return std::numeric_limits<double>::infinity();
  return multiplier * std::sqrt(log_constant / static_cast<double>(n));
}

struct CmabRlConfig {
  int context_dim = 0;
  int arm_dim = 0;
  int relevant_context_dims = 0;  // known upper bound on relevant context dims
  int relevant_arm_dims = 0;      // known upper bound on relevant arm dims
  long horizon = 0;
  double lipschitz = 1.0;
  double confidence_multiplier = 1.0;
  int partition_number = 0;  // 0 -> horizon rule

  void validate() const;
  int effective_partition_number() const;
};

// Relevance-learning contextual bandit over discretized low-dimensional
// projections of the context and arm sets.
//
// Per round: locate the current context's cell in every partition tuple,
// test each candidate tuple for relevance against all of its supertuples,
// estimate each arm's reward from the least-variation surviving candidate,
// and play the arm with the highest optimistic index. All ties break
// uniformly at random from the policy stream.
class CmabRlPolicy final : public Policy {
 public:
  explicit CmabRlPolicy(CmabRlConfig config);

  int context_dim() const override { return config_.context_dim; }
  int arm_dim() const override { return config_.arm_dim; }
  ArmVector choose(const ContextVector& context) override;
  void learn(const ContextVector& context, const ArmVector& arm,
             double reward) override;
  void reset(std::uint64_t seed) override;
  std::string_view name() const override { return "cmab-rl"; }

  // Swap the arm catalog for representatives of a finite arm list; resets
  // learned state. Call before the run starts.
  void restrict_arms(const std::vector<ArmVector>& allowed);

  const CmabRlConfig& config() const { return config_; }
  int partition_number() const { return m_; }
  const DiscretizedArmSet& arm_set() const { return arms_; }
  // Relevance candidates (size relevant_context_dims).
  const std::vector<DimensionTuple>& candidate_tuples() const {
    return candidate_tuples_;
  }
  // Tuples indexing the stored partitions (size 2*relevant_context_dims).
  const std::vector<DimensionTuple>& partition_tuples() const {
    return partition_tuples_;
  }
  const StatsStore& stats() const { return stats_; }
  std::int64_t selection_count(int arm) const {
    return selection_counts_[static_cast<std::size_t>(arm)];
  }
  long rounds_played() const { return rounds_played_; }
  std::uint64_t stat_reads_last_round() const { return reads_last_round_; }
  double relevance_threshold() const { return relevance_threshold_; }
  double uncertainty_log_constant() const { return log_constant_; }

  // Captured by every choose(); per-arm values of the decision it made.
  struct RoundDecision {
    std::vector<double> ucb;
    std::vector<double> aggregate_mean;
    std::vector<double> max_uncertainty;
    std::vector<int> estimated_tuple_rank;  // into candidate_tuples()
    int selected_arm = -1;
  };
  const RoundDecision& last_decision() const { return decision_; }

  // Invoked by choose() for every arm with the ranks (into
  // candidate_tuples()) of the tuples passing the relevance test; the
  // vector is reused between calls, copy to retain.
  using RelevanceObserver =
      std::function<void(long round, int arm, const std::vector<int>&)>;
  void set_relevance_observer(RelevanceObserver observer) {
    relevance_observer_ = std::move(observer);
  }

  // Portable text snapshot of all allocated cell statistics, sorted by
  // (arm id, tuple rank, interval indices); for golden and determinism
  // tests.
  void write_snapshot(std::ostream& out) const;

 private:
  void rebuild_catalogs();
  int pick_uniform(const std::vector<int>& options);

  CmabRlConfig config_;
  int m_ = 0;
  DiscretizedArmSet arms_;
  std::vector<DimensionTuple> candidate_tuples_;   // relevance candidates
  std::vector<DimensionTuple> partition_tuples_;   // stored partitions
  // For each candidate tuple: ranks of its supertuples in partition_tuples_.
  std::vector<std::vector<int>> supertuple_ranks_;
  double relevance_threshold_ = 0.0;  // 2 L sqrt(dx_rel) / m
  double log_constant_ = 0.0;
  StatsStore stats_;
  RngStream rng_;
  std::vector<std::int64_t> selection_counts_;
  long rounds_played_ = 0;
  int last_arm_ = -1;
  std::uint64_t reads_last_round_ = 0;
  RoundDecision decision_;
  RelevanceObserver relevance_observer_;

  // Per-round scratch, reused across rounds.
  std::vector<std::uint64_t> current_cells_;  // per partition tuple
  std::vector<double> scratch_mean_;
  std::vector<double> scratch_uncertainty_;
  std::vector<std::int64_t> scratch_count_;
  std::vector<int> scratch_candidates_;
  std::vector<int> scratch_ties_;
  std::vector<int> scratch_var_ties_;
  std::vector<int> scratch_u_ties_;
};

}  // namespace cmabrl
