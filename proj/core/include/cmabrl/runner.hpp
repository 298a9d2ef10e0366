#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cmabrl/contracts.hpp"
#include "cmabrl/trajectory.hpp"

namespace cmabrl {

inline long default_stride(long horizon) {
  return horizon >= 1000 ? horizon / 1000 : 1;
}

struct EpisodeOptions {
  long horizon = 0;
  long stride = 0;  // 0 -> default_stride(horizon)
  std::uint64_t seed = 0;
};

// One seeded interaction loop: sample context, choose, draw reward, learn.
// The policy is reset with the episode seed (policy stream); environment
// draws use stream 1 of the same seed.
Trajectory run_episode(Policy& policy, const Environment& environment,
                       const EpisodeOptions& options);

// Same loop, retaining the full per-round record; for analysis and tests
// at moderate horizons.
std::vector<RoundRecord> run_episode_records(Policy& policy,
                                             const Environment& environment,
                                             const EpisodeOptions& options);

struct ExperimentOptions {
  long horizon = 0;
  int repetitions = 1;
  std::uint64_t base_seed = 0;
  long stride = 0;
  int max_workers = 0;  // 0 -> hardware concurrency
};

using PolicyFactory = std::function<std::unique_ptr<Policy>(long horizon)>;

// Repetition r runs with seed base_seed + r; repetitions execute
// concurrently on up to max_workers threads and aggregate in repetition
// order, so the result is schedule-independent.
AggregateResult run_experiment(const PolicyFactory& make_policy,
                               const Environment& environment,
                               const ExperimentOptions& options);

struct GridSearchRow {
  std::string algorithm;
  double multiplier = 0.0;
  double final_mean_cum_reward = 0.0;
};

struct GridSearchReport {
  std::vector<GridSearchRow> rows;
  std::map<std::string, double> best_multiplier;  // argmax per algorithm
};

using TunablePolicyFactory = std::function<std::unique_ptr<Policy>(
    const std::string& algorithm, long horizon, double multiplier)>;

GridSearchReport grid_search(const std::vector<std::string>& algorithms,
                             const TunablePolicyFactory& make_policy,
                             const Environment& environment,
                             const ExperimentOptions& options,
                             const std::vector<double>& multipliers);

// Re-instantiates policies per horizon (partition numbers and confidence
// constants follow), deduplicating and sorting the horizon list.
std::vector<std::pair<long, AggregateResult>> horizon_sweep(
    const PolicyFactory& make_policy, const Environment& environment,
    const ExperimentOptions& base_options, std::vector<long> horizons);

}  // namespace cmabrl
