#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace cmabrl {

// Cumulative reward/regret series of one episode, recorded at every stride
// multiple and at the final round.
struct Trajectory {
  std::vector<long> rounds;
  std::vector<double> cum_reward;    // sampled rewards
  std::vector<double> cum_expected;  // expected rewards of the played arms
  std::vector<double> cum_regret;    // sum of (oracle - expected)
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;

  double final_cum_reward() const { return cum_reward.back(); }
  double final_cum_expected() const { return cum_expected.back(); }
  double final_cum_regret() const { return cum_regret.back(); }
};

// Cross-repetition mean and sample standard deviation at each recorded
// round.
struct AggregateResult {
  std::vector<long> rounds;
  std::vector<double> mean_cum_reward, std_cum_reward;
  std::vector<double> mean_cum_regret, std_cum_regret;
  std::vector<double> mean_cum_expected;
  int repetitions = 0;

  double final_mean_cum_reward() const { return mean_cum_reward.back(); }
  double final_mean_cum_regret() const { return mean_cum_regret.back(); }
  double final_std_cum_regret() const { return std_cum_regret.back(); }
};

// Order-independent reduction: trajectories are combined in index order,
// so any parallel schedule that fills the same slots aggregates
// identically. Standard deviation is the sample form (n-1), zero for a
// single repetition.
AggregateResult aggregate(std::span<const Trajectory> trajectories);

}  // namespace cmabrl
