#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "cmabrl/types.hpp"

namespace cmabrl {

// Pseudo-regret series: element t is the sum over rounds s <= t of
// (best achievable expected reward - expected reward of the played arm).
inline std::vector<double> cumulative_regret(
    std::span<const RoundRecord> trajectory) {
  if (trajectory.empty())
    throw std::invalid_argument("cumulative_regret: empty trajectory");
  std::vector<double> out;
  out.reserve(trajectory.size());
  double acc = 0.0;
  for (const RoundRecord& rec : trajectory) {
    acc += rec.oracle_reward - rec.expected_reward;
    out.push_back(acc);
  }
  return out;
}

}  // namespace cmabrl
