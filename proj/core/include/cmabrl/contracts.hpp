#pragma once

#include <cstdint>
#include <string_view>

#include "cmabrl/rng.hpp"
#include "cmabrl/types.hpp"

namespace cmabrl {

// Round-loop interface every learning algorithm implements.
//
// The driver calls choose() then learn() with the arm returned by that same
// choose(); policies may rely on this pairing to recover internal ids for
// arms whose vectors coincide. reset(seed) restores the initial state with a
// fresh stream, so equal configs and seeds replay identical arm sequences on
// identical inputs.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual int context_dim() const = 0;
  virtual int arm_dim() const = 0;
  virtual ArmVector choose(const ContextVector& context) = 0;
  virtual void learn(const ContextVector& context, const ArmVector& arm,
                     double reward) = 0;
  virtual void reset(std::uint64_t seed) = 0;
  virtual std::string_view name() const = 0;
};

// Reward-generating process. Implementations are read-only after
// construction; all randomness flows through the caller's stream, so one
// instance can serve concurrent runs.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual int context_dim() const = 0;
  virtual int arm_dim() const = 0;
  virtual ContextVector sample_context(RngStream& rng) const = 0;
  // Mean reward in [0,1]; depends only on the declared relevant dimensions.
  virtual double expected_reward(const ContextVector& context,
                                 const ArmVector& arm) const = 0;
  virtual double sample_reward(const ContextVector& context,
                               const ArmVector& arm, RngStream& rng) const = 0;
  // Best achievable expected reward for this context, within
  // kOracleTolerance of the true maximum.
  virtual double oracle_best(const ContextVector& context) const = 0;
};

}  // namespace cmabrl
