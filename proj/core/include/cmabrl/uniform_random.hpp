#pragma once

#include "cmabrl/contracts.hpp"

namespace cmabrl {

// Plays an independent uniform point of the arm box every round; ignores
// context and feedback.
class UniformRandomPolicy final : public Policy {
 public:
  UniformRandomPolicy(int context_dim, int arm_dim)
      : context_dim_(context_dim), arm_dim_(arm_dim) {
    if (context_dim < 1 || arm_dim < 1)
      throw std::invalid_argument(
          "UniformRandomPolicy: dimensions must be positive");
    reset(0);
  }

  int context_dim() const override { return context_dim_; }
  int arm_dim() const override { return arm_dim_; }

  ArmVector choose(const ContextVector& context) override {
    validate_unit_box(context.values, context_dim_, "context");
    ArmVector arm;
    arm.values.resize(static_cast<std::size_t>(arm_dim_));
    for (double& v : arm.values) v = rng_.uniform01();
    return arm;
  }

  void learn(const ContextVector&, const ArmVector&, double) override {}
  void reset(std::uint64_t seed) override { rng_.reseed(seed, 0); }
  std::string_view name() const override { return "uniform"; }

 private:
  int context_dim_;
  int arm_dim_;
  RngStream rng_;
};

}  // namespace cmabrl
