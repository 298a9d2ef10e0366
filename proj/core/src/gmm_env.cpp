#include "cmabrl/gmm_env.hpp"

#include <cmath>
#include <stdexcept>

namespace cmabrl {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void GmmEnvConfig::validate() const {
  if (context_dim < 1 || arm_dim < 1)
    throw std::invalid_argument("GmmEnvConfig: dimensions must be positive");
  if (!(scale >= 0.0))
    throw std::invalid_argument("GmmEnvConfig: scale >= 0");
  if (weights.empty() || weights.size() != components.size())
    throw std::invalid_argument(
        "GmmEnvConfig: weights and components must match and be nonempty");
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0))
      throw std::invalid_argument("GmmEnvConfig: weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("GmmEnvConfig: weights must sum to 1");
  for (const Gaussian2D& g : components) {
    const double det = g.var_context * g.var_arm - g.cov * g.cov;
    if (!(g.var_context > 0.0) || !(det > 0.0))
      throw std::invalid_argument(
          "GmmEnvConfig: covariance must be positive definite");
  }
  if (relevant_context_dim < 0 || relevant_context_dim >= context_dim ||
      relevant_arm_dim < 0 || relevant_arm_dim >= arm_dim)
    throw std::invalid_argument("GmmEnvConfig: relevant index out of range");
  oracle.validate();
}

GmmEnvConfig GmmEnvConfig::synthetic_defaults() {
  GmmEnvConfig cfg;
  cfg.context_dim = 5;
  cfg.arm_dim = 5;
  cfg.scale = 0.25;
  cfg.weights = {0.5, 0.5};
  cfg.components = {
      Gaussian2D{0.25, 0.75, 0.05, 0.03, 0.025},
      Gaussian2D{0.50, 0.50, 0.025, -0.03, 0.05},
  };
  cfg.relevant_context_dim = 0;
  cfg.relevant_arm_dim = 0;
  return cfg;
}

GmmEnvironment::GmmEnvironment(GmmEnvConfig config)
    : config_(std::move(config)) {
  config_.validate();
  prepared_.reserve(config_.components.size());
  for (std::size_t i = 0; i < config_.components.size(); ++i) {
    const Gaussian2D& g = config_.components[i];
    const double det = g.var_context * g.var_arm - g.cov * g.cov;
    prepared_.push_back(PreparedComponent{
        g.mean_context, g.mean_arm, g.var_arm / det, -g.cov / det,
        g.var_context / det,
        config_.weights[i] / (kTwoPi * std::sqrt(det))});
  }
}

double GmmEnvironment::mean_at(double context_value, double arm_value) const {
  double density = 0.0;
  for (const PreparedComponent& c : prepared_) {
    const double dc = context_value - c.mean_context;
    const double da = arm_value - c.mean_arm;
    const double quad =
        c.inv_cc * dc * dc + 2.0 * c.inv_ca * dc * da + c.inv_aa * da * da;
    if (quad < 80.0) density += c.norm * std::exp(-0.5 * quad);
  }
  const double value = config_.scale * density;
  return value > 1.0 ? 1.0 : value;
}

ContextVector GmmEnvironment::sample_context(RngStream& rng) const {
  ContextVector x;
  x.values.resize(static_cast<std::size_t>(config_.context_dim));
  for (double& v : x.values) v = rng.uniform01();
  return x;
}

double GmmEnvironment::expected_reward(const ContextVector& context,
                                       const ArmVector& arm) const {
  return mean_at(
      context.values[static_cast<std::size_t>(config_.relevant_context_dim)],
      arm.values[static_cast<std::size_t>(config_.relevant_arm_dim)]);
}

double GmmEnvironment::sample_reward(const ContextVector& context,
                                     const ArmVector& arm,
                                     RngStream& rng) const {
  return rng.bernoulli(expected_reward(context, arm)) ? 1.0 : 0.0;
}

double GmmEnvironment::oracle_best(const ContextVector& context) const {
  const double xv =
      context.values[static_cast<std::size_t>(config_.relevant_context_dim)];
  const int scan_dims[] = {config_.relevant_arm_dim};
  return grid_scan_max(
      config_.arm_dim, scan_dims, config_.oracle.resolution, 0.5, 1.0,
      [&](std::span<const double> arm) {
        return mean_at(
            xv,
            arm[static_cast<std::size_t>(config_.relevant_arm_dim)]);
      });
}

}  // namespace cmabrl
