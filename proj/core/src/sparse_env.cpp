#include "cmabrl/sparse_env.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace cmabrl {

void SparseRelevanceEnvConfig::validate() const {
  if (context_dim < 1 || arm_dim < 1)
    throw std::invalid_argument(
        "SparseRelevanceEnvConfig: dimensions must be positive");
  if (arm_tuple.max_dim() >= arm_dim)
    throw std::invalid_argument(
        "SparseRelevanceEnvConfig: arm tuple index out of range");
  if (arm_weights.size() != static_cast<std::size_t>(arm_tuple.size()))
    throw std::invalid_argument(
        "SparseRelevanceEnvConfig: arm weights must match arm tuple");
  if (regions.empty())
    throw std::invalid_argument(
        "SparseRelevanceEnvConfig: at least one region required");
  if (regions.size() > 1 && arm_tuple.empty())
    throw std::invalid_argument(
        "SparseRelevanceEnvConfig: multiple regions need a relevant arm "
        "dimension to key on");
  for (const SparseRegion& r : regions) {
    if (!(r.arm_lo <= r.arm_hi))
      throw std::invalid_argument(
          "SparseRelevanceEnvConfig: region interval inverted");
    if (r.context_tuple.max_dim() >= context_dim)
      throw std::invalid_argument(
          "SparseRelevanceEnvConfig: context tuple index out of range");
    if (r.context_weights.size() !=
        static_cast<std::size_t>(r.context_tuple.size()))
      throw std::invalid_argument(
          "SparseRelevanceEnvConfig: context weights must match tuple");
  }
  oracle.validate();
}

double SparseRelevanceEnvConfig::lipschitz() const {
  double arm_norm = 0.0;
  for (double w : arm_weights) arm_norm += w * w;
  double worst_context = 0.0;
  for (const SparseRegion& r : regions) {
    double n = 0.0;
    for (double w : r.context_weights) n += w * w;
    worst_context = std::max(worst_context, n);
  }
  return std::sqrt(worst_context) + std::sqrt(arm_norm);
}

SparseRelevanceEnvironment::SparseRelevanceEnvironment(
    SparseRelevanceEnvConfig config)
    : config_(std::move(config)) {
  config_.validate();
  std::set<int> dims;
  for (const SparseRegion& r : config_.regions)
    dims.insert(r.context_tuple.begin(), r.context_tuple.end());
  declared_context_dims_ =
      DimensionTuple(std::vector<int>(dims.begin(), dims.end()));
}

const SparseRegion& SparseRelevanceEnvironment::region_for(
    const ArmVector& arm) const {
  if (config_.regions.size() == 1 || config_.arm_tuple.empty())
    return config_.regions.front();
  const double key =
      arm.values[static_cast<std::size_t>(config_.arm_tuple[0])];
  for (const SparseRegion& r : config_.regions)
    if (key >= r.arm_lo && key <= r.arm_hi) return r;
  return config_.regions.back();
}

ContextVector SparseRelevanceEnvironment::sample_context(
    RngStream& rng) const {
  ContextVector x;
  x.values.resize(static_cast<std::size_t>(config_.context_dim));
  for (double& v : x.values) v = rng.uniform01();
  return x;
}

double SparseRelevanceEnvironment::expected_reward(
    const ContextVector& context, const ArmVector& arm) const {
  const SparseRegion& region = region_for(arm);
  double value = config_.bias;
  for (int i = 0; i < region.context_tuple.size(); ++i) {
    value += region.context_weights[static_cast<std::size_t>(i)] *
             context.values[static_cast<std::size_t>(region.context_tuple[i])];
  }
  for (int i = 0; i < config_.arm_tuple.size(); ++i) {
    value += config_.arm_weights[static_cast<std::size_t>(i)] *
             arm.values[static_cast<std::size_t>(config_.arm_tuple[i])];
  }
  if (value < 0.0) return 0.0;
  if (value > 1.0) return 1.0;
  return value;
}

double SparseRelevanceEnvironment::sample_reward(const ContextVector& context,
                                                 const ArmVector& arm,
                                                 RngStream& rng) const {
  return rng.bernoulli(expected_reward(context, arm)) ? 1.0 : 0.0;
}

double SparseRelevanceEnvironment::oracle_best(
    const ContextVector& context) const {
  if (config_.arm_tuple.empty()) {
    ArmVector arm;
    arm.values.assign(static_cast<std::size_t>(config_.arm_dim), 0.5);
    return expected_reward(context, arm);
  }
  ArmVector scratch;
  scratch.values.assign(static_cast<std::size_t>(config_.arm_dim), 0.5);
  return grid_scan_max(config_.arm_dim, config_.arm_tuple.dims(),
                       config_.oracle.resolution, 0.5, 1.0,
                       [&](std::span<const double> arm_values) {
                         std::copy(arm_values.begin(), arm_values.end(),
                                   scratch.values.begin());
                         return expected_reward(context, scratch);
                       });
}

}  // namespace cmabrl
