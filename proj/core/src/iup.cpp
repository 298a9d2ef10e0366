#include "cmabrl/iup.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cmabrl/partition.hpp"

namespace cmabrl {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp, const char* what) {
  std::uint64_t result = 1;
  const std::uint64_t cap = std::uint64_t(1) << 62;
  for (int i = 0; i < exp; ++i) {
    if (result > cap / base)
      throw std::invalid_argument(std::string(what) +
                                  ": partition grid too large");
    result *= base;
  }
  return result;
}

}  // namespace

long iup_m(long horizon, int context_dim, int arm_dim) {
  if (horizon < 1) throw std::domain_error("iup_m: horizon >= 1");
  if (horizon > (1L << 40))
    throw std::domain_error("iup_m: horizon too large");
  const int exponent = 2 + context_dim + arm_dim;
  const double guess = std::pow(static_cast<double>(horizon), 1.0 / exponent);
  std::uint64_t m = guess > 3.0 ? static_cast<std::uint64_t>(guess) - 2 : 1;
  auto ipow = [&](std::uint64_t b) {
    std::uint64_t r = 1;
    const std::uint64_t cap = std::uint64_t(1) << 62;
    for (int i = 0; i < exponent; ++i) {
      if (r > cap / b) return cap;
      r *= b;
    }
    return r;
  };
  while (ipow(m) < static_cast<std::uint64_t>(horizon)) ++m;
  return static_cast<long>(m);
}

void IupConfig::validate() const {
  if (context_dim < 1 || arm_dim < 1)
    throw std::invalid_argument("IupConfig: dimensions must be positive");
  if (horizon < 1) throw std::invalid_argument("IupConfig: horizon >= 1");
  if (!(confidence_multiplier > 0.0))
    throw std::invalid_argument("IupConfig: confidence_multiplier > 0");
  if (partition_number < 0)
    throw std::invalid_argument("IupConfig: partition_number >= 0");
}

int IupConfig::effective_partition_number() const {
  if (partition_number > 0) return partition_number;
  return static_cast<int>(iup_m(horizon, context_dim, arm_dim));
}

IupPolicy::IupPolicy(IupConfig config) : config_(config) {
  config_.validate();
  m_ = config_.effective_partition_number();
  checked_pow(static_cast<std::uint64_t>(m_),
              config_.context_dim + config_.arm_dim, "IupPolicy");
  arm_cell_count_ = checked_pow(static_cast<std::uint64_t>(m_),
                                config_.arm_dim, "IupPolicy");
  if (arm_cell_count_ > (std::uint64_t(1) << 24))
    throw std::invalid_argument(
        "IupPolicy: per-round candidate set too large");
  reset(0);
}

void IupPolicy::reset(std::uint64_t seed) {
  cells_.clear();
  rng_.reseed(seed, 0);
  rounds_played_ = 0;
  pending_learn_ = false;
}

ArmVector IupPolicy::choose(const ContextVector& context) {
  validate_unit_box(context.values, config_.context_dim, "context");
  const double inf = std::numeric_limits<double>::infinity();
  const long t = rounds_played_ + 1;
  const double exploration = 2.0 * std::log(static_cast<double>(t));

  std::uint64_t context_base = 0;
  for (double v : context.values) {
    context_base = context_base * static_cast<std::uint64_t>(m_) +
                   static_cast<std::uint64_t>(cell_index(v, m_));
  }
  context_base *= arm_cell_count_;

  double best = -inf;
  scratch_ties_.clear();
  for (std::uint64_t arm_cell = 0; arm_cell < arm_cell_count_; ++arm_cell) {
    const auto it = cells_.find(context_base + arm_cell);
    double index;
    if (it == cells_.end() || it->second.count == 0) {
      index = inf;
    } else {
      index = it->second.mean +
              config_.confidence_multiplier *
                  std::sqrt(exploration /
                            static_cast<double>(it->second.count));
    }
    if (index > best) {
      best = index;
      scratch_ties_.clear();
      scratch_ties_.push_back(arm_cell);
    } else if (index == best) {
      scratch_ties_.push_back(arm_cell);
    }
  }

  std::uint64_t chosen = scratch_ties_.size() == 1
                             ? scratch_ties_.front()
                             : scratch_ties_[static_cast<std::size_t>(
                                   rng_.uniform_int(scratch_ties_.size()))];
  last_cell_ = context_base + chosen;

  // Center of the chosen cube's arm projection, last arm dimension is the
  // fastest-varying digit.
  ArmVector arm;
  arm.values.assign(static_cast<std::size_t>(config_.arm_dim), 0.0);
  for (int i = config_.arm_dim - 1; i >= 0; --i) {
    const auto digit = chosen % static_cast<std::uint64_t>(m_);
    chosen /= static_cast<std::uint64_t>(m_);
    arm.values[static_cast<std::size_t>(i)] =
        (static_cast<double>(digit) + 0.5) / m_;
  }
  last_arm_ = arm;
  pending_learn_ = true;
  return arm;
}

void IupPolicy::learn(const ContextVector& context, const ArmVector& arm,
                      double reward) {
  (void)context;
  if (!pending_learn_)
    throw std::logic_error("IupPolicy::learn before choose");
  if (arm.values != last_arm_.values)
    throw std::logic_error(
        "IupPolicy::learn: arm differs from the last chosen arm");
  stats_update(cells_[last_cell_], reward);
  ++rounds_played_;
  pending_learn_ = false;
}

}  // namespace cmabrl
