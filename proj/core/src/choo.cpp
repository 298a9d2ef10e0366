#include "cmabrl/choo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cmabrl {

void ChooConfig::validate() const {
  if (context_dim < 1 || arm_dim < 1)
    throw std::invalid_argument("ChooConfig: dimensions must be positive");
  if (horizon < 1) throw std::invalid_argument("ChooConfig: horizon >= 1");
  if (!(confidence_multiplier > 0.0))
    throw std::invalid_argument("ChooConfig: confidence_multiplier > 0");
  if (smoothness_scale < 0.0)
    throw std::invalid_argument("ChooConfig: smoothness_scale >= 0");
  const double rho = effective_shrink_rate();
  if (!(rho > 0.0 && rho < 1.0))
    throw std::invalid_argument("ChooConfig: shrink rate in (0,1)");
  if (depth_cap < 0)
    throw std::invalid_argument("ChooConfig: depth_cap >= 0");
}

double ChooConfig::effective_smoothness_scale() const {
  if (smoothness_scale > 0.0) return smoothness_scale;
  return 2.0 * std::sqrt(static_cast<double>(context_dim + arm_dim));
}

double ChooConfig::effective_shrink_rate() const {
  if (shrink_rate > 0.0) return shrink_rate;
  return std::pow(2.0, -1.0 / static_cast<double>(context_dim + arm_dim));
}

int ChooConfig::effective_depth_cap() const {
  if (depth_cap > 0) return depth_cap;
  const double rho = effective_shrink_rate();
  return static_cast<int>(std::ceil(std::log(static_cast<double>(horizon)) /
                                    (2.0 * std::log(1.0 / rho))));
}

ChooPolicy::ChooPolicy(ChooConfig config) : config_(config) {
  config_.validate();
  v1_ = config_.effective_smoothness_scale();
  rho_ = config_.effective_shrink_rate();
  depth_cap_ = config_.effective_depth_cap();
  reset(0);
}

void ChooPolicy::reset(std::uint64_t seed) {
  const double inf = std::numeric_limits<double>::infinity();
  nodes_.clear();
  Node root;
  root.depth = 0;
  root.lo.assign(
      static_cast<std::size_t>(config_.context_dim + config_.arm_dim), 0.0);
  root.hi.assign(
      static_cast<std::size_t>(config_.context_dim + config_.arm_dim), 1.0);
  root.ucb = inf;
  root.bvalue = inf;
  nodes_.push_back(std::move(root));
  path_.clear();
  rng_.reseed(seed, 0);
  rounds_played_ = 0;
  pending_learn_ = false;
}

bool ChooPolicy::region_contains_context(const Node& node,
                                         const ContextVector& context) const {
  for (int i = 0; i < config_.context_dim; ++i) {
    const double v = context.values[static_cast<std::size_t>(i)];
    const double lo = node.lo[static_cast<std::size_t>(i)];
    const double hi = node.hi[static_cast<std::size_t>(i)];
    // Half-open boxes; the top face of the unit box stays closed.
    const bool inside = v >= lo && (v < hi || (hi == 1.0 && v <= 1.0));
    if (!inside) return false;
  }
  return true;
}

int ChooPolicy::create_child(int parent, int side) {
  Node& p = nodes_[static_cast<std::size_t>(parent)];
  if (p.split_dim < 0) {
    // Longest edge, lowest dimension on ties.
    int dim = 0;
    double longest = -1.0;
    for (std::size_t i = 0; i < p.lo.size(); ++i) {
      const double edge = p.hi[i] - p.lo[i];
      if (edge > longest) {
        longest = edge;
        dim = static_cast<int>(i);
      }
    }
    p.split_dim = dim;
    p.split_at = 0.5 * (p.lo[static_cast<std::size_t>(dim)] +
                        p.hi[static_cast<std::size_t>(dim)]);
  }
  Node child;
  child.depth = p.depth + 1;
  child.lo = p.lo;
  child.hi = p.hi;
  if (side == 0)
    child.hi[static_cast<std::size_t>(p.split_dim)] = p.split_at;
  else
    child.lo[static_cast<std::size_t>(p.split_dim)] = p.split_at;
  child.ucb = std::numeric_limits<double>::infinity();
  child.bvalue = child.ucb;
  nodes_.push_back(std::move(child));
  const int id = static_cast<int>(nodes_.size()) - 1;
  nodes_[static_cast<std::size_t>(parent)].children[side] = id;
  return id;
}

ArmVector ChooPolicy::choose(const ContextVector& context) {
  validate_unit_box(context.values, config_.context_dim, "context");
  path_.clear();
  int current = 0;
  bool created = false;

  while (true) {
    path_.push_back(current);
    Node& node = nodes_[static_cast<std::size_t>(current)];
    if (node.depth >= depth_cap_) break;

    if (node.children[0] >= 0 && node.children[1] >= 0) {
      const Node& a = nodes_[static_cast<std::size_t>(node.children[0])];
      const Node& b = nodes_[static_cast<std::size_t>(node.children[1])];
      const bool a_ok = region_contains_context(a, context);
      const bool b_ok = region_contains_context(b, context);
      if (a_ok && b_ok) {
        if (a.bvalue > b.bvalue)
          current = node.children[0];
        else if (b.bvalue > a.bvalue)
          current = node.children[1];
        else
          current = node.children[rng_.uniform_int(2)];
      } else if (a_ok) {
        current = node.children[0];
      } else if (b_ok) {
        current = node.children[1];
      } else {
        // Unreachable for well-formed trees; keep descending left.
        current = node.children[0];
      }
      continue;
    }

    int side;
    if (node.children[0] >= 0)
      side = 1;
    else if (node.children[1] >= 0)
      side = 0;
    else
      side = static_cast<int>(rng_.uniform_int(2));
    current = create_child(current, side);
    path_.push_back(current);
    created = true;
    break;
  }

  const Node& leaf = nodes_[static_cast<std::size_t>(path_.back())];
  ArmVector arm;
  arm.values.assign(static_cast<std::size_t>(config_.arm_dim), 0.0);
  for (int i = 0; i < config_.arm_dim; ++i) {
    const auto j = static_cast<std::size_t>(config_.context_dim + i);
    arm.values[static_cast<std::size_t>(i)] =
        created ? rng_.uniform(leaf.lo[j], leaf.hi[j])
                : 0.5 * (leaf.lo[j] + leaf.hi[j]);
  }
  last_arm_ = arm;
  pending_learn_ = true;
  return arm;
}

void ChooPolicy::refresh_ucb(Node& node) const {
  const double t = static_cast<double>(rounds_played_);
  node.ucb = node.mean +
             config_.confidence_multiplier *
                 std::sqrt(2.0 * std::log(t) /
                           static_cast<double>(node.visits)) +
             v1_ * std::pow(rho_, node.depth);
}

void ChooPolicy::learn(const ContextVector& context, const ArmVector& arm,
                       double reward) {
  (void)context;
  if (!pending_learn_) throw std::logic_error("ChooPolicy::learn before choose");
  if (arm.values != last_arm_.values)
    throw std::logic_error(
        "ChooPolicy::learn: arm differs from the last chosen arm");

  ++rounds_played_;
  for (int id : path_) {
    Node& node = nodes_[static_cast<std::size_t>(id)];
    ++node.visits;
    node.mean += (reward - node.mean) / static_cast<double>(node.visits);
  }
  for (int id : path_) refresh_ucb(nodes_[static_cast<std::size_t>(id)]);

  // B backup, leaf to root along the played path.
  for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
    Node& node = nodes_[static_cast<std::size_t>(*it)];
    if (node.children[0] < 0 && node.children[1] < 0) {
      node.bvalue = node.ucb;
      continue;
    }
    double best_child = -std::numeric_limits<double>::infinity();
    for (int child : node.children) {
      if (child >= 0)
        best_child = std::max(
            best_child, nodes_[static_cast<std::size_t>(child)].bvalue);
    }
    node.bvalue = std::min(node.ucb, best_child);
  }
  pending_learn_ = false;
}

}  // namespace cmabrl
