#include "cmabrl/cmab_rl.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "cmabrl/partition.hpp"

namespace cmabrl {

namespace {

// Saturating integer power, for exact ceil-root computation.
std::uint64_t ipow_saturating(std::uint64_t base, int exp) {
  std::uint64_t result = 1;
  const std::uint64_t cap = std::uint64_t(1) << 62;
  for (int i = 0; i < exp; ++i) {
    if (result > cap / (base == 0 ? 1 : base)) return cap;
    result *= base;
  }
  return result;
}

}  // namespace

long m_for_horizon(long horizon, int relevant_context_dims,
                   int relevant_arm_dims) {
  if (horizon < 1) throw std::domain_error("m_for_horizon: horizon >= 1");
  if (horizon > (1L << 40))
    throw std::domain_error("m_for_horizon: horizon too large");
  const int exponent = 2 + 2 * relevant_context_dims + relevant_arm_dims;
  const double guess =
      std::pow(static_cast<double>(horizon), 1.0 / exponent);
  std::uint64_t m = guess > 3.0 ? static_cast<std::uint64_t>(guess) - 2 : 1;
  while (ipow_saturating(m, exponent) < static_cast<std::uint64_t>(horizon))
    ++m;
  return static_cast<long>(m);
}

void CmabRlConfig::validate() const {
  if (context_dim < 1 || arm_dim < 1)
    throw std::invalid_argument("CmabRlConfig: dimensions must be positive");
  if (relevant_context_dims < 1 ||
      2 * relevant_context_dims > context_dim)
    throw std::invalid_argument(
        "CmabRlConfig: requires 1 <= relevant_context_dims and "
        "2 * relevant_context_dims <= context_dim");
  if (relevant_arm_dims < 1 || relevant_arm_dims > arm_dim)
    throw std::invalid_argument(
        "CmabRlConfig: requires 1 <= relevant_arm_dims <= arm_dim");
  if (horizon < 1) throw std::invalid_argument("CmabRlConfig: horizon >= 1");
  if (!(lipschitz > 0.0))
    throw std::invalid_argument("CmabRlConfig: lipschitz > 0");
  if (!(confidence_multiplier > 0.0))
    throw std::invalid_argument("CmabRlConfig: confidence_multiplier > 0");
  if (partition_number < 0)
    throw std::invalid_argument("CmabRlConfig: partition_number >= 0");
}

int CmabRlConfig::effective_partition_number() const {
  if (partition_number > 0) return partition_number;
  return static_cast<int>(
      m_for_horizon(horizon, relevant_context_dims, relevant_arm_dims));
}

CmabRlPolicy::CmabRlPolicy(CmabRlConfig config) : config_(config) {
  config_.validate();
  m_ = config_.effective_partition_number();
  arms_ = generate_arms(config_.arm_dim, config_.relevant_arm_dims, m_);
  rebuild_catalogs();
  reset(0);
}

void CmabRlPolicy::rebuild_catalogs() {
  const int dx = config_.context_dim;
  const int rel = config_.relevant_context_dims;
  candidate_tuples_ = enumerate_tuples(dx, rel);
  partition_tuples_ = enumerate_tuples(dx, 2 * rel);

  std::uint64_t cells_per_tuple = 1;
  for (int i = 0; i < 2 * rel; ++i)
    cells_per_tuple *= static_cast<std::uint64_t>(m_);
  stats_ = StatsStore(arms_.size(),
                      static_cast<int>(partition_tuples_.size()),
                      cells_per_tuple);

  supertuple_ranks_.assign(candidate_tuples_.size(), {});
  for (std::size_t iv = 0; iv < candidate_tuples_.size(); ++iv) {
    for (std::size_t iw = 0; iw < partition_tuples_.size(); ++iw) {
      if (partition_tuples_[iw].contains_all(candidate_tuples_[iv]))
        supertuple_ranks_[iv].push_back(static_cast<int>(iw));
    }
  }

  relevance_threshold_ =
      2.0 * config_.lipschitz * std::sqrt(config_.relevant_context_dims) / m_;
  // Number of partition tuples containing a fixed dimension.
  const double tuples_containing_dim = static_cast<double>(
      binomial(dx - 1, 2 * rel - 1));
  log_constant_ =
      2.0 + 4.0 * std::log(2.0 * arms_.size() * tuples_containing_dim *
                           std::pow(static_cast<double>(m_), 2.0 * rel) *
                           std::pow(static_cast<double>(config_.horizon),
                                    1.5));

  current_cells_.assign(partition_tuples_.size(), 0);
  scratch_mean_.assign(partition_tuples_.size(), 0.0);
  scratch_uncertainty_.assign(partition_tuples_.size(), 0.0);
  scratch_count_.assign(partition_tuples_.size(), 0);
}

void CmabRlPolicy::reset(std::uint64_t seed) {
  stats_.clear();
  rng_.reseed(seed, 0);
  selection_counts_.assign(static_cast<std::size_t>(arms_.size()), 0);
  rounds_played_ = 0;
  last_arm_ = -1;
  reads_last_round_ = 0;
  decision_ = RoundDecision{};
}

void CmabRlPolicy::restrict_arms(const std::vector<ArmVector>& allowed) {
  arms_ = restrict_to_finite(arms_, allowed);
  rebuild_catalogs();
  reset(0);
}

int CmabRlPolicy::pick_uniform(const std::vector<int>& options) {
  if (options.size() == 1) return options.front();
  return options[static_cast<std::size_t>(
      rng_.uniform_int(options.size()))];
}

ArmVector CmabRlPolicy::choose(const ContextVector& context) {
  validate_unit_box(context.values, config_.context_dim, "context");
  const std::uint64_t reads_before = stats_.reads();
  const long round = rounds_played_ + 1;
  const int arm_count = arms_.size();
  const int tuple_count = static_cast<int>(partition_tuples_.size());
  const double inf = std::numeric_limits<double>::infinity();

  for (int iw = 0; iw < tuple_count; ++iw) {
    current_cells_[static_cast<std::size_t>(iw)] = linear_cell_rank(
        context, partition_tuples_[static_cast<std::size_t>(iw)], m_);
  }

  decision_.ucb.assign(static_cast<std::size_t>(arm_count), 0.0);
  decision_.aggregate_mean.assign(static_cast<std::size_t>(arm_count), 0.0);
  decision_.max_uncertainty.assign(static_cast<std::size_t>(arm_count), 0.0);
  decision_.estimated_tuple_rank.assign(static_cast<std::size_t>(arm_count),
                                        -1);

  double best_ucb = -inf;
  scratch_ties_.clear();

  for (int y = 0; y < arm_count; ++y) {
    // Current-round view of this arm's statistics, one read per partition
    // tuple.
    for (int iw = 0; iw < tuple_count; ++iw) {
      const CellStats& cell = stats_.get(
          y, iw, current_cells_[static_cast<std::size_t>(iw)]);
      scratch_mean_[static_cast<std::size_t>(iw)] = cell.mean;
      scratch_count_[static_cast<std::size_t>(iw)] = cell.count;
      scratch_uncertainty_[static_cast<std::size_t>(iw)] = uncertainty(
          cell.count, log_constant_, config_.confidence_multiplier);
    }

    // Relevance test: a candidate tuple survives when every pair of its
    // supertuples has sample means within the joint uncertainty.
    scratch_candidates_.clear();
    for (std::size_t iv = 0; iv < candidate_tuples_.size(); ++iv) {
      const std::vector<int>& supers = supertuple_ranks_[iv];
      bool ok = true;
      for (std::size_t i = 0; i + 1 < supers.size() && ok; ++i) {
        const auto si = static_cast<std::size_t>(supers[i]);
        if (scratch_uncertainty_[si] == inf) continue;
        for (std::size_t j = i + 1; j < supers.size(); ++j) {
          const auto sj = static_cast<std::size_t>(supers[j]);
          if (scratch_uncertainty_[sj] == inf) continue;
          const double gap =
              std::abs(scratch_mean_[si] - scratch_mean_[sj]);
          if (gap > relevance_threshold_ + scratch_uncertainty_[si] +
                        scratch_uncertainty_[sj]) {
            ok = false;
            break;
          }
        }
      }
      if (ok) scratch_candidates_.push_back(static_cast<int>(iv));
    }
    if (relevance_observer_)
      relevance_observer_(round, y, scratch_candidates_);

    // Estimated relevant tuple: least variation among survivors, uniform
    // over the full catalog when none survive.
    int chosen_tuple;
    if (scratch_candidates_.empty()) {
      chosen_tuple = static_cast<int>(
          rng_.uniform_int(candidate_tuples_.size()));
    } else {
      double best_var = inf;
      std::vector<int>& var_ties = scratch_var_ties_;
      var_ties.clear();
      for (int iv : scratch_candidates_) {
        const std::vector<int>& supers =
            supertuple_ranks_[static_cast<std::size_t>(iv)];
        double lo = inf, hi = -inf;
        for (int iw : supers) {
          const double mean = scratch_mean_[static_cast<std::size_t>(iw)];
          lo = std::min(lo, mean);
          hi = std::max(hi, mean);
        }
        const double variation = supers.size() < 2 ? 0.0 : hi - lo;
        if (variation < best_var) {
          best_var = variation;
          var_ties.clear();
          var_ties.push_back(iv);
        } else if (variation == best_var) {
          var_ties.push_back(iv);
        }
      }
      chosen_tuple = pick_uniform(var_ties);
    }

    // Count-weighted aggregate of the chosen tuple's supertuple means.
    double weighted_sum = 0.0;
    std::int64_t total_count = 0;
    for (int iw :
         supertuple_ranks_[static_cast<std::size_t>(chosen_tuple)]) {
      const auto si = static_cast<std::size_t>(iw);
      weighted_sum +=
          scratch_mean_[si] * static_cast<double>(scratch_count_[si]);
      total_count += scratch_count_[si];
    }
    const double aggregate =
        total_count > 0 ? weighted_sum / static_cast<double>(total_count)
                        : 0.0;

    // Highest-uncertainty partition tuple, ties random.
    double max_u = -inf;
    std::vector<int>& u_ties = scratch_u_ties_;
    u_ties.clear();
    for (int iw = 0; iw < tuple_count; ++iw) {
      const double u = scratch_uncertainty_[static_cast<std::size_t>(iw)];
      if (u > max_u) {
        max_u = u;
        u_ties.clear();
        u_ties.push_back(iw);
      } else if (u == max_u) {
        u_ties.push_back(iw);
      }
    }
    pick_uniform(u_ties);  // tie draw consumed even though only u matters

    const double ucb = aggregate + 5.0 * max_u;
    decision_.ucb[static_cast<std::size_t>(y)] = ucb;
    decision_.aggregate_mean[static_cast<std::size_t>(y)] = aggregate;
    decision_.max_uncertainty[static_cast<std::size_t>(y)] = max_u;
    decision_.estimated_tuple_rank[static_cast<std::size_t>(y)] =
        chosen_tuple;

    if (ucb > best_ucb) {
      best_ucb = ucb;
      scratch_ties_.clear();
      scratch_ties_.push_back(y);
    } else if (ucb == best_ucb) {
      scratch_ties_.push_back(y);
    }
  }

  last_arm_ = pick_uniform(scratch_ties_);
  decision_.selected_arm = last_arm_;
  reads_last_round_ = stats_.reads() - reads_before;
  return arms_.arms[static_cast<std::size_t>(last_arm_)];
}

void CmabRlPolicy::learn(const ContextVector& context, const ArmVector& arm,
                         double reward) {
  if (last_arm_ < 0)
    throw std::logic_error("CmabRlPolicy::learn before choose");
  if (arm.values != arms_.arms[static_cast<std::size_t>(last_arm_)].values)
    throw std::logic_error(
        "CmabRlPolicy::learn: arm differs from the last chosen arm");
  for (int iw = 0; iw < static_cast<int>(partition_tuples_.size()); ++iw) {
    const std::uint64_t cell = linear_cell_rank(
        context, partition_tuples_[static_cast<std::size_t>(iw)], m_);
    stats_.update(last_arm_, iw, cell, reward);
  }
  ++selection_counts_[static_cast<std::size_t>(last_arm_)];
  ++rounds_played_;
  last_arm_ = -1;
}

void CmabRlPolicy::write_snapshot(std::ostream& out) const {
  out << "cmabrl-snapshot v1\n";
  out << "arms " << arms_.size() << " partition_tuples "
      << partition_tuples_.size() << " m " << m_ << "\n";
  const int tuple_size = 2 * config_.relevant_context_dims;
  char buf[64];
  stats_.for_each_sorted([&](int arm, int tuple_rank, std::uint64_t cell,
                             const CellStats& stats) {
    out << arm << ' ' << tuple_rank << ' ';
    // Cell rank back to interval indices, first dimension most significant.
    std::vector<int> indices(static_cast<std::size_t>(tuple_size), 0);
    std::uint64_t rest = cell;
    for (int i = tuple_size - 1; i >= 0; --i) {
      indices[static_cast<std::size_t>(i)] = static_cast<int>(
          rest % static_cast<std::uint64_t>(m_));
      rest /= static_cast<std::uint64_t>(m_);
    }
    for (int i = 0; i < tuple_size; ++i) {
      if (i) out << ',';
      out << indices[static_cast<std::size_t>(i)];
    }
    std::snprintf(buf, sizeof buf, " %lld %.17g",
                  static_cast<long long>(stats.count), stats.mean);
    out << buf << "\n";
  });
}

}  // namespace cmabrl
