#include "cmabrl/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace cmabrl {

namespace {

void check_dims(const Policy& policy, const Environment& environment) {
  if (policy.context_dim() != environment.context_dim() ||
      policy.arm_dim() != environment.arm_dim())
    throw std::invalid_argument(
        "run_episode: policy and environment dimensions differ");
}

}  // namespace

Trajectory run_episode(Policy& policy, const Environment& environment,
                       const EpisodeOptions& options) {
  if (options.horizon < 1)
    throw std::invalid_argument("run_episode: horizon >= 1");
  check_dims(policy, environment);
  const long stride =
      options.stride > 0 ? options.stride : default_stride(options.horizon);

  const auto start = std::chrono::steady_clock::now();
  policy.reset(options.seed);
  RngStream env_rng(options.seed, 1);

  Trajectory traj;
  traj.seed = options.seed;
  const auto expected_records = static_cast<std::size_t>(
      options.horizon / stride + (options.horizon % stride != 0 ? 1 : 0));
  traj.rounds.reserve(expected_records);
  traj.cum_reward.reserve(expected_records);
  traj.cum_expected.reserve(expected_records);
  traj.cum_regret.reserve(expected_records);

  double cum_reward = 0.0, cum_expected = 0.0, cum_regret = 0.0;
  for (long t = 1; t <= options.horizon; ++t) {
    const ContextVector x = environment.sample_context(env_rng);
    const ArmVector arm = policy.choose(x);
    const double expected = environment.expected_reward(x, arm);
    const double reward = environment.sample_reward(x, arm, env_rng);
    policy.learn(x, arm, reward);
    const double oracle = environment.oracle_best(x);
    cum_reward += reward;
    cum_expected += expected;
    cum_regret += oracle - expected;
    if (t % stride == 0 || t == options.horizon) {
      traj.rounds.push_back(t);
      traj.cum_reward.push_back(cum_reward);
      traj.cum_expected.push_back(cum_expected);
      traj.cum_regret.push_back(cum_regret);
    }
  }
  traj.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return traj;
}

std::vector<RoundRecord> run_episode_records(Policy& policy,
                                             const Environment& environment,
                                             const EpisodeOptions& options) {
  if (options.horizon < 1)
    throw std::invalid_argument("run_episode_records: horizon >= 1");
  check_dims(policy, environment);
  policy.reset(options.seed);
  RngStream env_rng(options.seed, 1);

  std::vector<RoundRecord> records;
  records.reserve(static_cast<std::size_t>(options.horizon));
  for (long t = 1; t <= options.horizon; ++t) {
    RoundRecord rec;
    rec.round = t;
    rec.context = environment.sample_context(env_rng);
    rec.arm = policy.choose(rec.context);
    rec.expected_reward = environment.expected_reward(rec.context, rec.arm);
    rec.reward = environment.sample_reward(rec.context, rec.arm, env_rng);
    policy.learn(rec.context, rec.arm, rec.reward);
    rec.oracle_reward = environment.oracle_best(rec.context);
    records.push_back(std::move(rec));
  }
  return records;
}

AggregateResult aggregate(std::span<const Trajectory> trajectories) {
  if (trajectories.empty())
    throw std::invalid_argument("aggregate: no trajectories");
  const std::size_t points = trajectories.front().rounds.size();
  for (const Trajectory& t : trajectories)
    if (t.rounds != trajectories.front().rounds)
      throw std::invalid_argument(
          "aggregate: inconsistent recording rounds across repetitions");

  const auto n = static_cast<double>(trajectories.size());
  AggregateResult agg;
  agg.rounds = trajectories.front().rounds;
  agg.repetitions = static_cast<int>(trajectories.size());
  agg.mean_cum_reward.resize(points);
  agg.std_cum_reward.resize(points);
  agg.mean_cum_regret.resize(points);
  agg.std_cum_regret.resize(points);
  agg.mean_cum_expected.resize(points);

  auto reduce = [&](auto series_of, std::vector<double>& mean_out,
                    std::vector<double>* std_out) {
    for (std::size_t i = 0; i < points; ++i) {
      double mean = 0.0;
      for (const Trajectory& t : trajectories) mean += series_of(t)[i];
      mean /= n;
      mean_out[i] = mean;
      if (std_out) {
        double ss = 0.0;
        for (const Trajectory& t : trajectories) {
          const double d = series_of(t)[i] - mean;
          ss += d * d;
        }
        (*std_out)[i] =
            trajectories.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
      }
    }
  };
  reduce([](const Trajectory& t) -> const std::vector<double>& {
    return t.cum_reward;
  }, agg.mean_cum_reward, &agg.std_cum_reward);
  reduce([](const Trajectory& t) -> const std::vector<double>& {
    return t.cum_regret;
  }, agg.mean_cum_regret, &agg.std_cum_regret);
  reduce([](const Trajectory& t) -> const std::vector<double>& {
    return t.cum_expected;
  }, agg.mean_cum_expected, nullptr);
  return agg;
}

AggregateResult run_experiment(const PolicyFactory& make_policy,
                               const Environment& environment,
                               const ExperimentOptions& options) {
  if (options.repetitions < 1)
    throw std::invalid_argument("run_experiment: repetitions >= 1");
  const int workers = [&] {
    int w = options.max_workers > 0
                ? options.max_workers
                : static_cast<int>(std::thread::hardware_concurrency());
    if (w < 1) w = 1;
    return std::min(w, options.repetitions);
  }();

  std::vector<Trajectory> trajectories(
      static_cast<std::size_t>(options.repetitions));
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&](int worker_id) {
    for (int rep = worker_id; rep < options.repetitions; rep += workers) {
      try {
        auto policy = make_policy(options.horizon);
        EpisodeOptions ep;
        ep.horizon = options.horizon;
        ep.stride = options.stride;
        ep.seed = options.base_seed + static_cast<std::uint64_t>(rep);
        trajectories[static_cast<std::size_t>(rep)] =
            run_episode(*policy, environment, ep);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker, w);
    for (std::thread& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return aggregate(trajectories);
}

GridSearchReport grid_search(const std::vector<std::string>& algorithms,
                             const TunablePolicyFactory& make_policy,
                             const Environment& environment,
                             const ExperimentOptions& options,
                             const std::vector<double>& multipliers) {
  if (multipliers.empty())
    throw std::invalid_argument("grid_search: empty multiplier set");
  GridSearchReport report;
  for (const std::string& algorithm : algorithms) {
    double best_reward = -std::numeric_limits<double>::infinity();
    double best_multiplier = multipliers.front();
    for (double multiplier : multipliers) {
      const AggregateResult result = run_experiment(
          [&](long horizon) {
            return make_policy(algorithm, horizon, multiplier);
          },
          environment, options);
      const double final_reward = result.final_mean_cum_reward();
      report.rows.push_back({algorithm, multiplier, final_reward});
      if (final_reward > best_reward) {
        best_reward = final_reward;
        best_multiplier = multiplier;
      }
    }
    report.best_multiplier[algorithm] = best_multiplier;
  }
  return report;
}

std::vector<std::pair<long, AggregateResult>> horizon_sweep(
    const PolicyFactory& make_policy, const Environment& environment,
    const ExperimentOptions& base_options, std::vector<long> horizons) {
  std::sort(horizons.begin(), horizons.end());
  horizons.erase(std::unique(horizons.begin(), horizons.end()),
                 horizons.end());
  std::vector<std::pair<long, AggregateResult>> out;
  out.reserve(horizons.size());
  for (long horizon : horizons) {
    if (horizon < 1)
      throw std::invalid_argument("horizon_sweep: horizons must be positive");
    ExperimentOptions options = base_options;
    options.horizon = horizon;
    options.stride = 0;  // per-horizon default
    out.emplace_back(horizon,
                     run_experiment(make_policy, environment, options));
  }
  return out;
}

}  // namespace cmabrl
