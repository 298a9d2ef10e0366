#include "cmabrl/driver.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "cmabrl/emit.hpp"
#include "cmabrl/version.hpp"

namespace cmabrl {

namespace {

ExperimentOptions options_from(const ExperimentSpec& spec,
                               const DriverOverrides& overrides) {
  ExperimentOptions opt;
  opt.horizon = spec.horizon;
  opt.repetitions = overrides.repetitions.value_or(spec.repetitions);
  opt.base_seed = overrides.seed.value_or(spec.base_seed);
  opt.stride = spec.stride;
  opt.max_workers = overrides.max_workers;
  return opt;
}

}  // namespace

void run_to_directory(const ExperimentSpec& spec,
                      const std::filesystem::path& out_dir,
                      const DriverOverrides& overrides) {
  std::filesystem::create_directories(out_dir);
  const auto env = make_environment(spec);
  const ExperimentOptions opt = options_from(spec, overrides);

  std::vector<std::pair<std::string, AggregateResult>> results;
  results.reserve(spec.algorithms.size());
  for (const std::string& algorithm : spec.algorithms) {
    const double multiplier = spec.multiplier_for(algorithm);
    AggregateResult result = run_experiment(
        [&](long horizon) {
          return make_policy(spec, algorithm, horizon, multiplier);
        },
        *env, opt);
    write_result_csv(out_dir / (algorithm + ".csv"), result);
    results.emplace_back(algorithm, std::move(result));
  }

  std::vector<std::pair<std::string, const AggregateResult*>> views;
  views.reserve(results.size());
  for (const auto& [name, result] : results) views.emplace_back(name, &result);
  write_summary(out_dir / "summary.txt", spec.raw, opt.base_seed,
                opt.repetitions, spec.effective_stride(), views);
}

GridSearchReport grid_search_to_directory(
    const ExperimentSpec& spec, const std::vector<double>& multipliers,
    const std::filesystem::path& out_dir, const DriverOverrides& overrides) {
  std::filesystem::create_directories(out_dir);
  const auto env = make_environment(spec);
  const ExperimentOptions opt = options_from(spec, overrides);

  std::vector<std::string> algorithms;
  for (const std::string& a : spec.algorithms)
    if (is_learning_algorithm(a)) algorithms.push_back(a);
  if (algorithms.empty())
    throw std::invalid_argument(
        "grid-search: no learning algorithm configured");

  const GridSearchReport report = grid_search(
      algorithms,
      [&](const std::string& algorithm, long horizon, double multiplier) {
        return make_policy(spec, algorithm, horizon, multiplier);
      },
      *env, opt, multipliers);

  write_grid_report_csv(out_dir / "grid_search.csv", report);

  std::ofstream out(out_dir / "grid_summary.txt", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write grid_summary.txt");
  out << "cmabrl " << kVersion << "\n\n[config]\n";
  for (const auto& [key, value] : spec.raw) out << key << " = " << value
                                                << "\n";
  out << "\n[best multipliers]\n";
  for (const auto& [algorithm, multiplier] : report.best_multiplier)
    out << algorithm << " = " << multiplier << "\n";
  return report;
}

void sweep_to_directory(const ExperimentSpec& spec,
                        const std::vector<long>& horizons,
                        const std::filesystem::path& out_dir,
                        const DriverOverrides& overrides) {
  std::filesystem::create_directories(out_dir);
  const auto env = make_environment(spec);
  const ExperimentOptions base = options_from(spec, overrides);

  std::ofstream summary(out_dir / "sweep_summary.txt", std::ios::binary);
  if (!summary) throw std::runtime_error("cannot write sweep_summary.txt");
  summary << "cmabrl " << kVersion << "\n\n[config]\n";
  for (const auto& [key, value] : spec.raw)
    summary << key << " = " << value << "\n";
  summary << "\n[final mean cumulative regret]\n";

  for (const std::string& algorithm : spec.algorithms) {
    const double multiplier = spec.multiplier_for(algorithm);
    const auto per_horizon = horizon_sweep(
        [&](long horizon) {
          return make_policy(spec, algorithm, horizon, multiplier);
        },
        *env, base, horizons);
    for (const auto& [horizon, result] : per_horizon) {
      write_result_csv(
          out_dir / (algorithm + "_T" + std::to_string(horizon) + ".csv"),
          result);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g",
                    result.final_mean_cum_regret());
      summary << algorithm << ".T" << horizon << " = " << buf << "\n";
    }
  }
}

}  // namespace cmabrl
