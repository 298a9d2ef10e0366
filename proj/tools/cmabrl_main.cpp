#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmabrl/driver.hpp"
#include "cmabrl/version.hpp"

namespace {

std::vector<double> parse_multipliers(const std::string& csv) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const std::string tok =
        csv.substr(start, comma == std::string::npos ? csv.size() - start
                                                     : comma - start);
    if (!tok.empty()) out.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty multiplier list");
  return out;
}

std::vector<long> parse_horizons(const std::string& csv) {
  std::vector<long> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const std::string tok =
        csv.substr(start, comma == std::string::npos ? csv.size() - start
                                                     : comma - start);
    if (!tok.empty()) out.push_back(std::stol(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty horizon list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contextual bandit experiment runner"};
  app.set_version_flag("--version", std::string("cmabrl ") +
                                        std::string(cmabrl::kVersion));
  app.require_subcommand(1);

  std::string config_path, out_dir, multipliers_csv, horizons_csv;
  long long seed = -1;
  int reps = -1;
  int workers = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "experiment config file")
        ->required();
    cmd->add_option("--out", out_dir, "output directory")->required();
    cmd->add_option("--seed", seed, "override base seed");
    cmd->add_option("--reps", reps, "override repetition count");
    cmd->add_option("--workers", workers,
                    "thread count for repetitions (0 = hardware)");
  };

  CLI::App* run = app.add_subcommand("run", "run the configured experiment");
  add_common(run);

  CLI::App* grid = app.add_subcommand(
      "grid-search", "search confidence multipliers per algorithm");
  add_common(grid);
  grid->add_option("--multipliers", multipliers_csv,
                   "comma-separated multipliers")
      ->required();

  CLI::App* sweep =
      app.add_subcommand("sweep", "re-run the experiment per horizon");
  add_common(sweep);
  sweep->add_option("--horizons", horizons_csv, "comma-separated horizons")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    cmabrl::ExperimentSpec spec = cmabrl::load_experiment_spec(config_path);
    cmabrl::DriverOverrides overrides;
    if (seed >= 0) overrides.seed = static_cast<std::uint64_t>(seed);
    if (reps > 0) overrides.repetitions = reps;
    overrides.max_workers = workers;

    if (run->parsed()) {
      cmabrl::run_to_directory(spec, out_dir, overrides);
    } else if (grid->parsed()) {
      const auto report = cmabrl::grid_search_to_directory(
          spec, parse_multipliers(multipliers_csv), out_dir, overrides);
      for (const auto& [algorithm, multiplier] : report.best_multiplier)
        std::cout << algorithm << " best multiplier " << multiplier << "\n";
    } else if (sweep->parsed()) {
      cmabrl::sweep_to_directory(spec, parse_horizons(horizons_csv), out_dir,
                                 overrides);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
