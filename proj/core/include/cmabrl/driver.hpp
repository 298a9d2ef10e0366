#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "cmabrl/config_file.hpp"
#include "cmabrl/runner.hpp"

namespace cmabrl {

// Command-level overrides shared by the subcommands.
struct DriverOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> repetitions;
  int max_workers = 0;  // 0 -> hardware concurrency
};

// Runs every configured algorithm; writes <out>/<algorithm>.csv and
// <out>/summary.txt.
void run_to_directory(const ExperimentSpec& spec,
                      const std::filesystem::path& out_dir,
                      const DriverOverrides& overrides = {});

// Runs every configured learning algorithm across the multiplier set;
// writes <out>/grid_search.csv and <out>/grid_summary.txt.
GridSearchReport grid_search_to_directory(
    const ExperimentSpec& spec, const std::vector<double>& multipliers,
    const std::filesystem::path& out_dir,
    const DriverOverrides& overrides = {});

// Re-runs every configured algorithm per horizon; writes
// <out>/<algorithm>_T<horizon>.csv and <out>/sweep_summary.txt.
void sweep_to_directory(const ExperimentSpec& spec,
                        const std::vector<long>& horizons,
                        const std::filesystem::path& out_dir,
                        const DriverOverrides& overrides = {});

}  // namespace cmabrl
