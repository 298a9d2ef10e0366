#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "cmabrl/runner.hpp"
#include "cmabrl/trajectory.hpp"

namespace cmabrl {

// CSV with header round,mean_cum_reward,std_cum_reward,mean_cum_regret,
// std_cum_regret; one row per recorded round. Byte-identical across
// reruns with identical inputs.
void write_result_csv(const std::filesystem::path& path,
                      const AggregateResult& result);

// Plain-text summary: software version, every config key/value as given,
// effective stride, seed range, and final totals per entry. No
// timestamps, so reruns are byte-identical.
void write_summary(
    const std::filesystem::path& path,
    const std::vector<std::pair<std::string, std::string>>& config_echo,
    std::uint64_t base_seed, int repetitions, long stride,
    const std::vector<std::pair<std::string, const AggregateResult*>>&
        results);

void write_grid_report_csv(const std::filesystem::path& path,
                           const GridSearchReport& report);

}  // namespace cmabrl
