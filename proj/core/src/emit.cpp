#include "cmabrl/emit.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "cmabrl/version.hpp"

namespace cmabrl {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write file: " + path.string());
  return out;
}

std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace

void write_result_csv(const std::filesystem::path& path,
                      const AggregateResult& result) {
  std::ofstream out = open_out(path);
  out << "round,mean_cum_reward,std_cum_reward,mean_cum_regret,"
         "std_cum_regret\n";
  for (std::size_t i = 0; i < result.rounds.size(); ++i) {
    out << result.rounds[i] << ',' << fmt(result.mean_cum_reward[i]) << ','
        << fmt(result.std_cum_reward[i]) << ','
        << fmt(result.mean_cum_regret[i]) << ','
        << fmt(result.std_cum_regret[i]) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_summary(
    const std::filesystem::path& path,
    const std::vector<std::pair<std::string, std::string>>& config_echo,
    std::uint64_t base_seed, int repetitions, long stride,
    const std::vector<std::pair<std::string, const AggregateResult*>>&
        results) {
  std::ofstream out = open_out(path);
  out << "cmabrl " << kVersion << "\n\n";
  out << "[config]\n";
  for (const auto& [key, value] : config_echo)
    out << key << " = " << value << "\n";
  out << "\n[run]\n";
  out << "seeds = " << base_seed << ".." << base_seed + repetitions - 1
      << "\n";
  out << "repetitions = " << repetitions << "\n";
  out << "stride = " << stride << "\n";
  out << "\n[results]\n";
  for (const auto& [label, result] : results) {
    out << label << ".final_round = " << result->rounds.back() << "\n";
    out << label << ".final_mean_cum_reward = "
        << fmt(result->final_mean_cum_reward()) << "\n";
    out << label << ".final_std_cum_reward = "
        << fmt(result->std_cum_reward.back()) << "\n";
    out << label << ".final_mean_cum_regret = "
        << fmt(result->final_mean_cum_regret()) << "\n";
    out << label << ".final_std_cum_regret = "
        << fmt(result->std_cum_regret.back()) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_grid_report_csv(const std::filesystem::path& path,
                           const GridSearchReport& report) {
  std::ofstream out = open_out(path);
  out << "algorithm,multiplier,final_mean_cum_reward\n";
  for (const GridSearchRow& row : report.rows) {
    out << row.algorithm << ',' << fmt(row.multiplier) << ','
        << fmt(row.final_mean_cum_reward) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace cmabrl
