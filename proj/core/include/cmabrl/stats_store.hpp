#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace cmabrl {

// Count and sample mean of rewards pooled in one partition cell.
// count == 0 always pairs with mean == 0.
struct CellStats {
  std::int64_t count = 0;
  double mean = 0.0;
};

inline void stats_update(CellStats& stats, double reward) {
  stats.mean = (stats.mean * static_cast<double>(stats.count) + reward) /
               static_cast<double>(stats.count + 1);
  ++stats.count;
}

// Lazily allocated map from (arm id, partition-tuple rank, cell rank) to
// CellStats. Absent entries read as (0, 0); storage grows only on update,
// so entries never exceed the number of updates performed. Reads are
// counted for the per-round work instrumentation.
class StatsStore {
 public:
  StatsStore() = default;
  StatsStore(int max_arms, int max_tuple_ranks, std::uint64_t max_cell_rank) {
    if (max_arms > (1 << 16) || max_tuple_ranks > (1 << 16) ||
        max_cell_rank > (std::uint64_t(1) << 32))
      throw std::invalid_argument("StatsStore: key space too large to pack");
  }

  static std::uint64_t pack(int arm, int tuple_rank, std::uint64_t cell) {
    return (static_cast<std::uint64_t>(arm) << 48) |
           (static_cast<std::uint64_t>(tuple_rank) << 32) | cell;
  }

  const CellStats& get(int arm, int tuple_rank, std::uint64_t cell) const {
    ++reads_;
    auto it = map_.find(pack(arm, tuple_rank, cell));
    return it == map_.end() ? kEmpty : it->second;
  }

  void update(int arm, int tuple_rank, std::uint64_t cell, double reward) {
    stats_update(map_[pack(arm, tuple_rank, cell)], reward);
  }

  std::size_t entry_count() const { return map_.size(); }
  std::uint64_t reads() const { return reads_; }
  void reset_read_counter() { reads_ = 0; }
  void clear() {
    map_.clear();
    reads_ = 0;
  }

  // Deterministic traversal (ascending packed key).
  template <typename Fn>  // Fn(arm, tuple_rank, cell, CellStats)
  void for_each_sorted(Fn&& fn) const {
    std::vector<std::uint64_t> keys;
    keys.reserve(map_.size());
    for (const auto& [key, _] : map_) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    for (std::uint64_t key : keys) {
      fn(static_cast<int>(key >> 48), static_cast<int>((key >> 32) & 0xffff),
         key & 0xffffffffULL, map_.at(key));
    }
  }

 private:
  static inline const CellStats kEmpty{};
  std::unordered_map<std::uint64_t, CellStats> map_;
  mutable std::uint64_t reads_ = 0;
};

}  // namespace cmabrl
