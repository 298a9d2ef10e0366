#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cmabrl/tuples.hpp"
#include "cmabrl/types.hpp"

namespace cmabrl {

// Index of the partition interval containing value, for the uniform
// m-interval partition of [0,1] whose first interval [0, 1/m] is closed and
// whose remaining intervals (k/m, (k+1)/m] are left-open.
inline int cell_index(double value, int m) {
  if (m < 1) throw std::domain_error("cell_index: m >= 1 required");
  if (!(value >= 0.0 && value <= 1.0))
    throw std::domain_error("cell_index: value outside [0,1]");
  int k = static_cast<int>(std::ceil(value * m)) - 1;
  if (k < 0) k = 0;
  if (k >= m) k = m - 1;
  return k;
}

// Identifies one box of the uniform partition of a tuple's coordinate
// subspace.
struct CellKey {
  DimensionTuple tuple;
  std::vector<int> interval_indices;  // one per tuple dimension, each < m
};

inline CellKey cell_key(const ContextVector& x, const DimensionTuple& w,
                        int m) {
  if (w.empty() || w.max_dim() >= static_cast<int>(x.values.size()))
    throw std::domain_error("cell_key: tuple not valid for this context");
  CellKey key;
  key.tuple = w;
  key.interval_indices.reserve(static_cast<std::size_t>(w.size()));
  for (int dim : w)
    key.interval_indices.push_back(
        cell_index(x.values[static_cast<std::size_t>(dim)], m));
  return key;
}

// Row-major rank of an interval-index vector, first dimension most
// significant; also the stable ordering used for arm ids and snapshots.
inline std::uint64_t linear_cell_rank(std::span<const int> interval_indices,
                                      int m) {
  std::uint64_t rank = 0;
  for (int idx : interval_indices) {
    rank = rank * static_cast<std::uint64_t>(m) +
           static_cast<std::uint64_t>(idx);
  }
  return rank;
}

inline std::uint64_t linear_cell_rank(const ContextVector& x,
                                      const DimensionTuple& w, int m) {
  std::uint64_t rank = 0;
  for (int dim : w) {
    rank = rank * static_cast<std::uint64_t>(m) +
           static_cast<std::uint64_t>(
               cell_index(x.values[static_cast<std::size_t>(dim)], m));
  }
  return rank;
}

}  // namespace cmabrl
