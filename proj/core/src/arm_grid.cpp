#include "cmabrl/arm_grid.hpp"

#include <stdexcept>

#include "cmabrl/partition.hpp"

namespace cmabrl {

namespace {

// Advances a base-m odometer, last digit fastest; false once exhausted.
bool next_indices(std::vector<int>& digits, int m) {
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (++digits[static_cast<std::size_t>(i)] < m) return true;
    digits[static_cast<std::size_t>(i)] = 0;
  }
  return false;
}

}  // namespace

DiscretizedArmSet generate_arms(int arm_dim, int relevant_arm_dims, int m) {
  if (relevant_arm_dims < 1 || relevant_arm_dims > arm_dim)
    throw std::domain_error("generate_arms: need 1 <= relevant dims <= dim");
  if (m < 1) throw std::domain_error("generate_arms: m >= 1 required");

  DiscretizedArmSet set;
  set.arm_dim = arm_dim;
  set.m = m;
  set.tuples = enumerate_tuples(arm_dim, relevant_arm_dims);

  const std::uint64_t cells_per_tuple = [&] {
    std::uint64_t c = 1;
    for (int i = 0; i < relevant_arm_dims; ++i)
      c *= static_cast<std::uint64_t>(m);
    return c;
  }();
  set.arms.reserve(set.tuples.size() * cells_per_tuple);
  set.provenance.reserve(set.tuples.size() * cells_per_tuple);

  for (int rank = 0; rank < static_cast<int>(set.tuples.size()); ++rank) {
    const DimensionTuple& tuple = set.tuples[static_cast<std::size_t>(rank)];
    std::vector<int> indices(static_cast<std::size_t>(relevant_arm_dims), 0);
    do {
      ArmVector arm;
      arm.values.assign(static_cast<std::size_t>(arm_dim), 0.5);
      for (int i = 0; i < relevant_arm_dims; ++i) {
        arm.values[static_cast<std::size_t>(tuple[i])] =
            (indices[static_cast<std::size_t>(i)] + 0.5) / m;
      }
      set.arms.push_back(std::move(arm));
      set.provenance.push_back(ArmCell{rank, indices});
    } while (next_indices(indices, m));
  }
  return set;
}

DiscretizedArmSet restrict_to_finite(const DiscretizedArmSet& grid,
                                     const std::vector<ArmVector>& allowed) {
  if (allowed.empty())
    throw std::domain_error("restrict_to_finite: empty arm list");
  for (const ArmVector& a : allowed)
    validate_unit_box(a.values, grid.arm_dim, "restrict_to_finite arm");

  DiscretizedArmSet out;
  out.arm_dim = grid.arm_dim;
  out.m = grid.m;
  out.tuples = grid.tuples;

  for (int id = 0; id < grid.size(); ++id) {
    const ArmCell& cell = grid.provenance[static_cast<std::size_t>(id)];
    const DimensionTuple& tuple =
        grid.tuples[static_cast<std::size_t>(cell.tuple_rank)];
    // First listed arm whose tuple projection lies in this cell.
    for (const ArmVector& candidate : allowed) {
      bool inside = true;
      for (int i = 0; i < tuple.size(); ++i) {
        const double v =
            candidate.values[static_cast<std::size_t>(tuple[i])];
        if (cell_index(v, grid.m) !=
            cell.interval_indices[static_cast<std::size_t>(i)]) {
          inside = false;
          break;
        }
      }
      if (inside) {
        out.arms.push_back(candidate);
        out.provenance.push_back(cell);
        break;
      }
    }
  }
  if (out.arms.empty())
    throw std::domain_error(
        "restrict_to_finite: no cell contains any listed arm");
  return out;
}

}  // namespace cmabrl
