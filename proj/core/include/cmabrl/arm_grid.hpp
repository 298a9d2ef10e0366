#pragma once

#include <vector>

#include "cmabrl/tuples.hpp"
#include "cmabrl/types.hpp"

namespace cmabrl {

// Provenance of one discretized arm: which arm-dimension tuple and which
// interval combination it is the center of.
struct ArmCell {
  int tuple_rank = 0;                // index into DiscretizedArmSet::tuples
  std::vector<int> interval_indices;  // one per tuple dimension
};

// Finite arm catalog produced by uniform discretization of every
// relevant-size coordinate subspace of the arm set. Arm ids run
// 0..size-1 ordered by (tuple rank, interval rank); distinct cells may
// share a vector (dimensions outside the tuple sit at 0.5).
struct DiscretizedArmSet {
  int arm_dim = 0;
  int m = 0;
  std::vector<DimensionTuple> tuples;  // lexicographic tuple catalog
  std::vector<ArmVector> arms;         // id -> played vector
  std::vector<ArmCell> provenance;     // id -> originating cell

  int size() const { return static_cast<int>(arms.size()); }
};

// Centers of the m^{relevant_arm_dims} boxes of each relevant-size tuple
// subspace; binomial(arm_dim, relevant_arm_dims) * m^{relevant_arm_dims}
// arms in total.
DiscretizedArmSet generate_arms(int arm_dim, int relevant_arm_dims, int m);

// Restriction to a finite arm list: every cell containing at least one
// listed arm keeps the first such arm (input order) as its representative;
// cells containing none are dropped. Ids are reassigned densely preserving
// cell order.
DiscretizedArmSet restrict_to_finite(const DiscretizedArmSet& grid,
                                     const std::vector<ArmVector>& allowed);

}  // namespace cmabrl
