#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cmabrl {

// Sorted set of distinct dimension indices, 0-based.
class DimensionTuple {
 public:
  DimensionTuple() = default;
  // Validates strictly increasing, non-negative entries.
  explicit DimensionTuple(std::vector<int> dims);
  DimensionTuple(std::initializer_list<int> dims);

  int size() const { return static_cast<int>(dims_.size()); }
  bool empty() const { return dims_.empty(); }
  int operator[](int i) const { return dims_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& dims() const { return dims_; }
  bool contains(int dim) const;
  bool contains_all(const DimensionTuple& other) const;
  int max_dim() const { return dims_.empty() ? -1 : dims_.back(); }

  auto begin() const { return dims_.begin(); }
  auto end() const { return dims_.end(); }

  friend bool operator==(const DimensionTuple&,
                         const DimensionTuple&) = default;
  friend bool operator<(const DimensionTuple& a, const DimensionTuple& b) {
    return a.dims_ < b.dims_;
  }

 private:
  std::vector<int> dims_;
};

std::uint64_t binomial(int n, int k);

// All size-l tuples over dimensions {0,...,d-1}, lexicographic order.
// Exactly binomial(d, l) results.
std::vector<DimensionTuple> enumerate_tuples(int d, int l);

// All size-l tuples over {0,...,d-1} that contain v, lexicographic order.
// Exactly binomial(d - |v|, l - |v|) results.
std::vector<DimensionTuple> supertuples(const DimensionTuple& v, int l, int d);

// Smallest-index completion of the union of two tuples to target_size
// dimensions: take v union c, then pad with the lowest dimension indices not
// already present. Deterministic; the result always contains v and c.
DimensionTuple merge_tuple(const DimensionTuple& v, const DimensionTuple& c,
                           int target_size, int d);

}  // namespace cmabrl
