#include "cmabrl/tuples.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmabrl {

DimensionTuple::DimensionTuple(std::vector<int> dims) : dims_(std::move(dims)) {
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 0)
      throw std::invalid_argument("DimensionTuple: negative index");
    if (i > 0 && dims_[i] <= dims_[i - 1])
      throw std::invalid_argument(
          "DimensionTuple: indices must be strictly increasing");
  }
}

DimensionTuple::DimensionTuple(std::initializer_list<int> dims)
    : DimensionTuple(std::vector<int>(dims)) {}

bool DimensionTuple::contains(int dim) const {
  return std::binary_search(dims_.begin(), dims_.end(), dim);
}

bool DimensionTuple::contains_all(const DimensionTuple& other) const {
  return std::includes(dims_.begin(), dims_.end(), other.dims_.begin(),
                       other.dims_.end());
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

namespace {

// Lexicographic successor of a size-l combination over {0,...,d-1}.
bool next_combination(std::vector<int>& comb, int d) {
  const int l = static_cast<int>(comb.size());
  for (int i = l - 1; i >= 0; --i) {
    if (comb[static_cast<std::size_t>(i)] < d - l + i) {
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < l; ++j)
        comb[static_cast<std::size_t>(j)] =
            comb[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<DimensionTuple> enumerate_tuples(int d, int l) {
  if (l < 1 || l > d)
    throw std::domain_error("enumerate_tuples: need 1 <= l <= d");
  std::vector<DimensionTuple> out;
  out.reserve(binomial(d, l));
  std::vector<int> comb(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) comb[static_cast<std::size_t>(i)] = i;
  do {
    out.emplace_back(comb);
  } while (next_combination(comb, d));
  return out;
}

std::vector<DimensionTuple> supertuples(const DimensionTuple& v, int l,
                                        int d) {
  if (v.size() > l || l > d)
    throw std::domain_error("supertuples: need |v| <= l <= d");
  if (v.max_dim() >= d)
    throw std::domain_error("supertuples: tuple index outside ambient set");

  const int extra = l - v.size();
  std::vector<int> complement;
  complement.reserve(static_cast<std::size_t>(d - v.size()));
  for (int i = 0; i < d; ++i)
    if (!v.contains(i)) complement.push_back(i);

  std::vector<DimensionTuple> out;
  if (extra == 0) {
    out.push_back(v);
    return out;
  }
  out.reserve(binomial(d - v.size(), extra));
  std::vector<int> pick(static_cast<std::size_t>(extra));
  for (int i = 0; i < extra; ++i) pick[static_cast<std::size_t>(i)] = i;
  do {
    std::vector<int> merged(v.begin(), v.end());
    for (int idx : pick)
      merged.push_back(complement[static_cast<std::size_t>(idx)]);
    std::sort(merged.begin(), merged.end());
    out.emplace_back(std::move(merged));
  } while (next_combination(pick, d - v.size()));
  std::sort(out.begin(), out.end());
  return out;
}

DimensionTuple merge_tuple(const DimensionTuple& v, const DimensionTuple& c,
                           int target_size, int d) {
  if (target_size > d)
    throw std::domain_error("merge_tuple: target size exceeds ambient set");
  std::vector<int> merged(v.begin(), v.end());
  merged.insert(merged.end(), c.begin(), c.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  if (static_cast<int>(merged.size()) > target_size)
    throw std::domain_error("merge_tuple: union larger than target size");
  for (int i = 0; i < d && static_cast<int>(merged.size()) < target_size;
       ++i) {
    if (!std::binary_search(merged.begin(), merged.end(), i)) {
      merged.insert(std::lower_bound(merged.begin(), merged.end(), i), i);
    }
  }
  if (static_cast<int>(merged.size()) != target_size)
    throw std::domain_error("merge_tuple: ambient set too small");
  return DimensionTuple(std::move(merged));
}

}  // namespace cmabrl
