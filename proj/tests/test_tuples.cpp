#include <doctest.h>

#include <algorithm>
#include <set>

#include "cmabrl/tuples.hpp"

using cmabrl::DimensionTuple;
using cmabrl::binomial;
using cmabrl::enumerate_tuples;
using cmabrl::merge_tuple;
using cmabrl::supertuples;

TEST_CASE("tuple validation") {
  CHECK_THROWS_AS(DimensionTuple({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(DimensionTuple({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(DimensionTuple({-1}), std::invalid_argument);
  CHECK(DimensionTuple({0, 3, 5}).contains(3));
  CHECK_FALSE(DimensionTuple({0, 3, 5}).contains(4));
}

TEST_CASE("enumerate_tuples basic shapes") {
  const auto t32 = enumerate_tuples(3, 2);
  REQUIRE(t32.size() == 3);
  CHECK(t32[0] == DimensionTuple({0, 1}));
  CHECK(t32[1] == DimensionTuple({0, 2}));
  CHECK(t32[2] == DimensionTuple({1, 2}));

  CHECK(enumerate_tuples(5, 2).size() == 10);

  const auto full = enumerate_tuples(4, 4);
  REQUIRE(full.size() == 1);
  CHECK(full[0] == DimensionTuple({0, 1, 2, 3}));

  CHECK_THROWS_AS(enumerate_tuples(3, 4), std::domain_error);
}

TEST_CASE("enumerate_tuples counts match binomials up to d=10") {
  for (int d = 1; d <= 10; ++d) {
    for (int l = 1; l <= d; ++l) {
      const auto tuples = enumerate_tuples(d, l);
      CHECK(tuples.size() == binomial(d, l));
      CHECK(std::is_sorted(tuples.begin(), tuples.end()));
      const std::set<DimensionTuple> unique(tuples.begin(), tuples.end());
      CHECK(unique.size() == tuples.size());
    }
  }
}

TEST_CASE("supertuples contain the base and match the count identity") {
  const auto s = supertuples(DimensionTuple{0}, 2, 5);
  CHECK(s.size() == 4);  // binomial(4, 1)
  for (const auto& w : s) CHECK(w.contains(0));

  const auto fixed = supertuples(DimensionTuple{0, 1}, 2, 5);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0] == DimensionTuple({0, 1}));

  CHECK(supertuples(DimensionTuple{0}, 3, 4).size() == 3);  // binomial(3, 2)

  for (int d = 2; d <= 8; ++d) {
    for (const auto& v : enumerate_tuples(d, 1)) {
      for (int l = 1; l <= d; ++l) {
        const auto supers = supertuples(v, l, d);
        CHECK(supers.size() == binomial(d - 1, l - 1));
        for (const auto& w : supers) CHECK(w.contains_all(v));
      }
    }
  }
}

TEST_CASE("merge_tuple disjoint union") {
  CHECK(merge_tuple(DimensionTuple{0}, DimensionTuple{3}, 2, 5) ==
        DimensionTuple({0, 3}));
}

TEST_CASE("merge_tuple pads deterministically with smallest free indices") {
  // Exhaustive oracle: the result must be the lexicographically smallest
  // valid supertuple of the union.
  auto brute = [](const DimensionTuple& v, const DimensionTuple& c,
                  int target, int d) {
    DimensionTuple base = [&] {
      std::vector<int> u(v.begin(), v.end());
      u.insert(u.end(), c.begin(), c.end());
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      return DimensionTuple(u);
    }();
    for (const auto& w : enumerate_tuples(d, target))
      if (w.contains_all(base)) return w;  // lexicographic order
    return DimensionTuple{};
  };

  CHECK(merge_tuple(DimensionTuple{2}, DimensionTuple{2}, 2, 5) ==
        DimensionTuple({0, 2}));
  CHECK(merge_tuple(DimensionTuple{2}, DimensionTuple{2}, 2, 5) ==
        brute(DimensionTuple{2}, DimensionTuple{2}, 2, 5));

  CHECK(merge_tuple(DimensionTuple{0, 1}, DimensionTuple{1, 2}, 4, 6) ==
        DimensionTuple({0, 1, 2, 3}));
  CHECK(merge_tuple(DimensionTuple{0, 1}, DimensionTuple{1, 2}, 4, 6) ==
        brute(DimensionTuple{0, 1}, DimensionTuple{1, 2}, 4, 6));

  for (int d = 4; d <= 6; ++d) {
    for (const auto& v : enumerate_tuples(d, 2)) {
      for (const auto& c : enumerate_tuples(d, 2)) {
        const auto merged = merge_tuple(v, c, 4, d);
        CHECK(merged.size() == 4);
        CHECK(merged.contains_all(v));
        CHECK(merged.contains_all(c));
        CHECK(merged == brute(v, c, 4, d));
      }
    }
  }
}

TEST_CASE("merge_tuple rejects impossible targets") {
  CHECK_THROWS_AS(merge_tuple(DimensionTuple{0, 1}, DimensionTuple{2, 3}, 3, 5),
                  std::domain_error);
  CHECK_THROWS_AS(merge_tuple(DimensionTuple{0}, DimensionTuple{1}, 4, 3),
                  std::domain_error);
}
