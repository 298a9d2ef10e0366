#include <doctest.h>

#include "cmabrl/arm_grid.hpp"
#include "test_helpers.hpp"

using namespace cmabrl;
using test::make_arm;

TEST_CASE("catalog size and first arm") {
  const auto set = generate_arms(5, 1, 5);
  CHECK(set.size() == 25);  // binomial(5,1) * 5
  REQUIRE(set.arms.size() == 25);
  const auto& first = set.arms[0].values;
  CHECK(first == std::vector<double>{0.1, 0.5, 0.5, 0.5, 0.5});
  // Off-tuple coordinates sit at 0.5.
  for (int id = 0; id < set.size(); ++id) {
    const auto& tuple = set.tuples[set.provenance[id].tuple_rank];
    for (int dim = 0; dim < 5; ++dim)
      if (!tuple.contains(dim)) CHECK(set.arms[id].values[dim] == 0.5);
  }
}

TEST_CASE("interval centers for a single dimension") {
  const auto set = generate_arms(1, 1, 2);
  REQUIRE(set.size() == 2);
  CHECK(set.arms[0].values[0] == doctest::Approx(0.25));
  CHECK(set.arms[1].values[0] == doctest::Approx(0.75));
}

TEST_CASE("two relevant dimensions") {
  const auto set = generate_arms(3, 2, 2);
  CHECK(set.size() == 12);  // binomial(3,2) * 4
}

TEST_CASE("counts match the product rule over a parameter grid") {
  for (int d = 1; d <= 6; ++d)
    for (int l = 1; l <= d; ++l)
      for (int m : {1, 2, 3}) {
        std::uint64_t cells = 1;
        for (int i = 0; i < l; ++i) cells *= m;
        CHECK(generate_arms(d, l, m).size() ==
              static_cast<int>(binomial(d, l) * cells));
      }
}

TEST_CASE("restriction keeps one representative per covered cell") {
  const auto grid = generate_arms(1, 1, 2);
  const auto restricted =
      restrict_to_finite(grid, {make_arm({0.1}), make_arm({0.9})});
  REQUIRE(restricted.size() == 2);
  CHECK(restricted.arms[0].values[0] == doctest::Approx(0.1));
  CHECK(restricted.arms[1].values[0] == doctest::Approx(0.9));
}

TEST_CASE("restriction to the original centers is a fixed point") {
  const auto grid = generate_arms(3, 1, 3);
  const auto restricted = restrict_to_finite(grid, grid.arms);
  REQUIRE(restricted.size() == grid.size());
  for (int id = 0; id < grid.size(); ++id) {
    CHECK(restricted.provenance[id].tuple_rank ==
          grid.provenance[id].tuple_rank);
    CHECK(restricted.provenance[id].interval_indices ==
          grid.provenance[id].interval_indices);
  }
}

TEST_CASE("first listed arm wins a shared cell") {
  const auto grid = generate_arms(1, 1, 2);
  const auto restricted = restrict_to_finite(
      grid, {make_arm({0.2}), make_arm({0.3}), make_arm({0.8})});
  REQUIRE(restricted.size() == 2);
  CHECK(restricted.arms[0].values[0] == doctest::Approx(0.2));
  CHECK(restricted.arms[1].values[0] == doctest::Approx(0.8));
}

TEST_CASE("uncovered cells are dropped and empty lists rejected") {
  const auto grid = generate_arms(1, 1, 4);
  const auto restricted = restrict_to_finite(grid, {make_arm({0.1})});
  CHECK(restricted.size() == 1);
  CHECK_THROWS_AS(restrict_to_finite(grid, {}), std::domain_error);
}
