#include <doctest.h>

#include <vector>

#include "cmabrl/stats_store.hpp"

using namespace cmabrl;

TEST_CASE("mean recursion") {
  CellStats s;
  stats_update(s, 1.0);
  CHECK(s.count == 1);
  CHECK(s.mean == doctest::Approx(1.0));

  CellStats t{2, 0.5};
  stats_update(t, 1.0);
  CHECK(t.count == 3);
  CHECK(t.mean == doctest::Approx(2.0 / 3.0));

  CellStats batch;
  for (double r : {0.0, 1.0, 1.0, 0.0}) stats_update(batch, r);
  CHECK(batch.count == 4);
  CHECK(batch.mean == doctest::Approx(0.5));
}

TEST_CASE("absent entries read as zero without allocating") {
  StatsStore store(8, 4, 16);
  const CellStats& empty = store.get(3, 2, 7);
  CHECK(empty.count == 0);
  CHECK(empty.mean == 0.0);
  CHECK(store.entry_count() == 0);
  CHECK(store.reads() == 1);
}

TEST_CASE("updates touch only their own entry") {
  StatsStore store(8, 4, 16);
  store.update(1, 0, 3, 1.0);
  store.update(1, 0, 3, 0.0);
  store.update(2, 1, 3, 0.25);
  CHECK(store.entry_count() == 2);
  CHECK(store.get(1, 0, 3).count == 2);
  CHECK(store.get(1, 0, 3).mean == doctest::Approx(0.5));
  CHECK(store.get(2, 1, 3).mean == doctest::Approx(0.25));
  CHECK(store.get(1, 1, 3).count == 0);
}

TEST_CASE("entry count bounded by updates performed") {
  StatsStore store(16, 8, 64);
  int updates = 0;
  for (int arm = 0; arm < 4; ++arm)
    for (int rank = 0; rank < 3; ++rank)
      for (int rep = 0; rep < 2; ++rep) {
        store.update(arm, rank, static_cast<std::uint64_t>(rep), 0.5);
        ++updates;
        CHECK(store.entry_count() <= static_cast<std::size_t>(updates));
      }
}

TEST_CASE("sorted traversal is deterministic") {
  StatsStore store(8, 4, 16);
  store.update(2, 1, 5, 1.0);
  store.update(0, 3, 2, 0.0);
  store.update(2, 0, 9, 0.5);
  std::vector<std::uint64_t> keys;
  store.for_each_sorted([&](int arm, int rank, std::uint64_t cell,
                            const CellStats&) {
    keys.push_back(StatsStore::pack(arm, rank, cell));
  });
  REQUIRE(keys.size() == 3);
  CHECK(keys[0] < keys[1]);
  CHECK(keys[1] < keys[2]);
}
