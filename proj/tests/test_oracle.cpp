#include "doctest.h"
#include "fixtures.hpp"
#include "popmax/errors.hpp"
#include "popmax/oracle.hpp"

using namespace popmax;
using fixtures::M;

TEST_CASE("oracle counts on fixtures") {
  const Instance i2 = fixtures::I2();
  CHECK(oracle::enum_matchings(i2).size() == 7);
  CHECK(oracle::enum_max_matchings(i2).size() == 2);
  CHECK(oracle::brute_popular_max(i2).size() == 2);
  CHECK(oracle::brute_stable_matchings(i2).size() == 2);

  const Instance i3 = fixtures::I3();
  CHECK(oracle::enum_matchings(i3).size() == 4);
  CHECK(oracle::brute_popular_max(i3) == std::vector<Matching>{M(i3, {{"a1", "b1"}})});

  const Instance i1 = fixtures::I1();
  CHECK(oracle::brute_is_popular_max(i1, M(i1, {{"a1", "b1"}, {"a2", "b2"}})));
  CHECK_FALSE(oracle::brute_is_popular_max(i1, M(i1, {{"a2", "b1"}})));
}

TEST_CASE("oracle min cost") {
  const Instance i2 = fixtures::I2_costs();
  const oracle::MinCostResult r = oracle::brute_min_cost_popular_max(i2);
  CHECK(r.cost == 0);
  CHECK(r.matching == M(i2, {{"a1", "b2"}, {"a2", "b1"}}));
}

TEST_CASE("unpopularity factor") {
  const Instance i3 = fixtures::I3();
  CHECK(oracle::brute_unpopularity_factor(i3, M(i3, {{"a3", "b1"}})).to_string() == "2");
  CHECK(oracle::brute_unpopularity_factor(i3, M(i3, {{"a1", "b1"}})).to_string() == "1/2");
  const oracle::Unpopularity empty = oracle::brute_unpopularity_factor(i3, Matching(3, 1));
  CHECK(empty.infinite);
  CHECK(empty.to_string() == "inf");

  const Instance i5 = fixtures::I5();
  CHECK(oracle::brute_unpopularity_factor(i5, M(i5, {{"a1", "b1"}, {"a2", "b2"}})).infinite);
  CHECK_FALSE(oracle::brute_is_pareto_optimal(i5, M(i5, {{"a1", "b1"}, {"a2", "b2"}})));
  CHECK(oracle::brute_is_pareto_optimal(i5, M(i5, {{"a1", "b2"}, {"a2", "b1"}})));
}

TEST_CASE("oracle edge bound") {
  const Instance big = random_instance({.num_a = 6, .num_b = 6, .density = 1.0, .seed = 1});
  CHECK(big.num_edges() == 36);
  CHECK_THROWS_AS(oracle::enum_matchings(big), BoundExceeded);
  CHECK_THROWS_AS(oracle::brute_popular_max(big), BoundExceeded);
  CHECK_NOTHROW(oracle::enum_matchings(fixtures::I2(), 4));
  CHECK_THROWS_AS(oracle::enum_matchings(fixtures::I2(), 3), BoundExceeded);
}

TEST_CASE("parallel and serial oracles agree") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = fixtures::random_small(seed, 5, 0.4);
    CHECK(oracle::brute_popular_max(inst, 40) == oracle::brute_popular_max_serial(inst, 40));
  }
}

TEST_CASE("oracle definitions are consistent") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = fixtures::random_small(seed, 4, 0.3);
    const auto all = oracle::enum_matchings(inst, 64);
    const auto maxes = oracle::enum_max_matchings(inst, 64);
    const auto popular = oracle::brute_popular_max(inst, 64);
    int best = 0;
    for (const auto& m : all) best = std::max(best, m.size());
    long long count_max = 0;
    for (const auto& m : all) count_max += m.size() == best;
    CHECK(count_max == static_cast<long long>(maxes.size()));
    REQUIRE_FALSE(popular.empty());
    for (const auto& m : popular) {
      for (const auto& n : maxes) CHECK(compare(inst, m, n).delta() >= 0);
      CHECK(oracle::brute_is_pareto_optimal(inst, m, 64));
    }
  }
}
