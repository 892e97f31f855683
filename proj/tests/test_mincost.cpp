#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "popmax/certificates.hpp"
#include "popmax/errors.hpp"
#include "popmax/flow.hpp"
#include "popmax/gstar.hpp"
#include "popmax/lp.hpp"
#include "popmax/mincost.hpp"
#include "popmax/oracle.hpp"
#include "popmax/popularity.hpp"
#include "popmax/rotations.hpp"
#include "popmax/stable.hpp"

using namespace popmax;
using fixtures::E;
using fixtures::M;

TEST_CASE("max_flow small networks") {
  FlowNetwork single(2, 0, 1);
  single.add_arc(0, 1, 3);
  const MaxFlowResult r1 = max_flow(single);
  CHECK(r1.value == 3);
  CHECK(r1.cut_capacity == 3);
  CHECK(r1.arc_flow == std::vector<Cost>{3});

  FlowNetwork diamond(4, 0, 3);
  diamond.add_arc(0, 1, 2);
  diamond.add_arc(0, 2, 2);
  diamond.add_arc(1, 3, 2);
  diamond.add_arc(2, 3, 1);
  diamond.add_arc(1, 2, 1);
  const MaxFlowResult r2 = max_flow(diamond);
  CHECK(r2.value == 3);
  CHECK(r2.cut_capacity == 3);
  CHECK(r2.source_side[0]);
  CHECK_FALSE(r2.source_side[3]);

  FlowNetwork apart(4, 0, 3);
  apart.add_arc(0, 1, 5);
  apart.add_arc(2, 3, 5);
  const MaxFlowResult r3 = max_flow(apart);
  CHECK(r3.value == 0);
  CHECK(r3.cut_capacity == 0);
  CHECK(r3.source_side == std::vector<bool>{true, true, false, false});

  CHECK_THROWS_AS(apart.add_arc(0, 1, -1), PreconditionError);
  CHECK_THROWS_AS(apart.add_arc(0, 4, 1), PreconditionError);
}

TEST_CASE("max_flow conservation on random networks") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 7));
    FlowNetwork net(n, 0, n - 1);
    const int arcs = static_cast<int>(uniform_below(rng, 3 * n));
    for (int i = 0; i < arcs; ++i) {
      net.add_arc(static_cast<int>(uniform_below(rng, n)),
                  static_cast<int>(uniform_below(rng, n)),
                  static_cast<Cost>(uniform_below(rng, 10)));
    }
    const MaxFlowResult r = max_flow(net);
    CHECK(r.value == r.cut_capacity);
    std::vector<Cost> balance(n, 0);
    for (size_t i = 0; i < net.arcs().size(); ++i) {
      const auto& arc = net.arcs()[i];
      CHECK(r.arc_flow[i] >= 0);
      CHECK(r.arc_flow[i] <= arc.capacity);
      balance[arc.from] -= r.arc_flow[i];
      balance[arc.to] += r.arc_flow[i];
    }
    for (int v = 1; v + 1 < n; ++v) CHECK(balance[v] == 0);
    CHECK(balance[n - 1] == r.value);
  }
}

TEST_CASE("rotations of a two-cycle instance") {
  const Instance i2 = fixtures::I2();
  const RotationPoset poset = find_rotations(i2);
  CHECK(poset.base == M(i2, {{"a1", "b1"}, {"a2", "b2"}}));
  REQUIRE(poset.rotations.size() == 1);
  const Rotation& r = poset.rotations[0];
  CHECK(r.removed() == std::vector<Edge>{E(i2, "a1", "b1"), E(i2, "a2", "b2")});
  CHECK(r.added() == std::vector<Edge>{E(i2, "a1", "b2"), E(i2, "a2", "b1")});
  CHECK(apply_rotations(poset, {true}) == M(i2, {{"a1", "b2"}, {"a2", "b1"}}));
  CHECK(enumerate_stable(i2).matchings.size() == 2);

  CHECK(find_rotations(fixtures::I1()).rotations.empty());
}

TEST_CASE("apply_rotations rejects open selections") {
  // Cyclic preferences: the rotations form a chain.
  const Instance inst = parse_instance(
      "side A m1 m2 m3\nside B w1 w2 w3\n"
      "pref m1: w1 w2 w3\npref m2: w2 w3 w1\npref m3: w3 w1 w2\n"
      "pref w1: m2 m3 m1\npref w2: m3 m1 m2\npref w3: m1 m2 m3\n");
  const RotationPoset poset = find_rotations(inst);
  std::set<std::vector<Edge>> seen;
  for (const auto& r : poset.rotations) seen.insert(r.pairs);
  CHECK(seen.size() == poset.rotations.size());
  CHECK(poset.rotations.size() == 2);
  const StableEnumeration all = enumerate_stable(inst);
  CHECK(all.matchings.size() == oracle::brute_stable_matchings(inst).size());
  for (size_t i = 0; i < poset.rotations.size(); ++i) {
    if (poset.predecessors[i].empty()) continue;
    std::vector<bool> chosen(poset.rotations.size(), false);
    chosen[i] = true;
    CHECK_THROWS_AS(apply_rotations(poset, chosen), PreconditionError);
  }
}

TEST_CASE("rotations do not depend on the scan order") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Instance inst = fixtures::random_small(seed, 6, 0.5);
    const RotationPoset fwd = find_rotations(inst, false);
    const RotationPoset rev = find_rotations(inst, true);
    std::set<std::vector<Edge>> f, r;
    for (const auto& x : fwd.rotations) f.insert(x.pairs);
    for (const auto& x : rev.rotations) r.insert(x.pairs);
    CHECK(f == r);
    const auto sorted = [](std::vector<Matching> v) {
      std::vector<std::vector<Edge>> out;
      for (const auto& m : v) out.push_back(m.pairs());
      std::sort(out.begin(), out.end());
      return out;
    };
    const auto a = enumerate_stable(inst);
    const auto oracle_all = oracle::brute_stable_matchings(inst, 64);
    CHECK(sorted(a.matchings) == sorted(oracle_all));
  }
}

TEST_CASE("min-cost stable matching") {
  const Instance i2 = fixtures::I2_costs();
  const MinCostStable best = min_cost_stable_detail(i2, find_rotations(i2));
  CHECK(best.matching == M(i2, {{"a1", "b2"}, {"a2", "b1"}}));
  CHECK(best.cost == 0);
  CHECK(best.flow_value == best.cut_capacity);
  CHECK(best.closure == std::vector<bool>{true});

  // Zero costs keep the base matching (inclusion-minimal closure).
  const Instance plain = fixtures::I2();
  CHECK(min_cost_stable(plain) == gale_shapley(plain));

  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Instance inst = fixtures::random_small(seed, 5, 0.5, 9);
    const MinCostStable r = min_cost_stable_detail(inst, find_rotations(inst));
    CHECK(r.flow_value == r.cut_capacity);
    CHECK(is_stable(inst, r.matching));
    Cost brute = std::numeric_limits<Cost>::max();
    for (const Matching& s : oracle::brute_stable_matchings(inst, 64)) {
      brute = std::min(brute, matching_cost(inst, s));
    }
    CHECK(r.cost == brute);
    CHECK(r.cost == matching_cost(inst, r.matching));
  }
}

TEST_CASE("min-cost popular max-matching") {
  const Instance i2 = fixtures::I2_costs();
  const MinCostPopular r = min_cost_popular_max(i2);
  CHECK(r.matching == M(i2, {{"a1", "b2"}, {"a2", "b1"}}));
  CHECK(r.cost == 0);
  CHECK(verify_certificate(i2, r.matching, r.certificate).valid);
  CHECK(project(build_gstar(i2), r.gstar_matching) == r.matching);

  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = fixtures::random_small(seed, 4, 0.3, 9);
    const MinCostPopular got = min_cost_popular_max(inst);
    const oracle::MinCostResult want = oracle::brute_min_cost_popular_max(inst, 40);
    CHECK(got.cost == want.cost);
    CHECK(got.cost == matching_cost(inst, got.matching));
    CHECK(verify_popular_max(inst, got.matching).popular);
    CHECK(verify_certificate(inst, got.matching, got.certificate).valid);
  }
}

TEST_CASE("emit_lp") {
  const std::string lp = emit_lp(fixtures::I0());
  CHECK(lp.find("Minimize\n obj: 0 x(a,b)\n") != std::string::npos);
  CHECK(lp.find(" stab(a#0,b~): xs(a#0,b~) >= 1\n") != std::string::npos);
  CHECK(lp.find(" link(a,b): x(a,b) - xs(a#0,b~) = 0\n") != std::string::npos);
  CHECK(lp.find("Generals") == std::string::npos);
  CHECK(lp.substr(lp.size() - 4) == "End\n");

  const std::string integral = emit_lp(fixtures::I1(), {.integral = true});
  CHECK(integral.find("Generals") != std::string::npos);
  CHECK(integral.find(" must(a1#0): ") != std::string::npos);
  CHECK(integral.find(" must(a1!d1): ") != std::string::npos);
  CHECK(integral.find(" deg(a1#1): ") != std::string::npos);
  CHECK(integral.find(" must(a1#1): ") == std::string::npos);

  const Instance odd = parse_instance("side A a(1)\nside B b\npref a(1): b\npref b: a(1)\n");
  CHECK(emit_lp(odd).find("x(a$281$29,b)") != std::string::npos);

  for (const std::string line : {lp, integral}) {
    size_t start = 0;
    while (start < line.size()) {
      const size_t end = line.find('\n', start);
      CHECK(end - start <= 200);
      start = end + 1;
    }
  }
}
