#include "doctest.h"
#include "fixtures.hpp"
#include "popmax/errors.hpp"
#include "popmax/oracle.hpp"

using namespace popmax;
using fixtures::E;
using fixtures::M;

TEST_CASE("parse_instance builds the edge set") {
  const Instance i0 = fixtures::I0();
  CHECK(i0.num_edges() == 1);
  CHECK(i0.has_edge(0, 0));

  const Instance i1 = fixtures::I1();
  CHECK(i1.num_a() == 2);
  CHECK(i1.num_b() == 2);
  CHECK(i1.num_edges() == 3);
  CHECK(i1.a_rank(*i1.find_a("a2"), *i1.find_b("b2")) == 1);
  CHECK(i1.b_rank(*i1.find_b("b1"), *i1.find_a("a1")) == 1);
}

TEST_CASE("parse_instance rejects invalid text") {
  CHECK_THROWS_WITH_AS(parse_instance("side A a\nside B b\npref a: b\npref b:\n"),
                       doctest::Contains("non-mutual preference"), ValidationError);
  CHECK_THROWS_AS(parse_instance("side A a a\nside B b\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance("side A a\nside B a\n"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_instance("side A a\nside B b\npref a: b b\npref b: a\n"),
                       doctest::Contains("twice"), ValidationError);
  CHECK_THROWS_AS(parse_instance("side A a1 a2\nside B b\npref a1: a2\npref a2:\npref b:\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_instance("side A a\nside B b\npref a: b\npref b: a\ncost a b x\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance("side A a c\nside B b\npref a: b\npref b: a\npref c:\n"
                                 "cost c b 3\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_instance("side A a\nside B b\npref a: b\n"), ValidationError);
  CHECK_THROWS_AS(parse_instance("side A a\nside B b\npref a: b\npref a: b\npref b: a\n"),
                  ValidationError);

  try {
    parse_instance("side A a\nside B b\nprefer a: b\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 1);
  }
  try {
    parse_instance("side A a\n  side C b\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
}

TEST_CASE("comments and isolated nodes") {
  const Instance inst = parse_instance(
      "# leading comment\n"
      "side A a1 a2   # trailing\n"
      "side B b1\n"
      "pref a1: b1 # x\n"
      "pref a2:\n"
      "pref b1: a1\n");
  CHECK(inst.num_edges() == 1);
  CHECK(inst.a_prefs(1).empty());
  CHECK(maximum_matching(inst).size() == 1);
}

TEST_CASE("serialize_instance round-trips") {
  for (const Instance& inst : {fixtures::I0(), fixtures::I1(), fixtures::I2_costs(),
                               fixtures::I3(), fixtures::I5()}) {
    const std::string text = serialize_instance(inst);
    CHECK(parse_instance(text) == inst);
  }
  const std::string text = serialize_instance(fixtures::I2_costs());
  CHECK(text.find("cost a1 b1 1") != std::string::npos);
  CHECK(text.find("cost a2 b2 1") != std::string::npos);
  CHECK(text.find("cost a1 b2") == std::string::npos);

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance inst = fixtures::random_small(seed, 6, 0.2, 9);
    CHECK(parse_instance(serialize_instance(inst)) == inst);
  }
}

TEST_CASE("wt_edge") {
  const Instance i1 = fixtures::I1();
  const Matching m = M(i1, {{"a1", "b1"}, {"a2", "b2"}});
  CHECK(wt_edge(i1, m, E(i1, "a2", "b1")) == 2);
  CHECK(wt_edge(i1, m, E(i1, "a1", "b1")) == 0);
  CHECK(wt_edge(i1, m, E(i1, "a2", "b2")) == 0);
  CHECK_THROWS_AS(wt_edge(i1, m, Edge{0, 1}), PreconditionError);

  const Instance i2 = fixtures::I2();
  const Matching m1 = M(i2, {{"a1", "b1"}, {"a2", "b2"}});
  CHECK(wt_edge(i2, m1, E(i2, "a1", "b2")) == 0);
  const Matching m2 = M(i2, {{"a1", "b2"}, {"a2", "b1"}});
  CHECK(wt_edge(i2, m2, E(i2, "a1", "b1")) == 0);

  const Instance i5 = fixtures::I5();
  const Matching diag = M(i5, {{"a1", "b1"}, {"a2", "b2"}});
  CHECK(wt_edge(i5, diag, E(i5, "a1", "b2")) == 2);
  const Matching swap = M(i5, {{"a1", "b2"}, {"a2", "b1"}});
  CHECK(wt_edge(i5, swap, E(i5, "a1", "b1")) == -2);
}

TEST_CASE("compare") {
  const Instance i1 = fixtures::I1();
  const Matching m = M(i1, {{"a1", "b1"}, {"a2", "b2"}});
  const Matching n = M(i1, {{"a2", "b1"}});
  CHECK(compare(i1, m, m) == VoteTally{0, 0});
  const VoteTally t = compare(i1, m, n);
  CHECK(t.phi_mn == 2);
  CHECK(t.phi_nm == 2);
  CHECK(t.delta() == 0);

  const Instance i5 = fixtures::I5();
  const VoteTally u = compare(i5, M(i5, {{"a1", "b1"}, {"a2", "b2"}}),
                              M(i5, {{"a1", "b2"}, {"a2", "b1"}}));
  CHECK(u == VoteTally{0, 4});
  CHECK(u.delta() == -4);
}

TEST_CASE("is_maximum") {
  const Instance i0 = fixtures::I0();
  CHECK(is_maximum(i0, M(i0, {{"a", "b"}})).maximum);

  const Instance i1 = fixtures::I1();
  const MaximumCheck c = is_maximum(i1, M(i1, {{"a2", "b1"}}));
  REQUIRE_FALSE(c.maximum);
  const std::vector<Edge> path{E(i1, "a1", "b1"), E(i1, "a2", "b1"), E(i1, "a2", "b2")};
  CHECK(c.augmenting_path == path);

  const Instance i3 = fixtures::I3();
  CHECK(is_maximum(i3, M(i3, {{"a2", "b1"}})).maximum);
}

TEST_CASE("matching_cost") {
  const Instance i2 = fixtures::I2_costs();
  CHECK(matching_cost(i2, Matching(2, 2)) == 0);
  CHECK(matching_cost(i2, M(i2, {{"a1", "b1"}, {"a2", "b2"}})) == 2);
  CHECK(matching_cost(i2, M(i2, {{"a1", "b2"}, {"a2", "b1"}})) == 0);
}

TEST_CASE("matching validation and text") {
  const Instance i1 = fixtures::I1();
  CHECK_THROWS_AS(M(i1, {{"a1", "b2"}}), PreconditionError);
  CHECK_THROWS_AS(M(i1, {{"a1", "b1"}, {"a2", "b1"}}), PreconditionError);
  const Matching m = parse_matching(i1, "a2 b2 # comment\n\na1 b1\n");
  CHECK(format_matching(i1, m) == "a1 b1\na2 b2\n");
  CHECK(matching_to_json(i1, m).dump() == R"({"cost":0,"pairs":[["a1","b1"],["a2","b2"]]})");
  CHECK_THROWS_AS(parse_matching(i1, "a1 b9\n"), ParseError);
  CHECK_THROWS_AS(parse_matching(i1, "a1\n"), ParseError);
}

TEST_CASE("core invariants on random instances") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const Instance inst = fixtures::random_small(seed, 6, 0.3);
    const auto all = oracle::enum_matchings(inst, 64);
    int best = 0;
    for (const auto& m : all) best = std::max(best, m.size());
    for (size_t i = 0; i < all.size(); i += 1 + all.size() / 25) {
      const Matching& m = all[i];
      CHECK(is_maximum(inst, m).maximum == (m.size() == best));
      for (const Edge& e : inst.edges()) {
        const int w = wt_edge(inst, m, e);
        CHECK((w == -2 || w == 0 || w == 2));
        if (m.contains(e)) CHECK(w == 0);
      }
      const Matching& n = all[(i * 7 + 3) % all.size()];
      CHECK(compare(inst, m, n).delta() == -compare(inst, n, m).delta());
    }
    CHECK(maximum_matching(inst).size() == best);
  }
}
