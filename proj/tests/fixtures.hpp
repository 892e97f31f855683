#ifndef POPMAX_TESTS_FIXTURES_HPP_
#define POPMAX_TESTS_FIXTURES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "popmax/core.hpp"
#include "popmax/instance_io.hpp"
#include "popmax/random_instance.hpp"

namespace fixtures {

inline constexpr const char* kI0 =
    "side A a\nside B b\npref a: b\npref b: a\n";
inline constexpr const char* kI1 =
    "side A a1 a2\nside B b1 b2\n"
    "pref a1: b1\npref a2: b1 b2\npref b1: a2 a1\npref b2: a2\n";
inline constexpr const char* kI2 =
    "side A a1 a2\nside B b1 b2\n"
    "pref a1: b1 b2\npref a2: b2 b1\npref b1: a2 a1\npref b2: a1 a2\n";
inline constexpr const char* kI3 =
    "side A a1 a2 a3\nside B b1\n"
    "pref a1: b1\npref a2: b1\npref a3: b1\npref b1: a1 a2 a3\n";
inline constexpr const char* kI5 =
    "side A a1 a2\nside B b1 b2\n"
    "pref a1: b2 b1\npref a2: b1 b2\npref b1: a2 a1\npref b2: a1 a2\n";

inline popmax::Instance I0() { return popmax::parse_instance(kI0); }
inline popmax::Instance I1() { return popmax::parse_instance(kI1); }
inline popmax::Instance I2() { return popmax::parse_instance(kI2); }
inline popmax::Instance I3() { return popmax::parse_instance(kI3); }
inline popmax::Instance I5() { return popmax::parse_instance(kI5); }
// I2 with c(a1,b1) = c(a2,b2) = 1.
inline popmax::Instance I2_costs() {
  return popmax::parse_instance(std::string(kI2) + "cost a1 b1 1\ncost a2 b2 1\n");
}

inline popmax::Matching M(const popmax::Instance& inst,
                          const std::vector<std::pair<std::string, std::string>>& named) {
  std::vector<popmax::Edge> pairs;
  for (const auto& [a, b] : named) pairs.push_back({*inst.find_a(a), *inst.find_b(b)});
  return popmax::Matching::from_pairs(inst, pairs);
}

inline popmax::Edge E(const popmax::Instance& inst, const std::string& a,
                      const std::string& b) {
  return {*inst.find_a(a), *inst.find_b(b)};
}

// Random instance with 2..max_side nodes per side.
inline popmax::Instance random_small(std::uint64_t seed, int max_side, double min_density,
                                     popmax::Cost max_cost = 0) {
  std::mt19937_64 rng(seed * 7919 + 13);
  popmax::RandomInstanceOptions o;
  o.num_a = 2 + static_cast<int>(popmax::uniform_below(rng, max_side - 1));
  o.num_b = 2 + static_cast<int>(popmax::uniform_below(rng, max_side - 1));
  o.density = min_density + (1.0 - min_density) *
                                static_cast<double>(popmax::uniform_below(rng, 1001)) / 1000.0;
  o.seed = seed;
  o.max_cost = max_cost;
  return popmax::random_instance(o);
}

inline std::string names(const popmax::Instance& inst, const popmax::Matching& m) {
  return popmax::format_matching(inst, m);
}

}  // namespace fixtures

#endif  // POPMAX_TESTS_FIXTURES_HPP_
