#ifndef POPMAX_RANDOM_INSTANCE_HPP_
#define POPMAX_RANDOM_INSTANCE_HPP_

#include <cstdint>
#include <random>

#include "popmax/cnf.hpp"
#include "popmax/core.hpp"

namespace popmax {

// Uniform integer in [0, n) by rejection, so sequences are identical on
// every platform (std::uniform_int_distribution is not).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

struct RandomInstanceOptions {
  int num_a = 3;
  int num_b = 3;
  double density = 0.5;  // probability of each edge
  std::uint64_t seed = 1;
  Cost max_cost = 0;     // costs uniform in [0, max_cost]
};

// Nodes a1.. and b1..; samples the edge set first, then shuffles every
// node's incident list independently.
Instance random_instance(const RandomInstanceOptions& options);

// 1..max_clauses clauses over 1..max_vars variables, each with 1 to 3
// distinct variables and random signs.
CnfFormula random_formula(int max_vars, int max_clauses, std::uint64_t seed);

}  // namespace popmax

#endif  // POPMAX_RANDOM_INSTANCE_HPP_
