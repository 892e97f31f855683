#ifndef POPMAX_ORACLE_HPP_
#define POPMAX_ORACLE_HPP_

#include <string>
#include <vector>

#include "popmax/core.hpp"

namespace popmax::oracle {

// Exhaustive ground truth. Everything here works straight from the
// definitions (votes, blocking pairs, sizes) on enumerated matchings and
// shares no logic with the polynomial algorithms. Exponential; every entry
// point throws BoundExceeded when the instance has more than max_edges
// edges.

inline constexpr int kDefaultEdgeBound = 24;

// All matchings including the empty one, by recursive inclusion/exclusion
// over the edge list.
std::vector<Matching> enum_matchings(const Instance& inst,
                                     int max_edges = kDefaultEdgeBound);

std::vector<Matching> enum_max_matchings(const Instance& inst,
                                         int max_edges = kDefaultEdgeBound);

// Maximum matchings M with votes(M, N) >= votes(N, M) for every maximum N.
// Candidates are checked in parallel with OpenMP; the serial variant is the
// reference it is tested against.
std::vector<Matching> brute_popular_max(const Instance& inst,
                                        int max_edges = kDefaultEdgeBound);
std::vector<Matching> brute_popular_max_serial(const Instance& inst,
                                               int max_edges = kDefaultEdgeBound);

// True iff m is maximum and popular among maximum matchings.
bool brute_is_popular_max(const Instance& inst, const Matching& m,
                          int max_edges = kDefaultEdgeBound);

struct MinCostResult {
  Matching matching;
  Cost cost = 0;
};

// Cheapest popular max-matching; ties go to the lexicographically smallest
// sorted edge list.
MinCostResult brute_min_cost_popular_max(const Instance& inst,
                                         int max_edges = kDefaultEdgeBound);

// max over N of votes(N, M) / votes(M, N); N with votes(N, M) = 0 count as 0.
struct Unpopularity {
  bool infinite = false;
  long long num = 0;  // reduced fraction when finite
  long long den = 1;

  std::string to_string() const;
  friend bool operator==(const Unpopularity&, const Unpopularity&) = default;
};

Unpopularity brute_unpopularity_factor(const Instance& inst, const Matching& m,
                                       int max_edges = kDefaultEdgeBound);

// No N with votes(M, N) = 0 and votes(N, M) > 0.
bool brute_is_pareto_optimal(const Instance& inst, const Matching& m,
                             int max_edges = kDefaultEdgeBound);

std::vector<Matching> brute_stable_matchings(const Instance& inst,
                                             int max_edges = kDefaultEdgeBound);

}  // namespace popmax::oracle

#endif  // POPMAX_ORACLE_HPP_
