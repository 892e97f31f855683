#ifndef POPMAX_POPULARITY_HPP_
#define POPMAX_POPULARITY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "popmax/core.hpp"

namespace popmax {

// One vertex per matched pair plus one per unmatched node, and one arc per
// non-matching edge (a, b) from vertex(a) to vertex(b) weighted wt_M(a, b).
// A pair vertex is entered through its B-node and left through its A-node,
// so directed walks are exactly alternating walks.
//
// Vertex ids: a matched pair and an unmatched A-node use the A index; an
// unmatched B-node b uses num_a + b. Ids of matched B-nodes are unused.
struct AlternatingDigraph {
  struct Arc {
    int from;
    int to;
    int weight;
    Edge edge;
  };
  int num_vertices = 0;
  std::vector<Arc> arcs;
};

AlternatingDigraph build_alternating_digraph(const Instance& inst,
                                             const Matching& m);

// An alternating cycle or path. Matched pairs are listed in traversal order;
// between consecutive pairs the walk uses the non-matching edge from the
// earlier pair's A-node to the later pair's B-node (and, for a cycle, from
// the last pair back to the first).
struct AlternatingWitness {
  enum class Kind { kCycle, kPath };
  Kind kind = Kind::kPath;
  std::optional<int> free_a;  // path start, unmatched A-node
  std::vector<Edge> pairs;
  std::optional<int> free_b;  // path end, unmatched B-node
  int weight = 0;             // wt_M of the witness

  // Every edge of the cycle/path in walk order.
  std::vector<Edge> edges() const;
};

// "cycle: (b1,a1) (b2,a2) wt=4" or "path: a1 (b1,a3) wt=2", then one
// "<idA> <idB>" line per edge in walk order.
std::string format_witness(const Instance& inst, const AlternatingWitness& w);

struct PopularityVerdict {
  bool popular = true;
  std::optional<AlternatingWitness> witness;
};

// Popular among maximum matchings iff there is no alternating cycle and no
// alternating path with an unmatched endpoint of positive weight. A cycle
// witness is preferred when both kinds exist. Throws PreconditionError when
// m is not maximum.
PopularityVerdict verify_popular_max(const Instance& inst, const Matching& m);

struct ParetoVerdict {
  bool optimal = true;
  // Cycle or augmenting path made of blocking edges; applying it makes every
  // node on it strictly better off.
  std::optional<AlternatingWitness> witness;
};

ParetoVerdict is_pareto_optimal(const Instance& inst, const Matching& m);

}  // namespace popmax

#endif  // POPMAX_POPULARITY_HPP_
