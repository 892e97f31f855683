#ifndef POPMAX_STABLE_HPP_
#define POPMAX_STABLE_HPP_

#include <vector>

#include "popmax/core.hpp"

namespace popmax {

// Proposer-optimal stable matching. Free proposers are served from a FIFO
// queue seeded in declaration order.
Matching gale_shapley(const Instance& inst, Side proposing = Side::kA);

// Edges whose endpoints both strictly prefer each other to their current
// assignment (unmatched = worst), in edge order.
std::vector<Edge> blocking_edges(const Instance& inst, const Matching& m);

bool is_stable(const Instance& inst, const Matching& m);

}  // namespace popmax

#endif  // POPMAX_STABLE_HPP_
