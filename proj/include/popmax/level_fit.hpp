#ifndef POPMAX_LEVEL_FIT_HPP_
#define POPMAX_LEVEL_FIT_HPP_

#include <optional>
#include <vector>

#include "popmax/core.hpp"

namespace popmax {

// Assigns an integer level to every pair of the matching m so that
//
//   level(pair of b) - level(pair of a) >= wt_M(a, b) / 2
//       for every non-matching edge (a, b) with both ends matched,
//   0 <= level <= top,
//   level = 0   for pairs whose A-node has an unmatched neighbour,
//   level = top for pairs whose B-node has an unmatched neighbour.
//
// These are the difference constraints behind a dual certificate (with top
// = |M| - 1) and behind a stable preimage in G* (with top = |A| - 1).
// Returns the least solution that is pointwise >= hint (hint clipped into
// [0, top]), indexed by A-node with -1 for unmatched nodes, or nullopt if no
// such solution exists.
std::optional<std::vector<int>> fit_levels(const Instance& inst,
                                           const Matching& m, int top,
                                           const std::vector<int>& hint);

}  // namespace popmax

#endif  // POPMAX_LEVEL_FIT_HPP_
