#ifndef POPMAX_MINCOST_HPP_
#define POPMAX_MINCOST_HPP_

#include <vector>

#include "popmax/certificate.hpp"
#include "popmax/core.hpp"
#include "popmax/rotations.hpp"

namespace popmax {

struct MinCostStable {
  Matching matching;
  Cost cost = 0;
  std::vector<bool> closure;  // rotations eliminated from the poset base
  Cost flow_value = 0;
  Cost cut_capacity = 0;
};

// Minimum-cost stable matching. cost(closed set S) = cost(base) + sum of
// delta(r) over r in S, with delta(r) = cost(added) - cost(removed); the
// best S is a maximum-weight closure (weight -delta), found by a minimum
// cut. Among optimal sets the inclusion-minimal one is returned.
MinCostStable min_cost_stable_detail(const Instance& inst, const RotationPoset& poset);
Matching min_cost_stable(const Instance& inst);

struct MinCostPopular {
  Matching matching;
  Cost cost = 0;
  DualCertificate certificate;
  Matching gstar_matching;  // the stable matching of G* it projects from
};

// Minimum-cost popular max-matching: min-cost stable matching of G* (costs
// lifted, dummy edges free), projected to the source.
MinCostPopular min_cost_popular_max(const Instance& inst);

}  // namespace popmax

#endif  // POPMAX_MINCOST_HPP_
