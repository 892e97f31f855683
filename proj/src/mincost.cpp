#include "popmax/mincost.hpp"

#include "popmax/certificates.hpp"
#include "popmax/errors.hpp"
#include "popmax/flow.hpp"
#include "popmax/gstar.hpp"

namespace popmax {

MinCostStable min_cost_stable_detail(const Instance& inst, const RotationPoset& poset) {
  const int k = static_cast<int>(poset.rotations.size());
  std::vector<Cost> profit(k, 0);
  Cost positive_total = 0;
  for (int i = 0; i < k; ++i) {
    const Rotation& r = poset.rotations[i];
    Cost delta = 0;
    for (const Edge& e : r.added()) delta += inst.cost(e);
    for (const Edge& e : r.removed()) delta -= inst.cost(e);
    profit[i] = -delta;
    if (profit[i] > 0) positive_total += profit[i];
  }

  // Nodes 0..k-1 are rotations, then source and sink.
  const int source = k;
  const int sink = k + 1;
  FlowNetwork net(k + 2, source, sink);
  const Cost infinite = positive_total + 1;
  for (int i = 0; i < k; ++i) {
    if (profit[i] > 0) net.add_arc(source, i, profit[i]);
    if (profit[i] < 0) net.add_arc(i, sink, -profit[i]);
    for (int p : poset.predecessors[i]) net.add_arc(i, p, infinite);
  }
  const MaxFlowResult flow = max_flow(net);
  if (flow.value != flow.cut_capacity) {
    throw InternalError("max-flow value differs from its cut capacity");
  }

  MinCostStable out;
  out.closure.assign(flow.source_side.begin(), flow.source_side.begin() + k);
  out.matching = apply_rotations(poset, out.closure);
  out.cost = matching_cost(inst, out.matching);
  out.flow_value = flow.value;
  out.cut_capacity = flow.cut_capacity;
  if (out.cost != matching_cost(inst, poset.base) - (positive_total - flow.value)) {
    throw InternalError("closure cost does not match the cut value");
  }
  return out;
}

Matching min_cost_stable(const Instance& inst) {
  return min_cost_stable_detail(inst, find_rotations(inst)).matching;
}

MinCostPopular min_cost_popular_max(const Instance& inst) {
  const GStarInstance gs(inst);
  MinCostPopular out;
  out.gstar_matching = min_cost_stable(gs.inner());
  out.matching = project(gs, out.gstar_matching);
  out.cost = matching_cost(inst, out.matching);
  out.certificate = extract_certificate(inst, gs, out.gstar_matching);
  return out;
}

}  // namespace popmax
