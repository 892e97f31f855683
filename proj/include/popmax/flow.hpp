#ifndef POPMAX_FLOW_HPP_
#define POPMAX_FLOW_HPP_

#include <vector>

#include "popmax/core.hpp"

namespace popmax {

// Directed network with non-negative integer capacities.
class FlowNetwork {
 public:
  struct Arc {
    int from;
    int to;
    Cost capacity;
  };

  FlowNetwork(int num_nodes, int source, int sink);

  // Returns the arc index. Throws PreconditionError on a negative capacity
  // or an out-of-range endpoint.
  int add_arc(int from, int to, Cost capacity);

  int num_nodes() const { return num_nodes_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  int num_nodes_;
  int source_;
  int sink_;
  std::vector<Arc> arcs_;
};

struct MaxFlowResult {
  Cost value = 0;
  std::vector<Cost> arc_flow;     // per arc of the network
  std::vector<bool> source_side;  // nodes reachable from the source in the
                                  // final residual graph (smallest min cut)
  Cost cut_capacity = 0;          // capacity of arcs leaving source_side
};

// Dinic's algorithm.
MaxFlowResult max_flow(const FlowNetwork& net);

}  // namespace popmax

#endif  // POPMAX_FLOW_HPP_
