#include "popmax/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "popmax/errors.hpp"

namespace popmax {

FlowNetwork::FlowNetwork(int num_nodes, int source, int sink)
    : num_nodes_(num_nodes), source_(source), sink_(sink) {
  if (source < 0 || source >= num_nodes || sink < 0 || sink >= num_nodes ||
      source == sink) {
    throw PreconditionError("flow network needs distinct source and sink nodes");
  }
}

int FlowNetwork::add_arc(int from, int to, Cost capacity) {
  if (from < 0 || from >= num_nodes_ || to < 0 || to >= num_nodes_) {
    throw PreconditionError("arc endpoint out of range");
  }
  if (capacity < 0) throw PreconditionError("negative arc capacity");
  arcs_.push_back({from, to, capacity});
  return static_cast<int>(arcs_.size()) - 1;
}

namespace {

class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : n_(net.num_nodes()), adj_(n_), level_(n_), it_(n_) {
    for (const auto& arc : net.arcs()) {
      adj_[arc.from].push_back(static_cast<int>(to_.size()));
      to_.push_back(arc.to);
      cap_.push_back(arc.capacity);
      adj_[arc.to].push_back(static_cast<int>(to_.size()));
      to_.push_back(arc.from);
      cap_.push_back(0);
    }
    original_ = cap_;
  }

  Cost run(int s, int t) {
    Cost total = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (Cost pushed = dfs(s, t, std::numeric_limits<Cost>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(n_, false);
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int e : adj_[v]) {
        if (cap_[e] > 0 && !seen[to_[e]]) {
          seen[to_[e]] = true;
          queue.push_back(to_[e]);
        }
      }
    }
    return seen;
  }

  Cost flow_on(int arc) const { return original_[2 * arc] - cap_[2 * arc]; }

 private:
  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int e : adj_[v]) {
        if (cap_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[v] + 1;
          queue.push_back(to_[e]);
        }
      }
    }
    return level_[t] >= 0;
  }

  Cost dfs(int v, int t, Cost limit) {
    if (v == t) return limit;
    for (int& i = it_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      const int e = adj_[v][i];
      const int w = to_[e];
      if (cap_[e] <= 0 || level_[w] != level_[v] + 1) continue;
      const Cost got = dfs(w, t, std::min(limit, cap_[e]));
      if (got > 0) {
        cap_[e] -= got;
        cap_[e ^ 1] += got;
        return got;
      }
    }
    return 0;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<Cost> cap_;
  std::vector<Cost> original_;
  std::vector<int> level_;
  std::vector<int> it_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
  Dinic dinic(net);
  MaxFlowResult result;
  result.value = dinic.run(net.source(), net.sink());
  result.source_side = dinic.reachable(net.source());
  const auto& arcs = net.arcs();
  result.arc_flow.resize(arcs.size());
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    result.arc_flow[i] = dinic.flow_on(i);
    if (result.source_side[arcs[i].from] && !result.source_side[arcs[i].to]) {
      result.cut_capacity += arcs[i].capacity;
    }
  }
  return result;
}

}  // namespace popmax
