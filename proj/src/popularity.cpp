#include "popmax/popularity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "popmax/errors.hpp"

namespace popmax {

namespace {

constexpr long long kNegInf = std::numeric_limits<long long>::min() / 4;

int vertex_of_b(const Instance& inst, const Matching& m, int b) {
  return m.is_matched_b(b) ? m.mate_of_b(b) : inst.num_a() + b;
}

Edge pair_at(const Matching& m, int v) { return {v, m.mate_of_a(v)}; }

// Positive-weight directed cycle: Bellman-Ford on negated weights from a
// virtual source joined to every vertex.
std::optional<AlternatingWitness> positive_cycle(const AlternatingDigraph& g,
                                                 const Matching& m) {
  const int n = g.num_vertices;
  std::vector<long long> dist(n, 0);
  std::vector<int> pred(n, -1);  // arc index
  int last = -1;
  for (int round = 0; round < n; ++round) {
    last = -1;
    for (int i = 0; i < static_cast<int>(g.arcs.size()); ++i) {
      const auto& arc = g.arcs[i];
      if (dist[arc.from] - arc.weight < dist[arc.to]) {
        dist[arc.to] = dist[arc.from] - arc.weight;
        pred[arc.to] = i;
        last = arc.to;
      }
    }
    if (last < 0) return std::nullopt;
  }
  if (last < 0) return std::nullopt;
  // Step back n times to land on the cycle itself.
  int v = last;
  for (int i = 0; i < n; ++i) {
    if (pred[v] < 0) throw InternalError("negative-cycle walk left the cycle");
    v = g.arcs[pred[v]].from;
  }
  std::vector<int> cycle_arcs;
  int u = v;
  do {
    cycle_arcs.push_back(pred[u]);
    u = g.arcs[pred[u]].from;
  } while (u != v);
  std::reverse(cycle_arcs.begin(), cycle_arcs.end());

  AlternatingWitness w;
  w.kind = AlternatingWitness::Kind::kCycle;
  for (int i : cycle_arcs) {
    w.pairs.push_back(pair_at(m, g.arcs[i].to));
    w.weight += g.arcs[i].weight;
  }
  return w;
}

std::optional<AlternatingWitness> positive_path_from_free_a(
    const Instance& inst, const Matching& m, const AlternatingDigraph& g) {
  const int n = g.num_vertices;
  std::vector<long long> dist(n, kNegInf);
  std::vector<int> pred(n, -1);
  for (int a = 0; a < inst.num_a(); ++a) {
    if (!m.is_matched_a(a)) dist[a] = 0;
  }
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (int i = 0; i < static_cast<int>(g.arcs.size()); ++i) {
      const auto& arc = g.arcs[i];
      if (dist[arc.from] == kNegInf) continue;
      if (dist[arc.from] + arc.weight > dist[arc.to]) {
        dist[arc.to] = dist[arc.from] + arc.weight;
        pred[arc.to] = i;
        changed = true;
      }
    }
    if (!changed) break;
  }
  int best = -1;
  for (int a = 0; a < inst.num_a(); ++a) {
    if (m.is_matched_a(a) && dist[a] > 0 && (best < 0 || dist[a] > dist[best])) {
      best = a;
    }
  }
  if (best < 0) return std::nullopt;

  AlternatingWitness w;
  w.kind = AlternatingWitness::Kind::kPath;
  int v = best;
  for (int steps = 0; pred[v] >= 0; ++steps) {
    if (steps > n) throw InternalError("longest-path predecessors form a cycle");
    w.pairs.push_back(pair_at(m, v));
    w.weight += g.arcs[pred[v]].weight;
    v = g.arcs[pred[v]].from;
  }
  w.free_a = v;
  std::reverse(w.pairs.begin(), w.pairs.end());
  return w;
}

std::optional<AlternatingWitness> positive_path_to_free_b(
    const Instance& inst, const Matching& m, const AlternatingDigraph& g) {
  const int n = g.num_vertices;
  std::vector<long long> dist(n, kNegInf);
  std::vector<int> succ(n, -1);
  for (int b = 0; b < inst.num_b(); ++b) {
    if (!m.is_matched_b(b)) dist[inst.num_a() + b] = 0;
  }
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (int i = 0; i < static_cast<int>(g.arcs.size()); ++i) {
      const auto& arc = g.arcs[i];
      if (dist[arc.to] == kNegInf) continue;
      if (dist[arc.to] + arc.weight > dist[arc.from]) {
        dist[arc.from] = dist[arc.to] + arc.weight;
        succ[arc.from] = i;
        changed = true;
      }
    }
    if (!changed) break;
  }
  int best = -1;
  for (int a = 0; a < inst.num_a(); ++a) {
    if (m.is_matched_a(a) && dist[a] > 0 && (best < 0 || dist[a] > dist[best])) {
      best = a;
    }
  }
  if (best < 0) return std::nullopt;

  AlternatingWitness w;
  w.kind = AlternatingWitness::Kind::kPath;
  int v = best;
  for (int steps = 0; v < inst.num_a(); ++steps) {
    if (steps > n) throw InternalError("longest-path successors form a cycle");
    w.pairs.push_back(pair_at(m, v));
    w.weight += g.arcs[succ[v]].weight;
    v = g.arcs[succ[v]].to;
  }
  w.free_b = v - inst.num_a();
  return w;
}

}  // namespace

AlternatingDigraph build_alternating_digraph(const Instance& inst,
                                             const Matching& m) {
  AlternatingDigraph g;
  g.num_vertices = inst.num_a() + inst.num_b();
  for (const Edge& e : inst.edges()) {
    if (m.contains(e)) continue;
    g.arcs.push_back({e.a, vertex_of_b(inst, m, e.b), wt_edge(inst, m, e), e});
  }
  return g;
}

std::vector<Edge> AlternatingWitness::edges() const {
  std::vector<Edge> out;
  const int k = static_cast<int>(pairs.size());
  if (kind == Kind::kCycle) {
    for (int i = 0; i < k; ++i) {
      out.push_back(pairs[i]);
      out.push_back({pairs[i].a, pairs[(i + 1) % k].b});
    }
    return out;
  }
  if (k == 0) {
    if (free_a && free_b) out.push_back({*free_a, *free_b});
    return out;
  }
  if (free_a) out.push_back({*free_a, pairs.front().b});
  for (int i = 0; i < k; ++i) {
    out.push_back(pairs[i]);
    if (i + 1 < k) out.push_back({pairs[i].a, pairs[i + 1].b});
  }
  if (free_b) out.push_back({pairs.back().a, *free_b});
  return out;
}

std::string format_witness(const Instance& inst, const AlternatingWitness& w) {
  std::ostringstream out;
  out << (w.kind == AlternatingWitness::Kind::kCycle ? "cycle:" : "path:");
  if (w.free_a) out << ' ' << inst.a_name(*w.free_a);
  for (const Edge& p : w.pairs) {
    out << " (" << inst.b_name(p.b) << ',' << inst.a_name(p.a) << ')';
  }
  if (w.free_b) out << ' ' << inst.b_name(*w.free_b);
  out << " wt=" << w.weight << '\n';
  for (const Edge& e : w.edges()) {
    out << inst.a_name(e.a) << ' ' << inst.b_name(e.b) << '\n';
  }
  return out.str();
}

PopularityVerdict verify_popular_max(const Instance& inst, const Matching& m) {
  if (!is_maximum(inst, m).maximum) {
    throw PreconditionError("popularity among maximum matchings needs a "
                            "maximum matching");
  }
  const AlternatingDigraph g = build_alternating_digraph(inst, m);
  PopularityVerdict verdict;
  verdict.witness = positive_cycle(g, m);
  if (!verdict.witness) verdict.witness = positive_path_from_free_a(inst, m, g);
  if (!verdict.witness) verdict.witness = positive_path_to_free_b(inst, m, g);
  verdict.popular = !verdict.witness.has_value();
  return verdict;
}

ParetoVerdict is_pareto_optimal(const Instance& inst, const Matching& m) {
  const AlternatingDigraph g = build_alternating_digraph(inst, m);
  const int n = g.num_vertices;
  std::vector<std::vector<int>> out_arcs(n);
  for (int i = 0; i < static_cast<int>(g.arcs.size()); ++i) {
    if (g.arcs[i].weight == 2) out_arcs[g.arcs[i].from].push_back(i);
  }

  ParetoVerdict verdict;

  // Cycle of blocking edges: iterative DFS, a grey target closes a cycle.
  std::vector<int> color(n, 0);
  std::vector<int> entry_arc(n, -1);
  for (int root = 0; root < n && !verdict.witness; ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty() && !verdict.witness) {
      auto& [v, next] = stack.back();
      if (next == out_arcs[v].size()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      const int arc = out_arcs[v][next++];
      const int to = g.arcs[arc].to;
      if (color[to] == 0) {
        color[to] = 1;
        entry_arc[to] = arc;
        stack.push_back({to, 0});
      } else if (color[to] == 1) {
        std::vector<int> arcs{arc};
        for (int u = v; u != to; u = g.arcs[entry_arc[u]].from) {
          arcs.push_back(entry_arc[u]);
        }
        std::reverse(arcs.begin(), arcs.end());
        AlternatingWitness w;
        w.kind = AlternatingWitness::Kind::kCycle;
        for (int i : arcs) {
          w.pairs.push_back(pair_at(m, g.arcs[i].to));
          w.weight += 2;
        }
        verdict.witness = w;
      }
    }
  }

  // Augmenting path of blocking edges.
  if (!verdict.witness) {
    std::vector<int> pred(n, -2);
    std::deque<int> queue;
    for (int a = 0; a < inst.num_a(); ++a) {
      if (!m.is_matched_a(a)) {
        pred[a] = -1;
        queue.push_back(a);
      }
    }
    while (!queue.empty() && !verdict.witness) {
      const int v = queue.front();
      queue.pop_front();
      for (int arc : out_arcs[v]) {
        const int to = g.arcs[arc].to;
        if (pred[to] != -2) continue;
        pred[to] = arc;
        if (to >= inst.num_a()) {
          AlternatingWitness w;
          w.kind = AlternatingWitness::Kind::kPath;
          w.free_b = to - inst.num_a();
          int u = to;
          while (pred[u] >= 0) {
            w.weight += 2;
            u = g.arcs[pred[u]].from;
            if (pred[u] >= 0) w.pairs.push_back(pair_at(m, u));
          }
          w.free_a = u;
          std::reverse(w.pairs.begin(), w.pairs.end());
          verdict.witness = w;
          break;
        }
        queue.push_back(to);
      }
    }
  }
  verdict.optimal = !verdict.witness.has_value();
  return verdict;
}

}  // namespace popmax
