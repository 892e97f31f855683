#include "popmax/level_fit.hpp"

#include <algorithm>

namespace popmax {

std::optional<std::vector<int>> fit_levels(const Instance& inst,
                                           const Matching& m, int top,
                                           const std::vector<int>& hint) {
  std::vector<int> level(inst.num_a(), -1);
  for (int a = 0; a < inst.num_a(); ++a) {
    if (!m.is_matched_a(a)) continue;
    const int h = a < static_cast<int>(hint.size()) ? hint[a] : 0;
    level[a] = std::clamp(h, 0, std::max(top, 0));
  }

  // Lower bounds x_v >= x_u + w, stored as (u, v, w) over A-node pair ids.
  struct Arc {
    int from;
    int to;
    int gap;
  };
  std::vector<Arc> arcs;
  std::vector<bool> pinned_low(inst.num_a(), false);
  for (const Edge& e : inst.edges()) {
    if (m.contains(e)) continue;
    const bool a_free = !m.is_matched_a(e.a);
    const bool b_free = !m.is_matched_b(e.b);
    if (a_free && b_free) return std::nullopt;  // m is not maximum
    if (a_free) {
      level[m.mate_of_b(e.b)] = top;
    } else if (b_free) {
      pinned_low[e.a] = true;
    } else {
      arcs.push_back({e.a, m.mate_of_b(e.b), wt_edge(inst, m, e) / 2});
    }
  }
  if (top < 0 && m.size() > 0) return std::nullopt;

  bool changed = true;
  while (changed) {
    changed = false;
    for (const Arc& arc : arcs) {
      const int want = level[arc.from] + arc.gap;
      if (level[arc.to] < want) {
        if (want > top) return std::nullopt;
        level[arc.to] = want;
        changed = true;
      }
    }
  }
  for (int a = 0; a < inst.num_a(); ++a) {
    if (pinned_low[a] && level[a] != 0) return std::nullopt;
  }
  return level;
}

}  // namespace popmax
