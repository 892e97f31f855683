#include "popmax/rotations.hpp"

#include <algorithm>
#include <map>

#include "popmax/errors.hpp"
#include "popmax/stable.hpp"

namespace popmax {

std::vector<Edge> Rotation::added() const {
  std::vector<Edge> out;
  const size_t k = pairs.size();
  for (size_t i = 0; i < k; ++i) out.push_back({pairs[i].a, pairs[(i + 1) % k].b});
  return out;
}

namespace {

void eliminate(Matching& m, const Rotation& r) {
  for (const Edge& e : r.pairs) {
    if (!m.contains(e)) throw PreconditionError("rotation is not exposed");
    m.remove(e);
  }
  for (const Edge& e : r.added()) m.add(e);
}

// next(m) = M(s_M(m)) where s_M(m) is the first woman below M(m) on m's list
// who prefers m to her partner; -1 when there is none. The scan stops at m's
// partner in the B-optimal matching: with incomplete lists a woman further
// down may be willing although the pair is in no stable matching.
std::vector<int> next_men(const Instance& inst, const Matching& m,
                          const Matching& b_optimal) {
  std::vector<int> next(inst.num_a(), -1);
  for (int a = 0; a < inst.num_a(); ++a) {
    if (!m.is_matched_a(a)) continue;
    const auto list = inst.a_prefs(a);
    const int last = inst.a_rank(a, b_optimal.mate_of_a(a));
    for (int r = inst.a_rank(a, m.mate_of_a(a)) + 1; r <= last; ++r) {
      const int w = list[r];
      if (m.is_matched_b(w) && inst.b_rank(w, a) < partner_rank_b(inst, m, w)) {
        next[a] = m.mate_of_b(w);
        break;
      }
    }
  }
  return next;
}

std::optional<Rotation> exposed_rotation(const Instance& inst, const Matching& m,
                                         const Matching& b_optimal, bool reverse_scan) {
  const std::vector<int> next = next_men(inst, m, b_optimal);
  const int n = inst.num_a();
  std::vector<int> state(n, -1);  // trail id that visited the node
  for (int k = 0; k < n; ++k) {
    const int start = reverse_scan ? n - 1 - k : k;
    std::vector<int> trail;
    int v = start;
    while (v >= 0 && state[v] < 0) {
      state[v] = start;
      trail.push_back(v);
      v = next[v];
    }
    if (v < 0 || state[v] != start) continue;
    auto from = std::find(trail.begin(), trail.end(), v);
    std::vector<int> men(from, trail.end());
    std::rotate(men.begin(), std::min_element(men.begin(), men.end()), men.end());
    Rotation r;
    for (int a : men) r.pairs.push_back({a, m.mate_of_a(a)});
    return r;
  }
  return std::nullopt;
}

}  // namespace

RotationPoset find_rotations(const Instance& inst, bool reverse_scan) {
  RotationPoset poset;
  poset.base = gale_shapley(inst, Side::kA);
  const Matching b_optimal = gale_shapley(inst, Side::kB);
  Matching m = poset.base;
  while (auto r = exposed_rotation(inst, m, b_optimal, reverse_scan)) {
    eliminate(m, *r);
    poset.rotations.push_back(std::move(*r));
  }
  if (!(m == b_optimal)) {
    throw InternalError("rotation elimination did not reach the B-optimal "
                        "stable matching");
  }

  const int k = static_cast<int>(poset.rotations.size());
  // Rotation that contains a pair, and rotation that produces a pair.
  std::map<Edge, int> contains;
  std::map<Edge, int> produces;
  // Per woman: (old partner, new partner, rotation).
  std::vector<std::vector<std::tuple<int, int, int>>> moves(inst.num_b());
  for (int i = 0; i < k; ++i) {
    const Rotation& r = poset.rotations[i];
    const auto added = r.added();
    for (const Edge& e : r.pairs) contains[e] = i;
    for (const Edge& e : added) {
      produces[e] = i;
      const int old_partner = std::find_if(r.pairs.begin(), r.pairs.end(),
                                           [&](const Edge& p) { return p.b == e.b; })
                                  ->a;
      moves[e.b].emplace_back(old_partner, e.a, i);
    }
  }

  poset.predecessors.assign(k, {});
  for (int i = 0; i < k; ++i) {
    const Rotation& r = poset.rotations[i];
    std::vector<int>& preds = poset.predecessors[i];
    for (const Edge& e : r.pairs) {
      auto it = produces.find(e);
      if (it != produces.end()) preds.push_back(it->second);
    }
    for (const Edge& e : r.added()) {
      const auto list = inst.a_prefs(e.a);
      const int lo = inst.a_rank(e.a, std::find_if(r.pairs.begin(), r.pairs.end(),
                                                   [&](const Edge& p) {
                                                     return p.a == e.a;
                                                   })->b);
      const int hi = inst.a_rank(e.a, e.b);
      for (int pos = lo + 1; pos < hi; ++pos) {
        const int w = list[pos];
        const int rank_m = inst.b_rank(w, e.a);
        for (const auto& [old_partner, new_partner, j] : moves[w]) {
          if (inst.b_rank(w, old_partner) > rank_m &&
              inst.b_rank(w, new_partner) < rank_m) {
            preds.push_back(j);
          }
        }
      }
    }
    std::sort(preds.begin(), preds.end());
    preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
    if (!preds.empty() && preds.back() >= i) {
      throw InternalError("rotation precedence contradicts discovery order");
    }
  }
  return poset;
}

Matching apply_rotations(const RotationPoset& poset, const std::vector<bool>& chosen) {
  Matching m = poset.base;
  for (int i = 0; i < static_cast<int>(poset.rotations.size()); ++i) {
    if (!chosen[i]) continue;
    for (int p : poset.predecessors[i]) {
      if (!chosen[p]) throw PreconditionError("rotation set is not closed");
    }
    eliminate(m, poset.rotations[i]);
  }
  return m;
}

StableEnumeration enumerate_stable(const Instance& inst, long long limit) {
  const RotationPoset poset = find_rotations(inst);
  const int k = static_cast<int>(poset.rotations.size());
  StableEnumeration out;
  std::vector<bool> chosen(k, false);

  // Include/exclude over rotations in topological order; a rotation may be
  // included only after all of its predecessors.
  auto recurse = [&](auto&& self, int i, const Matching& m) -> bool {
    if (i == k) {
      if (static_cast<long long>(out.matchings.size()) >= limit) {
        out.complete = false;
        return false;
      }
      out.matchings.push_back(m);
      return true;
    }
    if (!self(self, i + 1, m)) return false;
    const auto& preds = poset.predecessors[i];
    if (std::all_of(preds.begin(), preds.end(), [&](int p) { return chosen[p]; })) {
      Matching next = m;
      eliminate(next, poset.rotations[i]);
      chosen[i] = true;
      const bool ok = self(self, i + 1, next);
      chosen[i] = false;
      if (!ok) return false;
    }
    return true;
  };
  recurse(recurse, 0, poset.base);
  return out;
}

}  // namespace popmax
