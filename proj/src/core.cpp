#include "popmax/core.hpp"

#include <algorithm>
#include <deque>

#include "popmax/errors.hpp"

namespace popmax {

namespace {

// (neighbour, position) pairs sorted by neighbour; rejects duplicates.
std::vector<std::pair<int, int>> positions(std::span<const int> list,
                                           int limit, const std::string& owner,
                                           const std::vector<std::string>& names) {
  std::vector<std::pair<int, int>> out;
  out.reserve(list.size());
  for (int r = 0; r < static_cast<int>(list.size()); ++r) {
    if (list[r] < 0 || list[r] >= limit) {
      throw ValidationError("preference list of '" + owner +
                            "' names a node outside the opposite side");
    }
    out.emplace_back(list[r], r);
  }
  std::sort(out.begin(), out.end());
  for (size_t i = 1; i < out.size(); ++i) {
    if (out[i].first == out[i - 1].first) {
      throw ValidationError("tie/duplicate: '" + names[out[i].first] +
                            "' appears twice in the list of '" + owner + "'");
    }
  }
  return out;
}

}  // namespace

Instance::Instance(std::vector<std::string> a_names,
                   std::vector<std::string> b_names,
                   std::vector<std::vector<int>> a_prefs,
                   std::vector<std::vector<int>> b_prefs,
                   const std::map<Edge, Cost>& costs)
    : a_names_(std::move(a_names)),
      b_names_(std::move(b_names)),
      a_prefs_(std::move(a_prefs)),
      b_prefs_(std::move(b_prefs)) {
  if (a_prefs_.size() != a_names_.size() ||
      b_prefs_.size() != b_names_.size()) {
    throw ValidationError("one preference list is required per node");
  }
  for (int a = 0; a < num_a(); ++a) {
    if (a_names_[a].empty()) throw ValidationError("empty node identifier");
    if (!by_name_.emplace(a_names_[a], std::make_pair(Side::kA, a)).second) {
      throw ValidationError("duplicate node '" + a_names_[a] + "'");
    }
  }
  for (int b = 0; b < num_b(); ++b) {
    if (b_names_[b].empty()) throw ValidationError("empty node identifier");
    if (!by_name_.emplace(b_names_[b], std::make_pair(Side::kB, b)).second) {
      throw ValidationError("duplicate node '" + b_names_[b] + "'");
    }
  }

  std::vector<std::vector<std::pair<int, int>>> b_pos(num_b());
  for (int b = 0; b < num_b(); ++b) {
    b_pos[b] = positions(b_prefs_[b], num_a(), b_names_[b], a_names_);
  }

  a_index_.resize(num_a());
  size_t b_side_edges = 0;
  for (const auto& p : b_pos) b_side_edges += p.size();
  for (int a = 0; a < num_a(); ++a) {
    positions(a_prefs_[a], num_b(), a_names_[a], b_names_);
    const auto& list = a_prefs_[a];
    for (int r = 0; r < static_cast<int>(list.size()); ++r) {
      const int b = list[r];
      auto it = std::lower_bound(b_pos[b].begin(), b_pos[b].end(),
                                 std::make_pair(a, -1));
      if (it == b_pos[b].end() || it->first != a) {
        throw ValidationError("non-mutual preference: '" + a_names_[a] +
                              "' lists '" + b_names_[b] + "' but not vice versa");
      }
      const int id = static_cast<int>(edges_.size());
      edges_.push_back({a, b});
      rank_in_a_.push_back(r);
      rank_in_b_.push_back(it->second);
      a_index_[a].emplace_back(b, id);
    }
    std::sort(a_index_[a].begin(), a_index_[a].end());
  }
  if (edges_.size() != b_side_edges) {
    // Some b lists an a that does not list b back.
    for (int b = 0; b < num_b(); ++b) {
      for (int a : b_prefs_[b]) {
        if (edge_id(a, b) < 0) {
          throw ValidationError("non-mutual preference: '" + b_names_[b] +
                                "' lists '" + a_names_[a] +
                                "' but not vice versa");
        }
      }
    }
  }

  costs_.assign(edges_.size(), 0);
  for (const auto& [e, c] : costs) {
    const int id = (e.a >= 0 && e.a < num_a()) ? edge_id(e.a, e.b) : -1;
    if (id < 0) throw ValidationError("cost given for a non-edge");
    costs_[id] = c;
  }
}

int Instance::edge_id(int a, int b) const {
  const auto& idx = a_index_[a];
  auto it = std::lower_bound(idx.begin(), idx.end(), std::make_pair(b, -1));
  return (it != idx.end() && it->first == b) ? it->second : -1;
}

int Instance::a_rank(int a, int b) const {
  const int id = edge_id(a, b);
  return id < 0 ? -1 : rank_in_a_[id];
}

int Instance::b_rank(int b, int a) const {
  const int id = edge_id(a, b);
  return id < 0 ? -1 : rank_in_b_[id];
}

Cost Instance::cost(int a, int b) const {
  const int id = edge_id(a, b);
  return id < 0 ? 0 : costs_[id];
}

std::optional<int> Instance::find_a(std::string_view name) const {
  auto hit = find(name);
  if (!hit || hit->first != Side::kA) return std::nullopt;
  return hit->second;
}

std::optional<int> Instance::find_b(std::string_view name) const {
  auto hit = find(name);
  if (!hit || hit->first != Side::kB) return std::nullopt;
  return hit->second;
}

std::optional<std::pair<Side, int>> Instance::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const Instance& x, const Instance& y) {
  return x.a_names_ == y.a_names_ && x.b_names_ == y.b_names_ &&
         x.a_prefs_ == y.a_prefs_ && x.b_prefs_ == y.b_prefs_ &&
         x.costs_ == y.costs_;
}

Matching Matching::from_pairs(const Instance& inst, std::span<const Edge> pairs) {
  Matching m(inst.num_a(), inst.num_b());
  for (const Edge& e : pairs) {
    if (e.a < 0 || e.a >= inst.num_a() || e.b < 0 || e.b >= inst.num_b() ||
        !inst.has_edge(e.a, e.b)) {
      throw PreconditionError("matching pair is not an edge of the instance");
    }
    if (m.is_matched_a(e.a) || m.is_matched_b(e.b)) {
      throw PreconditionError("matching pairs are not node-disjoint at '" +
                              (m.is_matched_a(e.a) ? inst.a_name(e.a)
                                                   : inst.b_name(e.b)) +
                              "'");
    }
    m.add(e);
  }
  return m;
}

void Matching::add(const Edge& e) {
  if (mate_a_[e.a] >= 0 || mate_b_[e.b] >= 0) {
    throw PreconditionError("edge endpoint already matched");
  }
  mate_a_[e.a] = e.b;
  mate_b_[e.b] = e.a;
  ++size_;
}

void Matching::remove(const Edge& e) {
  if (mate_a_[e.a] != e.b) throw PreconditionError("edge not in matching");
  mate_a_[e.a] = -1;
  mate_b_[e.b] = -1;
  --size_;
}

std::vector<Edge> Matching::pairs() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (int a = 0; a < num_a(); ++a) {
    if (mate_a_[a] >= 0) out.push_back({a, mate_a_[a]});
  }
  return out;
}

Matching symmetric_difference(const Matching& m, std::span<const Edge> edges) {
  Matching out = m;
  std::vector<Edge> adds;
  for (const Edge& e : edges) {
    if (out.contains(e)) {
      out.remove(e);
    } else {
      adds.push_back(e);
    }
  }
  for (const Edge& e : adds) out.add(e);
  return out;
}

int partner_rank_a(const Instance& inst, const Matching& m, int a) {
  const int b = m.mate_of_a(a);
  return b < 0 ? kUnmatchedRank : inst.a_rank(a, b);
}

int partner_rank_b(const Instance& inst, const Matching& m, int b) {
  const int a = m.mate_of_b(b);
  return a < 0 ? kUnmatchedRank : inst.b_rank(b, a);
}

int wt_edge(const Instance& inst, const Matching& m, const Edge& e) {
  const int id = (e.a >= 0 && e.a < inst.num_a() && e.b >= 0 &&
                  e.b < inst.num_b())
                     ? inst.edge_id(e.a, e.b)
                     : -1;
  if (id < 0) throw PreconditionError("wt_edge: not an edge");
  if (m.contains(e)) return 0;
  const int ra = inst.a_rank(e.a, e.b);
  const int rb = inst.b_rank(e.b, e.a);
  const bool a_wants = ra < partner_rank_a(inst, m, e.a);
  const bool b_wants = rb < partner_rank_b(inst, m, e.b);
  if (a_wants && b_wants) return 2;
  if (!a_wants && !b_wants) return -2;
  return 0;
}

VoteTally compare(const Instance& inst, const Matching& m, const Matching& n) {
  VoteTally t;
  auto vote = [&t](int rank_m, int rank_n) {
    if (rank_m < rank_n) ++t.phi_mn;
    if (rank_n < rank_m) ++t.phi_nm;
  };
  for (int a = 0; a < inst.num_a(); ++a) {
    vote(partner_rank_a(inst, m, a), partner_rank_a(inst, n, a));
  }
  for (int b = 0; b < inst.num_b(); ++b) {
    vote(partner_rank_b(inst, m, b), partner_rank_b(inst, n, b));
  }
  return t;
}

MaximumCheck is_maximum(const Instance& inst, const Matching& m) {
  // BFS over alternating paths from every free A-node.
  std::vector<int> parent_b(inst.num_b(), -2);  // A-node we came from
  std::deque<int> queue;
  std::vector<bool> seen_a(inst.num_a(), false);
  for (int a = 0; a < inst.num_a(); ++a) {
    if (!m.is_matched_a(a)) {
      seen_a[a] = true;
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int b : inst.a_prefs(a)) {
      if (parent_b[b] != -2 || m.mate_of_a(a) == b) continue;
      parent_b[b] = a;
      const int next = m.mate_of_b(b);
      if (next < 0) {
        MaximumCheck out;
        out.maximum = false;
        int cur_b = b;
        while (true) {
          const int pa = parent_b[cur_b];
          out.augmenting_path.push_back({pa, cur_b});
          const int prev_b = m.mate_of_a(pa);
          if (prev_b < 0) break;
          out.augmenting_path.push_back({pa, prev_b});
          cur_b = prev_b;
        }
        std::reverse(out.augmenting_path.begin(), out.augmenting_path.end());
        return out;
      }
      if (!seen_a[next]) {
        seen_a[next] = true;
        queue.push_back(next);
      }
    }
  }
  return {};
}

Matching maximum_matching(const Instance& inst) {
  Matching m(inst.num_a(), inst.num_b());
  while (true) {
    MaximumCheck check = is_maximum(inst, m);
    if (check.maximum) return m;
    m = symmetric_difference(m, check.augmenting_path);
  }
}

Cost matching_cost(const Instance& inst, const Matching& m) {
  Cost total = 0;
  for (const Edge& e : m.pairs()) total += inst.cost(e);
  return total;
}

}  // namespace popmax
