#include "popmax/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "popmax/errors.hpp"

namespace popmax::oracle {

namespace {

void check_bound(const Instance& inst, int max_edges) {
  if (inst.num_edges() > max_edges) {
    throw BoundExceeded("oracle: instance has " + std::to_string(inst.num_edges()) +
                        " edges, bound is " + std::to_string(max_edges));
  }
}

// Position of x in list, or list.size() ("unmatched") when x is -1.
int position(std::span<const int> list, int x) {
  if (x < 0) return static_cast<int>(list.size());
  for (int i = 0; i < static_cast<int>(list.size()); ++i) {
    if (list[i] == x) return i;
  }
  throw InternalError("oracle: partner missing from preference list");
}

struct Votes {
  int for_first = 0;
  int for_second = 0;
};

// How many nodes prefer their partner in x (resp. y).
Votes votes(const Instance& inst, const Matching& x, const Matching& y) {
  Votes v;
  for (int a = 0; a < inst.num_a(); ++a) {
    const auto list = inst.a_prefs(a);
    const int px = position(list, x.mate_of_a(a));
    const int py = position(list, y.mate_of_a(a));
    if (px < py) ++v.for_first;
    if (py < px) ++v.for_second;
  }
  for (int b = 0; b < inst.num_b(); ++b) {
    const auto list = inst.b_prefs(b);
    const int px = position(list, x.mate_of_b(b));
    const int py = position(list, y.mate_of_b(b));
    if (px < py) ++v.for_first;
    if (py < px) ++v.for_second;
  }
  return v;
}

std::vector<Matching> max_only(std::vector<Matching> all) {
  int best = 0;
  for (const auto& m : all) best = std::max(best, m.size());
  std::erase_if(all, [best](const Matching& m) { return m.size() != best; });
  return all;
}

bool beats_or_ties_all(const Instance& inst, const Matching& m,
                       const std::vector<Matching>& rivals) {
  for (const auto& n : rivals) {
    const Votes v = votes(inst, m, n);
    if (v.for_first < v.for_second) return false;
  }
  return true;
}

std::vector<Matching> popular_among(const Instance& inst,
                                    const std::vector<Matching>& maxes,
                                    bool parallel) {
  const int count = static_cast<int>(maxes.size());
  std::vector<char> keep(count, 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < count; ++i) {
    keep[i] = beats_or_ties_all(inst, maxes[i], maxes) ? 1 : 0;
  }
  std::vector<Matching> out;
  for (int i = 0; i < count; ++i) {
    if (keep[i]) out.push_back(maxes[i]);
  }
  return out;
}

std::vector<Edge> sorted_pairs(const Matching& m) {
  auto p = m.pairs();
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

std::vector<Matching> enum_matchings(const Instance& inst, int max_edges) {
  check_bound(inst, max_edges);
  std::vector<Matching> out;
  Matching cur(inst.num_a(), inst.num_b());
  const auto edges = inst.edges();
  auto recurse = [&](auto&& self, size_t i) -> void {
    if (i == edges.size()) {
      out.push_back(cur);
      return;
    }
    self(self, i + 1);
    const Edge& e = edges[i];
    if (cur.mate_of_a(e.a) < 0 && cur.mate_of_b(e.b) < 0) {
      cur.add(e);
      self(self, i + 1);
      cur.remove(e);
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<Matching> enum_max_matchings(const Instance& inst, int max_edges) {
  return max_only(enum_matchings(inst, max_edges));
}

std::vector<Matching> brute_popular_max(const Instance& inst, int max_edges) {
  return popular_among(inst, enum_max_matchings(inst, max_edges), true);
}

std::vector<Matching> brute_popular_max_serial(const Instance& inst, int max_edges) {
  return popular_among(inst, enum_max_matchings(inst, max_edges), false);
}

bool brute_is_popular_max(const Instance& inst, const Matching& m, int max_edges) {
  const auto maxes = enum_max_matchings(inst, max_edges);
  if (maxes.empty() || m.size() != maxes.front().size()) return false;
  return beats_or_ties_all(inst, m, maxes);
}

MinCostResult brute_min_cost_popular_max(const Instance& inst, int max_edges) {
  const auto popular = brute_popular_max(inst, max_edges);
  if (popular.empty()) throw InternalError("oracle: no popular max-matching");
  MinCostResult best;
  bool have = false;
  std::vector<Edge> best_key;
  for (const auto& m : popular) {
    Cost c = 0;
    for (const Edge& e : m.pairs()) c += inst.cost(e);
    auto key = sorted_pairs(m);
    if (!have || c < best.cost || (c == best.cost && key < best_key)) {
      best = {m, c};
      best_key = std::move(key);
      have = true;
    }
  }
  return best;
}

std::string Unpopularity::to_string() const {
  if (infinite) return "inf";
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Unpopularity brute_unpopularity_factor(const Instance& inst, const Matching& m,
                                       int max_edges) {
  Unpopularity best;  // 0/1
  for (const auto& n : enum_matchings(inst, max_edges)) {
    const Votes v = votes(inst, n, m);
    if (v.for_first == 0) continue;
    if (v.for_second == 0) return {true, 0, 1};
    // v.for_first / v.for_second > best.num / best.den ?
    if (static_cast<long long>(v.for_first) * best.den >
        best.num * static_cast<long long>(v.for_second)) {
      const long long g = std::gcd(v.for_first, v.for_second);
      best = {false, v.for_first / g, v.for_second / g};
    }
  }
  return best;
}

bool brute_is_pareto_optimal(const Instance& inst, const Matching& m, int max_edges) {
  for (const auto& n : enum_matchings(inst, max_edges)) {
    const Votes v = votes(inst, n, m);
    if (v.for_first > 0 && v.for_second == 0) return false;
  }
  return true;
}

std::vector<Matching> brute_stable_matchings(const Instance& inst, int max_edges) {
  std::vector<Matching> out;
  for (const auto& m : enum_matchings(inst, max_edges)) {
    bool blocked = false;
    for (const Edge& e : inst.edges()) {
      const int pa = position(inst.a_prefs(e.a), m.mate_of_a(e.a));
      const int pb = position(inst.b_prefs(e.b), m.mate_of_b(e.b));
      if (position(inst.a_prefs(e.a), e.b) < pa &&
          position(inst.b_prefs(e.b), e.a) < pb) {
        blocked = true;
        break;
      }
    }
    if (!blocked) out.push_back(m);
  }
  return out;
}

}  // namespace popmax::oracle
