#include "popmax/stable.hpp"

#include <deque>

namespace popmax {

Matching gale_shapley(const Instance& inst, Side proposing) {
  const bool a_side = proposing == Side::kA;
  const int num_proposers = a_side ? inst.num_a() : inst.num_b();
  const int num_receivers = a_side ? inst.num_b() : inst.num_a();
  auto list_of = [&](int p) { return a_side ? inst.a_prefs(p) : inst.b_prefs(p); };
  auto rank_at = [&](int r, int p) {
    return a_side ? inst.b_rank(r, p) : inst.a_rank(r, p);
  };

  std::vector<int> next(num_proposers, 0);
  std::vector<int> holder(num_receivers, -1);
  std::deque<int> free;
  for (int p = 0; p < num_proposers; ++p) free.push_back(p);

  while (!free.empty()) {
    const int p = free.front();
    free.pop_front();
    const auto list = list_of(p);
    while (next[p] < static_cast<int>(list.size())) {
      const int r = list[next[p]++];
      const int h = holder[r];
      if (h < 0) {
        holder[r] = p;
        break;
      }
      if (rank_at(r, p) < rank_at(r, h)) {
        holder[r] = p;
        free.push_back(h);
        break;
      }
    }
  }

  Matching m(inst.num_a(), inst.num_b());
  for (int r = 0; r < num_receivers; ++r) {
    if (holder[r] < 0) continue;
    m.add(a_side ? Edge{holder[r], r} : Edge{r, holder[r]});
  }
  return m;
}

std::vector<Edge> blocking_edges(const Instance& inst, const Matching& m) {
  std::vector<Edge> out;
  for (int id = 0; id < inst.num_edges(); ++id) {
    const Edge& e = inst.edge(id);
    if (inst.a_rank(e.a, e.b) < partner_rank_a(inst, m, e.a) &&
        inst.b_rank(e.b, e.a) < partner_rank_b(inst, m, e.b)) {
      out.push_back(e);
    }
  }
  return out;
}

bool is_stable(const Instance& inst, const Matching& m) {
  return blocking_edges(inst, m).empty();
}

}  // namespace popmax
