#include "popmax/random_instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "popmax/errors.hpp"

namespace popmax {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

namespace {

template <typename T>
void shuffle(std::mt19937_64& rng, std::vector<T>& v) {
  for (size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

}  // namespace

Instance random_instance(const RandomInstanceOptions& o) {
  if (o.num_a < 0 || o.num_b < 0) throw PreconditionError("negative side size");
  if (!(o.density >= 0.0 && o.density <= 1.0)) {
    throw PreconditionError("density must lie in [0, 1]");
  }
  if (o.max_cost < 0) throw PreconditionError("max cost must be non-negative");

  std::mt19937_64 rng(o.seed);
  const auto threshold =
      static_cast<std::uint64_t>(std::llround(o.density * 4294967296.0));
  std::vector<std::vector<int>> a_prefs(o.num_a);
  std::vector<std::vector<int>> b_prefs(o.num_b);
  std::vector<Edge> sampled;
  for (int a = 0; a < o.num_a; ++a) {
    for (int b = 0; b < o.num_b; ++b) {
      if ((rng() >> 32) < threshold) {
        a_prefs[a].push_back(b);
        b_prefs[b].push_back(a);
        sampled.push_back({a, b});
      }
    }
  }
  for (auto& list : a_prefs) shuffle(rng, list);
  for (auto& list : b_prefs) shuffle(rng, list);
  std::map<Edge, Cost> costs;
  if (o.max_cost > 0) {
    for (const Edge& e : sampled) {
      const Cost c = static_cast<Cost>(uniform_below(rng, o.max_cost + 1));
      if (c != 0) costs[e] = c;
    }
  }

  std::vector<std::string> a_names;
  std::vector<std::string> b_names;
  for (int a = 1; a <= o.num_a; ++a) a_names.push_back("a" + std::to_string(a));
  for (int b = 1; b <= o.num_b; ++b) b_names.push_back("b" + std::to_string(b));
  return Instance(std::move(a_names), std::move(b_names), std::move(a_prefs),
                  std::move(b_prefs), costs);
}

CnfFormula random_formula(int max_vars, int max_clauses, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CnfFormula f;
  f.num_vars = 1 + static_cast<int>(uniform_below(rng, max_vars));
  const int clauses = 1 + static_cast<int>(uniform_below(rng, max_clauses));
  for (int k = 0; k < clauses; ++k) {
    std::vector<int> vars;
    for (int v = 1; v <= f.num_vars; ++v) vars.push_back(v);
    shuffle(rng, vars);
    const int len = 1 + static_cast<int>(uniform_below(rng, std::min(3, f.num_vars)));
    std::vector<int> clause;
    for (int j = 0; j < len; ++j) {
      clause.push_back(uniform_below(rng, 2) ? vars[j] : -vars[j]);
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace popmax
