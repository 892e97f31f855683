#include "popmax/hardness.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "popmax/errors.hpp"

namespace popmax {

GadgetInstance build_gadget_instance(const CnfFormula& f) {
  GadgetInstance g;
  g.formula = f;
  const int n = f.num_vars;
  std::vector<int> neg_clause(n, -1);
  std::vector<int> partner(n, -1);  // other variable of the negative clause

  for (int l = 0; l < static_cast<int>(f.clauses.size()); ++l) {
    const auto& clause = f.clauses[l];
    const std::string where = "clause " + std::to_string(l + 1);
    const bool positive = std::all_of(clause.begin(), clause.end(), [](int x) { return x > 0; });
    const bool negative = std::all_of(clause.begin(), clause.end(), [](int x) { return x < 0; });
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > n) {
        throw ValidationError(where + ": literal out of range");
      }
    }
    if (clause.empty()) throw ValidationError(where + " is empty");
    if (positive) {
      if (clause.size() < 2 || clause.size() > 3) {
        throw ValidationError(where + ": positive clauses need 2 or 3 literals "
                              "(pad unit clauses first)");
      }
      for (size_t j = 0; j < clause.size(); ++j) {
        if (std::count(clause.begin(), clause.end(), clause[j]) > 1) {
          throw ValidationError(where + ": repeated variable");
        }
      }
    } else if (negative) {
      if (clause.size() != 2 || clause[0] == clause[1]) {
        throw ValidationError(where + ": negative clauses need exactly 2 "
                              "distinct literals");
      }
      for (int k = 0; k < 2; ++k) {
        const int v = -clause[k] - 1;
        if (neg_clause[v] >= 0) {
          throw ValidationError("negative literal of X" + std::to_string(v + 1) +
                                " occurs more than once");
        }
        neg_clause[v] = l;
        partner[v] = -clause[1 - k] - 1;
      }
    } else {
      throw ValidationError(where + " mixes positive and negative literals");
    }
  }
  for (int v = 0; v < n; ++v) {
    if (neg_clause[v] < 0) {
      throw ValidationError("negative literal of X" + std::to_string(v + 1) +
                            " does not occur");
    }
  }

  std::vector<std::string> a_names;
  std::vector<std::string> b_names;
  g.occurrences_of.assign(n, {});
  for (int l = 0; l < static_cast<int>(f.clauses.size()); ++l) {
    const auto& clause = f.clauses[l];
    if (clause[0] < 0) continue;
    for (int j = 0; j < static_cast<int>(clause.size()); ++j) {
      const int v = clause[j];
      const std::string tag = "_x" + std::to_string(v) + "_c" + std::to_string(l + 1);
      GadgetInstance::Occurrence o{v, l, j, 0, 0, 0, 0};
      o.a = static_cast<int>(a_names.size());
      a_names.push_back("a" + tag);
      o.a_prime = static_cast<int>(a_names.size());
      a_names.push_back("ap" + tag);
      o.b = static_cast<int>(b_names.size());
      b_names.push_back("b" + tag);
      o.b_prime = static_cast<int>(b_names.size());
      b_names.push_back("bp" + tag);
      g.occurrences_of[v - 1].push_back(static_cast<int>(g.occurrences.size()));
      g.occurrences.push_back(o);
    }
  }
  for (int v = 0; v < n; ++v) {
    const std::string tag = "_x" + std::to_string(v + 1);
    GadgetInstance::Negative ng{neg_clause[v], 0, 0, 0, 0};
    ng.c = static_cast<int>(a_names.size());
    a_names.push_back("c" + tag);
    ng.c_prime = static_cast<int>(a_names.size());
    a_names.push_back("cp" + tag);
    ng.d = static_cast<int>(b_names.size());
    b_names.push_back("d" + tag);
    ng.d_prime = static_cast<int>(b_names.size());
    b_names.push_back("dp" + tag);
    g.negative.push_back(ng);
  }

  std::vector<std::vector<int>> a_prefs(a_names.size());
  std::vector<std::vector<int>> b_prefs(b_names.size());
  std::map<Edge, Cost> costs;

  // Occurrences of one clause are consecutive in g.occurrences.
  for (size_t i = 0; i < g.occurrences.size(); ++i) {
    const auto& o = g.occurrences[i];
    const int k = static_cast<int>(f.clauses[o.clause].size());
    const auto& prev = g.occurrences[i - o.position + (o.position + k - 1) % k];
    const auto& next = g.occurrences[i - o.position + (o.position + 1) % k];
    const auto& ng = g.negative[o.var - 1];
    a_prefs[o.a] = {prev.b, o.b, ng.d_prime, o.b_prime};
    a_prefs[o.a_prime] = {o.b, o.b_prime};
    b_prefs[o.b] = {next.a, o.a, o.a_prime};
    b_prefs[o.b_prime] = {o.a_prime, ng.c, o.a};
    costs[{o.a, prev.b}] = 1;
    costs[{o.a, ng.d_prime}] = 1;
    costs[{ng.c, o.b_prime}] = 1;
  }
  for (int v = 0; v < n; ++v) {
    const auto& ng = g.negative[v];
    const auto& other = g.negative[partner[v]];
    auto& c_list = a_prefs[ng.c];
    c_list = {other.d, ng.d};
    for (int i : g.occurrences_of[v]) c_list.push_back(g.occurrences[i].b_prime);
    c_list.push_back(ng.d_prime);
    a_prefs[ng.c_prime] = {ng.d, ng.d_prime};
    b_prefs[ng.d] = {other.c, ng.c, ng.c_prime};
    auto& dp_list = b_prefs[ng.d_prime];
    dp_list = {ng.c_prime};
    for (int i : g.occurrences_of[v]) dp_list.push_back(g.occurrences[i].a);
    dp_list.push_back(ng.c);
    costs[{ng.c, other.d}] = 1;
  }

  g.instance = Instance(std::move(a_names), std::move(b_names), std::move(a_prefs),
                        std::move(b_prefs), costs);
  return g;
}

namespace {

void add_occurrence(Matching& m, const GadgetInstance::Occurrence& o, bool crossed) {
  if (crossed) {
    m.add({o.a, o.b_prime});
    m.add({o.a_prime, o.b});
  } else {
    m.add({o.a, o.b});
    m.add({o.a_prime, o.b_prime});
  }
}

void add_negative(Matching& m, const GadgetInstance::Negative& ng, bool crossed) {
  if (crossed) {
    m.add({ng.c, ng.d_prime});
    m.add({ng.c_prime, ng.d});
  } else {
    m.add({ng.c, ng.d});
    m.add({ng.c_prime, ng.d_prime});
  }
}

// Directed cycle of blocking edges among nodes matched in m; edges touching
// an unmatched node are ignored, so a hit stays a hit however m is extended.
bool has_blocking_cycle(const Instance& inst, const Matching& m) {
  const int n = inst.num_a();
  std::vector<std::vector<int>> out(n);
  for (int a = 0; a < n; ++a) {
    if (!m.is_matched_a(a)) continue;
    const auto list = inst.a_prefs(a);
    const int mine = inst.a_rank(a, m.mate_of_a(a));
    for (int r = 0; r < mine; ++r) {
      const int b = list[r];
      if (m.is_matched_b(b) && inst.b_rank(b, a) < inst.b_rank(b, m.mate_of_b(b))) {
        out[a].push_back(m.mate_of_b(b));
      }
    }
  }
  std::vector<int> color(n, 0);
  auto dfs = [&](auto&& self, int v) -> bool {
    color[v] = 1;
    for (int w : out[v]) {
      if (color[w] == 1) return true;
      if (color[w] == 0 && self(self, w)) return true;
    }
    color[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v) {
    if (color[v] == 0 && dfs(dfs, v)) return true;
  }
  return false;
}

}  // namespace

Matching assignment_to_matching(const GadgetInstance& g, const Assignment& x,
                                bool require_satisfying) {
  if (static_cast<int>(x.size()) != g.formula.num_vars) {
    throw PreconditionError("assignment size differs from the variable count");
  }
  if (require_satisfying && !satisfies(g.formula, x)) {
    throw PreconditionError("assignment does not satisfy the formula");
  }
  Matching m(g.instance.num_a(), g.instance.num_b());
  for (const auto& o : g.occurrences) add_occurrence(m, o, x[o.var - 1]);
  for (int v = 0; v < g.formula.num_vars; ++v) add_negative(m, g.negative[v], !x[v]);
  return m;
}

Assignment matching_to_assignment(const GadgetInstance& g, const Matching& m) {
  if (matching_cost(g.instance, m) != 0) {
    throw PreconditionError("matching has positive cost");
  }
  if (!is_pareto_optimal(g.instance, m).optimal) {
    throw PreconditionError("matching is not Pareto-optimal");
  }
  Assignment x(g.formula.num_vars);
  for (int v = 0; v < g.formula.num_vars; ++v) {
    const auto& ng = g.negative[v];
    x[v] = !(m.contains({ng.c, ng.d_prime}) && m.contains({ng.c_prime, ng.d}));
  }
  return x;
}

std::vector<NamedCycle> falsifying_cycles(const GadgetInstance& g, const Matching& m) {
  std::vector<NamedCycle> out;
  const auto& f = g.formula;
  size_t first = 0;
  for (int l = 0; l < static_cast<int>(f.clauses.size()); ++l) {
    const auto& clause = f.clauses[l];
    const std::string name = "clause " + std::to_string(l + 1);
    if (clause[0] > 0) {
      const int k = static_cast<int>(clause.size());
      bool all_straight = true;
      for (int j = 0; j < k; ++j) {
        const auto& o = g.occurrences[first + j];
        all_straight = all_straight && m.contains({o.a, o.b}) &&
                       m.contains({o.a_prime, o.b_prime});
      }
      if (all_straight) {
        // a_j's top choice is the previous literal's b.
        AlternatingWitness w;
        w.kind = AlternatingWitness::Kind::kCycle;
        for (int step = 0; step < k; ++step) {
          const auto& o = g.occurrences[first + (k - step) % k];
          w.pairs.push_back({o.a, o.b});
        }
        w.weight = 2 * k;
        out.push_back({name + " (positive) is falsified", w});
      }
      first += k;
    } else {
      const auto& nx = g.negative[-clause[0] - 1];
      const auto& ny = g.negative[-clause[1] - 1];
      if (m.contains({nx.c, nx.d}) && m.contains({ny.c, ny.d})) {
        AlternatingWitness w;
        w.kind = AlternatingWitness::Kind::kCycle;
        w.pairs = {{nx.c, nx.d}, {ny.c, ny.d}};
        w.weight = 4;
        out.push_back({name + " (negative) is falsified", w});
      }
    }
  }
  for (const auto& o : g.occurrences) {
    const auto& ng = g.negative[o.var - 1];
    if (m.contains({o.a, o.b_prime}) && m.contains({ng.c, ng.d_prime})) {
      AlternatingWitness w;
      w.kind = AlternatingWitness::Kind::kCycle;
      w.pairs = {{o.a, o.b_prime}, {ng.c, ng.d_prime}};
      w.weight = 4;
      out.push_back({"X" + std::to_string(o.var) + " is inconsistent in clause " +
                         std::to_string(o.clause + 1),
                     w});
    }
  }
  return out;
}

bool all_blocking(const Instance& inst, const Matching& m, const AlternatingWitness& w) {
  for (const Edge& e : w.edges()) {
    if (m.contains(e)) continue;
    if (wt_edge(inst, m, e) != 2) return false;
  }
  return true;
}

ReductionReport check_reduction(const CnfFormula& psi) {
  if (psi.num_vars > 4 || psi.clauses.size() > 6) {
    throw BoundExceeded("check_reduction handles at most 4 variables and 6 clauses");
  }
  ReductionReport r;
  r.normalized = normalize_formula(psi);
  r.transformed = transform_formula(r.normalized);
  const GadgetInstance g = build_gadget_instance(r.transformed);
  const Instance& inst = g.instance;
  r.gadget_nodes = inst.num_a() + inst.num_b();
  r.gadget_edges = inst.num_edges();

  r.satisfiable = brute_sat(psi).satisfiable;
  const SatResult sat_t = brute_sat(r.transformed);
  r.transformed_satisfiable = sat_t.satisfiable;
  r.satisfying_assignments = sat_t.count;

  // Decision order: each variable's negative gadget, then its occurrences.
  struct Decision {
    bool negative;
    int index;
  };
  std::vector<Decision> order;
  for (int v = 0; v < r.transformed.num_vars; ++v) {
    order.push_back({true, v});
    for (int i : g.occurrences_of[v]) order.push_back({false, i});
  }

  Matching m(inst.num_a(), inst.num_b());
  auto visit_leaf = [&]() {
    if (!is_pareto_optimal(inst, m).optimal) return;
    ++r.pareto_cost0;
    if (2 * m.size() != r.gadget_nodes) r.all_perfect = false;
    for (const auto& o : g.occurrences) {
      const auto& ng = g.negative[o.var - 1];
      if (m.contains({o.a, o.b_prime}) && m.contains({ng.c, ng.d_prime})) {
        r.consistency = false;
      }
    }
    if (!satisfies(r.transformed, matching_to_assignment(g, m))) r.forward = false;
  };
  auto search = [&](auto&& self, size_t depth) -> void {
    ++r.search_nodes;
    if (depth == order.size()) {
      visit_leaf();
      return;
    }
    for (bool crossed : {false, true}) {
      const Matching saved = m;
      if (order[depth].negative) {
        add_negative(m, g.negative[order[depth].index], crossed);
      } else {
        add_occurrence(m, g.occurrences[order[depth].index], crossed);
      }
      if (!has_blocking_cycle(inst, m)) self(self, depth + 1);
      m = saved;
    }
  };
  search(search, 0);

  for (const auto& x : sat_t.assignments) {
    const Matching mx = assignment_to_matching(g, x);
    if (matching_cost(inst, mx) != 0 || 2 * mx.size() != r.gadget_nodes ||
        !is_pareto_optimal(inst, mx).optimal) {
      r.converse = false;
    }
  }

  // Every falsifying assignment must produce a named all-blocking cycle.
  const int nv = r.transformed.num_vars;
  for (long long mask = 0; mask < (1LL << nv); ++mask) {
    Assignment x(nv);
    for (int v = 0; v < nv; ++v) x[v] = (mask >> v) & 1;
    if (satisfies(r.transformed, x)) continue;
    const Matching mx = assignment_to_matching(g, x, false);
    const auto cycles = falsifying_cycles(g, mx);
    if (cycles.empty() || is_pareto_optimal(inst, mx).optimal) r.regressions = false;
    for (const auto& c : cycles) {
      if (!all_blocking(inst, mx, c.cycle)) r.regressions = false;
    }
  }
  // Inconsistent occurrences: a false variable whose occurrence is crossed.
  if (nv > 0) {
    const Assignment all_false(nv, false);
    for (const auto& o : g.occurrences) {
      Matching mx = assignment_to_matching(g, all_false, false);
      mx.remove({o.a, o.b});
      mx.remove({o.a_prime, o.b_prime});
      add_occurrence(mx, o, true);
      const auto cycles = falsifying_cycles(g, mx);
      const bool named = std::any_of(cycles.begin(), cycles.end(), [&](const NamedCycle& c) {
        return c.cycle.pairs.front() == Edge{o.a, o.b_prime} && all_blocking(inst, mx, c.cycle);
      });
      if (!named) r.regressions = false;
    }
  }

  r.equivalence = (r.pareto_cost0 > 0) == r.satisfiable;
  return r;
}

std::string format_report(const ReductionReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "variables: " << r.transformed.num_vars / 2 << " (after normalization), "
      << r.transformed.num_vars << " (transformed)\n";
  out << "clauses: " << r.normalized.clauses.size() << " (normalized), "
      << r.transformed.clauses.size() << " (transformed)\n";
  out << "gadget: " << r.gadget_nodes << " nodes, " << r.gadget_edges << " edges\n";
  out << "satisfiable: " << yn(r.satisfiable) << '\n';
  out << "transformed satisfiable: " << yn(r.transformed_satisfiable) << '\n';
  out << "satisfying assignments (transformed): " << r.satisfying_assignments << '\n';
  out << "search nodes: " << r.search_nodes << '\n';
  out << "pareto-optimal cost-0 matchings: " << r.pareto_cost0 << '\n';
  out << "all perfect: " << yn(r.all_perfect) << '\n';
  out << "consistency: " << yn(r.consistency) << '\n';
  out << "matching -> satisfying assignment: " << yn(r.forward) << '\n';
  out << "assignment -> pareto-optimal cost-0 matching: " << yn(r.converse) << '\n';
  out << "falsifying cycles block: " << yn(r.regressions) << '\n';
  out << "equivalence: " << yn(r.equivalence) << '\n';
  out << "result: " << (r.ok() ? "confirmed" : "FAILED") << '\n';
  return out.str();
}

}  // namespace popmax
