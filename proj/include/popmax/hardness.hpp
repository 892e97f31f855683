#ifndef POPMAX_HARDNESS_HPP_
#define POPMAX_HARDNESS_HPP_

#include <string>
#include <vector>

#include "popmax/cnf.hpp"
#include "popmax/core.hpp"
#include "popmax/popularity.hpp"

namespace popmax {

// Marriage instance with {0,1} costs that has a Pareto-optimal matching of
// cost 0 iff a (transformed) formula is satisfiable.
//
// Every occurrence of variable x in positive clause l gets the 4-cycle
// a-b-a'-b' (named a_x<v>_c<l>, ap_..., b_..., bp_...), and every variable
// gets one negative gadget c-d-c'-d' (c_x<v>, cp_x<v>, d_x<v>, dp_x<v>).
// Gadget edges cost 0; clause edges (a, b of the previous literal), edges
// between the two negative gadgets of a negative clause and the consistency
// edges (a, d'), (b', c) cost 1.
struct GadgetInstance {
  struct Occurrence {
    int var;
    int clause;    // index into formula.clauses
    int position;  // within the clause
    int a, a_prime;  // A-side indices
    int b, b_prime;  // B-side indices
  };
  struct Negative {
    int clause;     // the negative clause containing the variable
    int c, c_prime;  // A-side indices
    int d, d_prime;  // B-side indices
  };

  CnfFormula formula;  // the transformed formula it was built from
  Instance instance;
  std::vector<Occurrence> occurrences;  // clause order
  std::vector<Negative> negative;       // per variable, index v - 1
  std::vector<std::vector<int>> occurrences_of;  // per variable
};

// Throws ValidationError when a clause has a shape without a gadget: a
// positive clause with one literal or a repeated variable, a negative
// clause that does not have exactly 2 distinct variables, a mixed clause, or
// a variable whose negative literal does not occur exactly once.
GadgetInstance build_gadget_instance(const CnfFormula& transformed);

// r = true takes (a_r,b'_r),(a'_r,b_r) in every occurrence of r and
// (c_r,d_r),(c'_r,d'_r); r = false takes (a_r,b_r),(a'_r,b'_r) and
// (c_r,d'_r),(c'_r,d_r). Throws PreconditionError if require_satisfying and
// the assignment falsifies the formula.
Matching assignment_to_matching(const GadgetInstance& g, const Assignment& x,
                                bool require_satisfying = true);

// r = false iff (c_r,d'_r) and (c'_r,d_r) are in m. Throws
// PreconditionError unless m has cost 0 and is Pareto-optimal.
Assignment matching_to_assignment(const GadgetInstance& g, const Matching& m);

// The alternating cycles that rule out a matching in the correctness proof:
// one per positive clause whose gadgets all sit in (a,b),(a',b'), one per
// negative clause whose two gadgets both sit in (c,d),(c',d'), and one per
// occurrence that uses (a,b') while its negative gadget uses (c,d').
struct NamedCycle {
  std::string reason;
  AlternatingWitness cycle;
};
std::vector<NamedCycle> falsifying_cycles(const GadgetInstance& g, const Matching& m);

// Every non-matching edge of the cycle blocks m.
bool all_blocking(const Instance& inst, const Matching& m, const AlternatingWitness& w);

struct ReductionReport {
  CnfFormula normalized;
  CnfFormula transformed;
  int gadget_nodes = 0;
  int gadget_edges = 0;
  bool satisfiable = false;              // original formula, exhaustively
  bool transformed_satisfiable = false;  // agrees with the above
  long long satisfying_assignments = 0;  // of the transformed formula
  long long search_nodes = 0;
  long long pareto_cost0 = 0;  // Pareto-optimal cost-0 matchings found
  bool all_perfect = true;
  bool consistency = true;  // no Pareto-optimal matching uses (a,b') and (c,d')
  bool forward = true;      // each one yields a satisfying assignment
  bool converse = true;     // each satisfying assignment yields one
  bool regressions = true;  // falsifying cycles exist and are all blocking
  bool equivalence = false; // a cost-0 Pareto-optimal matching exists iff sat

  bool ok() const {
    return transformed_satisfiable == satisfiable && all_perfect && consistency &&
           forward && converse && regressions && equivalence;
  }
};

// Exhaustive check of the reduction for tiny formulas (at most 4 variables
// and 6 clauses; BoundExceeded otherwise). The formula is normalized and
// transformed, then every cost-0 matching that is perfect on each gadget
// is enumerated (pruning branches that already contain an alternating cycle
// of blocking edges) and tested for Pareto-optimality. Cost-0 matchings
// that are not perfect on some gadget leave an edge with both ends free and
// so are never Pareto-optimal.
ReductionReport check_reduction(const CnfFormula& psi);

std::string format_report(const ReductionReport& r);

}  // namespace popmax

#endif  // POPMAX_HARDNESS_HPP_
