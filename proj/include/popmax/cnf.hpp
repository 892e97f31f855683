#ifndef POPMAX_CNF_HPP_
#define POPMAX_CNF_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace popmax {

// Literals are signed 1-based variable indices: 3 is X3, -3 is not X3.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Truth value per variable, index v - 1 for variable v.
using Assignment = std::vector<bool>;

// DIMACS: optional "c" comment lines, one "p cnf <vars> <clauses>" header,
// clauses as whitespace-separated literals each terminated by 0.
CnfFormula parse_dimacs(std::string_view text);
std::string format_dimacs(const CnfFormula& f);

bool satisfies(const CnfFormula& f, const Assignment& x);

// Removes repeated literals inside a clause and pads unit clauses: (l)
// becomes (l or y) and (l or not y) with one fresh variable y shared by all
// of them. Equisatisfiable; every clause then has 2 or 3 distinct literals
// (or is a tautology such as (x or not x)).
CnfFormula normalize_formula(const CnfFormula& f);

// Replaces not X_i by X_{n+i} and appends (X_i or X_{n+i}) and
// (not X_i or not X_{n+i}) for every i, giving purely positive or purely
// negative clauses with one occurrence of each negative literal. Throws
// ValidationError on an empty clause or one with more than 3 literals.
CnfFormula transform_formula(const CnfFormula& f);

struct SatResult {
  bool satisfiable = false;
  long long count = 0;  // number of satisfying assignments
  std::vector<Assignment> assignments;  // the first 65536, binary counting order
};

// Exhaustive; throws BoundExceeded above 24 variables.
SatResult brute_sat(const CnfFormula& f);

}  // namespace popmax

#endif  // POPMAX_CNF_HPP_
