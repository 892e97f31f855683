#ifndef POPMAX_LP_HPP_
#define POPMAX_LP_HPP_

#include <string>

#include "popmax/core.hpp"

namespace popmax {

struct LpOptions {
  bool integral = false;  // list every variable under "Generals"
};

// Extended formulation of the popular max-matching polytope in CPLEX LP
// format: the stable matching polytope of G* (stability row per image edge,
// degree <= 1 everywhere, degree = 1 on the copies a#0..a#(n0-2) and all
// dummies) plus linkage rows x(a,b) = sum_i xs(a#i,b~), minimizing the
// source edge costs.
//
// Variables are x(<a>,<b>) and xs(<a#i>,<b~ or dummy>); rows are
// stab(...), deg(<node>), must(<node>) and link(<a>,<b>). Characters of
// identifiers outside [A-Za-z0-9_.#!~] are written as $XX (hex byte).
std::string emit_lp(const Instance& inst, const LpOptions& options = {});

}  // namespace popmax

#endif  // POPMAX_LP_HPP_
