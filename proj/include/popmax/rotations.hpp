#ifndef POPMAX_ROTATIONS_HPP_
#define POPMAX_ROTATIONS_HPP_

#include <vector>

#include "popmax/core.hpp"

namespace popmax {

// A-nodes play the proposing role ("men"), B-nodes the other.

// Cyclic list (m_0, w_0), ..., (m_{k-1}, w_{k-1}); eliminating it moves m_i
// from w_i to w_{i+1 mod k}. Listed starting from the smallest m.
struct Rotation {
  std::vector<Edge> pairs;

  std::vector<Edge> removed() const { return pairs; }
  std::vector<Edge> added() const;
  friend bool operator==(const Rotation&, const Rotation&) = default;
};

struct RotationPoset {
  Matching base;  // A-optimal stable matching
  // Discovery order, which is a topological order of the precedence DAG.
  std::vector<Rotation> rotations;
  // Direct predecessors of every rotation (indices < its own index).
  std::vector<std::vector<int>> predecessors;
};

// Eliminates exposed rotations from the A-optimal stable matching until the
// B-optimal one is reached. reverse_scan searches for exposed rotations
// from the last A-node instead of the first; the rotation set and the
// closed-subset structure do not depend on it.
RotationPoset find_rotations(const Instance& inst, bool reverse_scan = false);

// base with the selected rotations eliminated in index order. Throws
// PreconditionError if the selection is not closed under predecessors.
Matching apply_rotations(const RotationPoset& poset, const std::vector<bool>& chosen);

struct StableEnumeration {
  std::vector<Matching> matchings;
  bool complete = true;  // false when the limit cut the enumeration short
};

// Every stable matching, one per closed subset of the rotation poset.
StableEnumeration enumerate_stable(const Instance& inst, long long limit = 1'000'000);

}  // namespace popmax

#endif  // POPMAX_ROTATIONS_HPP_
