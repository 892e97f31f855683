#ifndef POPMAX_GSTAR_HPP_
#define POPMAX_GSTAR_HPP_

#include <vector>

#include "popmax/certificate.hpp"
#include "popmax/core.hpp"

namespace popmax {

// Auxiliary marriage instance G* whose stable matchings project onto the
// popular max-matchings of the source instance.
//
// With n0 = |A|, every a in A has copies a_0..a_{n0-1} (named "<a>#<i>") and
// dummies d_1(a)..d_{n0-1}(a) ("<a>!d<i>"); every b in B has an image
// ("<b>~"). Copy i of a sits between its dummies d_i(a) and d_{i+1}(a); an
// image ranks copies by descending subscript, ties broken by b's order.
// Costs are lifted to c(a_i, b~) = c(a, b); dummy edges cost 0.
//
// Inner indexing: copy(a, i) = a * n0 + i; images occupy B-indices
// [0, |B|); dummies follow, grouped by a.
class GStarInstance {
 public:
  // Throws ValidationError if a source identifier contains '#', '!' or '~'.
  explicit GStarInstance(const Instance& source);

  const Instance& inner() const { return inner_; }
  const Instance& source() const { return source_; }
  int n0() const { return n0_; }

  int copy(int a, int level) const { return a * n0_ + level; }
  int image(int b) const { return b; }
  // 1 <= index <= n0 - 1
  int dummy(int a, int index) const {
    return source_.num_b() + a * (n0_ - 1) + (index - 1);
  }

  struct CopyRef {
    int a;
    int level;
  };
  struct DummyRef {
    int a;
    int index;
  };
  CopyRef copy_of(int a_star) const { return {a_star / n0_, a_star % n0_}; }
  bool is_image(int b_star) const { return b_star < source_.num_b(); }
  DummyRef dummy_of(int b_star) const {
    const int off = b_star - source_.num_b();
    return {off / (n0_ - 1), off % (n0_ - 1) + 1};
  }

 private:
  Instance source_;
  Instance inner_;
  int n0_ = 0;
};

GStarInstance build_gstar(const Instance& inst);

// S': drop dummy edges, rename (a_i, b~) to (a, b). Throws PreconditionError
// when two copies of one a are matched into the images (s cannot be stable).
Matching project(const GStarInstance& gs, const Matching& s);

// Level of every source node, read off a stable matching of G*: a is at
// level i <= n0-2 when a_i is matched to an image, otherwise n0-1; b is at
// level i >= 1 when its image holds a subscript-i copy, otherwise 0.
struct LevelPartition {
  std::vector<int> level_a;
  std::vector<int> level_b;
};

// Throws PreconditionError if s is not stable in gs.inner().
LevelPartition levels(const GStarInstance& gs, const Matching& s);

// project(gale_shapley(G*)): a popular max-matching of inst.
Matching popular_max_matching(const Instance& inst, Side proposing = Side::kA);

// A stable matching S of G* with project(S) = m, built from a verified
// certificate. Throws PreconditionError if the certificate does not verify
// for m.
Matching lift(const GStarInstance& gs, const Matching& m,
              const DualCertificate& cert);
Matching lift(const Instance& inst, const Matching& m,
              const DualCertificate& cert);

}  // namespace popmax

#endif  // POPMAX_GSTAR_HPP_
