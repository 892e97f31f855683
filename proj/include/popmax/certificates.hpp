#ifndef POPMAX_CERTIFICATES_HPP_
#define POPMAX_CERTIFICATES_HPP_

#include <string>
#include <vector>

#include "popmax/certificate.hpp"
#include "popmax/core.hpp"
#include "popmax/gstar.hpp"

namespace popmax {

enum class CertificateCheck {
  kFeasibility,            // F:  alpha_a + alpha_b >= wt_M(a,b) inside G'
  kComplementarySlackness, // CS: alpha_a + alpha_b = 0 on M
  kZeroSum,                // Z
  kRange,                  // R:  values within the |M|-level ranges
  kUnmatchedBNeighbours,   // P1: alpha_a = 0 next to an unmatched B-node
  kUnmatchedANeighbours,   // P2: alpha_b = 2(|M|-1) next to an unmatched A-node
  kBoundary,               // B:  matched nodes prefer their partner to any
                           //     unmatched neighbour
};

// "F", "CS", "Z", "R", "P1", "P2", "B".
const char* check_code(CertificateCheck check);

struct CertificateViolation {
  CertificateCheck check;
  std::string detail;
};

struct CertificateReport {
  bool valid = true;
  std::vector<CertificateViolation> violations;
};

// F, CS, Z, R, P1 and P2 are the LP optimality and boundary conditions; on
// their own they do not rule out a positive alternating path that starts at
// an unmatched node and ends in the middle of G', so B is checked as well.
// Throws PreconditionError if m is not maximum or alpha is not defined
// exactly on the matched nodes.
CertificateReport verify_certificate(const Instance& inst, const Matching& m,
                                     const DualCertificate& cert);

// Certificate for project(gs, s), read off the level partition of s. Levels
// are renumbered into 0..|M|-1 (raising as little as needed to keep every
// constraint tight). Throws PreconditionError if s is not stable.
DualCertificate extract_certificate(const Instance& inst, const GStarInstance& gs,
                                    const Matching& s);

// Certificate for an arbitrary popular max-matching m. Throws
// PreconditionError when m is not maximum or not popular.
DualCertificate certify_popular_max(const Instance& inst, const Matching& m);

}  // namespace popmax

#endif  // POPMAX_CERTIFICATES_HPP_
