#ifndef POPMAX_CERTIFICATE_HPP_
#define POPMAX_CERTIFICATE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "popmax/core.hpp"

namespace popmax {

// Integral dual solution certifying a popular max-matching M. alpha is
// defined exactly on the nodes matched by M: alpha_a in {0,-2,..,-2(k-1)},
// alpha_b in {0,2,..,2(k-1)} where k = n0_prime = |M|.
struct DualCertificate {
  std::vector<std::optional<int>> alpha_a;
  std::vector<std::optional<int>> alpha_b;
  int n0_prime = 0;

  friend bool operator==(const DualCertificate&, const DualCertificate&) = default;
};

// alpha_a = -2 level(a), alpha_b = 2 level(partner) for every matched a.
// level_of_a is indexed by A-node; entries of unmatched nodes are ignored.
DualCertificate certificate_from_levels(const Matching& m,
                                        const std::vector<int>& level_of_a);

// Lines "alpha <node> <even-integer>", A-side first, declaration order.
std::string format_certificate(const Instance& inst, const DualCertificate& cert);

// Order-insensitive inverse of format_certificate. n0_prime is taken from m.
// Throws ParseError / ValidationError on unknown nodes, duplicates or odd
// values.
DualCertificate parse_certificate(const Instance& inst, const Matching& m,
                                  std::string_view text);

}  // namespace popmax

#endif  // POPMAX_CERTIFICATE_HPP_
