#include "popmax/certificates.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "popmax/errors.hpp"
#include "popmax/instance_io.hpp"
#include "popmax/level_fit.hpp"
#include "popmax/popularity.hpp"
#include "popmax/stable.hpp"

namespace popmax {

DualCertificate certificate_from_levels(const Matching& m,
                                        const std::vector<int>& level_of_a) {
  DualCertificate cert;
  cert.alpha_a.assign(m.num_a(), std::nullopt);
  cert.alpha_b.assign(m.num_b(), std::nullopt);
  cert.n0_prime = m.size();
  for (const Edge& e : m.pairs()) {
    cert.alpha_a[e.a] = -2 * level_of_a[e.a];
    cert.alpha_b[e.b] = 2 * level_of_a[e.a];
  }
  return cert;
}

std::string format_certificate(const Instance& inst, const DualCertificate& cert) {
  std::ostringstream out;
  for (int a = 0; a < inst.num_a(); ++a) {
    if (cert.alpha_a[a]) out << "alpha " << inst.a_name(a) << ' ' << *cert.alpha_a[a] << '\n';
  }
  for (int b = 0; b < inst.num_b(); ++b) {
    if (cert.alpha_b[b]) out << "alpha " << inst.b_name(b) << ' ' << *cert.alpha_b[b] << '\n';
  }
  return out.str();
}

DualCertificate parse_certificate(const Instance& inst, const Matching& m,
                                  std::string_view input) {
  DualCertificate cert;
  cert.alpha_a.assign(inst.num_a(), std::nullopt);
  cert.alpha_b.assign(inst.num_b(), std::nullopt);
  cert.n0_prime = m.size();
  auto all_lines = text::lines(input);
  for (int ln = 1; ln <= static_cast<int>(all_lines.size()); ++ln) {
    auto tokens = text::tokenize(all_lines[ln - 1]);
    if (tokens.empty()) continue;
    if (tokens.size() != 3 || tokens[0].text != "alpha") {
      throw ParseError("expected: alpha <node> <even-integer>", ln,
                       tokens[0].column);
    }
    auto node = inst.find(tokens[1].text);
    if (!node) {
      throw ParseError("unknown node '" + std::string(tokens[1].text) + "'", ln,
                       tokens[1].column);
    }
    int value = 0;
    const auto sv = tokens[2].text;
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec != std::errc() || ptr != sv.data() + sv.size()) {
      throw ParseError("invalid integer '" + std::string(sv) + "'", ln,
                       tokens[2].column);
    }
    if (value % 2 != 0) {
      throw ValidationError("line " + std::to_string(ln) + ": alpha of '" +
                            std::string(tokens[1].text) + "' is odd");
    }
    const auto [side, id] = *node;
    auto& slot = side == Side::kA ? cert.alpha_a[id] : cert.alpha_b[id];
    if (slot) {
      throw ParseError("second alpha for '" + std::string(tokens[1].text) + "'",
                       ln, tokens[1].column);
    }
    const bool matched = side == Side::kA ? m.is_matched_a(id) : m.is_matched_b(id);
    if (!matched) {
      throw ValidationError("line " + std::to_string(ln) + ": '" +
                            std::string(tokens[1].text) +
                            "' is unmatched and carries no alpha");
    }
    slot = value;
  }
  for (int a = 0; a < inst.num_a(); ++a) {
    if (m.is_matched_a(a) && !cert.alpha_a[a]) {
      throw ValidationError("no alpha for matched node '" + inst.a_name(a) + "'");
    }
  }
  for (int b = 0; b < inst.num_b(); ++b) {
    if (m.is_matched_b(b) && !cert.alpha_b[b]) {
      throw ValidationError("no alpha for matched node '" + inst.b_name(b) + "'");
    }
  }
  return cert;
}

const char* check_code(CertificateCheck check) {
  switch (check) {
    case CertificateCheck::kFeasibility: return "F";
    case CertificateCheck::kComplementarySlackness: return "CS";
    case CertificateCheck::kZeroSum: return "Z";
    case CertificateCheck::kRange: return "R";
    case CertificateCheck::kUnmatchedBNeighbours: return "P1";
    case CertificateCheck::kUnmatchedANeighbours: return "P2";
    case CertificateCheck::kBoundary: return "B";
  }
  return "?";
}

CertificateReport verify_certificate(const Instance& inst, const Matching& m,
                                     const DualCertificate& cert) {
  if (!is_maximum(inst, m).maximum) {
    throw PreconditionError("certificates are defined for maximum matchings only");
  }
  if (static_cast<int>(cert.alpha_a.size()) != inst.num_a() ||
      static_cast<int>(cert.alpha_b.size()) != inst.num_b()) {
    throw PreconditionError("certificate does not fit the instance");
  }
  for (int a = 0; a < inst.num_a(); ++a) {
    if (m.is_matched_a(a) != cert.alpha_a[a].has_value()) {
      throw PreconditionError("certificate domain differs from the matched "
                              "nodes at '" + inst.a_name(a) + "'");
    }
  }
  for (int b = 0; b < inst.num_b(); ++b) {
    if (m.is_matched_b(b) != cert.alpha_b[b].has_value()) {
      throw PreconditionError("certificate domain differs from the matched "
                              "nodes at '" + inst.b_name(b) + "'");
    }
  }

  CertificateReport report;
  auto fail = [&report](CertificateCheck c, std::string detail) {
    report.valid = false;
    report.violations.push_back({c, std::move(detail)});
  };
  auto edge_name = [&inst](const Edge& e) {
    return "(" + inst.a_name(e.a) + "," + inst.b_name(e.b) + ")";
  };

  const int k = m.size();
  if (cert.n0_prime != k) {
    fail(CertificateCheck::kRange, "n0' is " + std::to_string(cert.n0_prime) +
                                       " but |M| is " + std::to_string(k));
  }

  long long total = 0;
  for (const auto& v : cert.alpha_a) total += v.value_or(0);
  for (const auto& v : cert.alpha_b) total += v.value_or(0);

  for (const Edge& e : inst.edges()) {
    const bool a_matched = m.is_matched_a(e.a);
    const bool b_matched = m.is_matched_b(e.b);
    if (m.contains(e)) {
      const int sum = *cert.alpha_a[e.a] + *cert.alpha_b[e.b];
      if (sum != 0) {
        fail(CertificateCheck::kComplementarySlackness,
             edge_name(e) + ": alpha sum " + std::to_string(sum) + " != 0");
      }
    } else if (a_matched && b_matched) {
      const int sum = *cert.alpha_a[e.a] + *cert.alpha_b[e.b];
      const int wt = wt_edge(inst, m, e);
      if (sum < wt) {
        fail(CertificateCheck::kFeasibility, edge_name(e) + ": " +
                                                 std::to_string(sum) + " < " +
                                                 std::to_string(wt));
      }
    } else if (a_matched) {
      // b is unmatched.
      if (*cert.alpha_a[e.a] != 0) {
        fail(CertificateCheck::kUnmatchedBNeighbours,
             inst.a_name(e.a) + " is adjacent to unmatched " + inst.b_name(e.b) +
                 " but alpha is " + std::to_string(*cert.alpha_a[e.a]));
      }
      if (inst.a_rank(e.a, e.b) < partner_rank_a(inst, m, e.a)) {
        fail(CertificateCheck::kBoundary,
             inst.a_name(e.a) + " prefers unmatched " + inst.b_name(e.b) +
                 " to its partner");
      }
    } else if (b_matched) {
      if (*cert.alpha_b[e.b] != 2 * (k - 1)) {
        fail(CertificateCheck::kUnmatchedANeighbours,
             inst.b_name(e.b) + " is adjacent to unmatched " + inst.a_name(e.a) +
                 " but alpha is " + std::to_string(*cert.alpha_b[e.b]));
      }
      if (inst.b_rank(e.b, e.a) < partner_rank_b(inst, m, e.b)) {
        fail(CertificateCheck::kBoundary,
             inst.b_name(e.b) + " prefers unmatched " + inst.a_name(e.a) +
                 " to its partner");
      }
    }
  }

  if (total != 0) {
    fail(CertificateCheck::kZeroSum, "alpha sums to " + std::to_string(total));
  }
  for (int a = 0; a < inst.num_a(); ++a) {
    const auto& v = cert.alpha_a[a];
    if (v && (*v > 0 || *v % 2 != 0 || *v < -2 * (k - 1))) {
      fail(CertificateCheck::kRange,
           inst.a_name(a) + ": alpha " + std::to_string(*v) + " out of range");
    }
  }
  for (int b = 0; b < inst.num_b(); ++b) {
    const auto& v = cert.alpha_b[b];
    if (v && (*v < 0 || *v % 2 != 0 || *v > 2 * (k - 1))) {
      fail(CertificateCheck::kRange,
           inst.b_name(b) + ": alpha " + std::to_string(*v) + " out of range");
    }
  }
  return report;
}

DualCertificate extract_certificate(const Instance& inst, const GStarInstance& gs,
                                    const Matching& s) {
  const LevelPartition lp = levels(gs, s);
  const Matching m = project(gs, s);

  std::vector<int> used;
  for (const Edge& e : m.pairs()) used.push_back(lp.level_a[e.a]);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<int> hint(inst.num_a(), 0);
  for (const Edge& e : m.pairs()) {
    hint[e.a] = static_cast<int>(
        std::lower_bound(used.begin(), used.end(), lp.level_a[e.a]) - used.begin());
  }

  const int top = m.size() - 1;
  auto level = fit_levels(inst, m, top, hint);
  if (!level) level = fit_levels(inst, m, top, {});
  if (!level) {
    throw InternalError("no certificate fits the projection of a stable G* matching");
  }
  DualCertificate cert = certificate_from_levels(m, *level);
  if (!verify_certificate(inst, m, cert).valid) {
    throw InternalError("extracted certificate does not verify");
  }
  return cert;
}

DualCertificate certify_popular_max(const Instance& inst, const Matching& m) {
  if (!is_maximum(inst, m).maximum) {
    throw PreconditionError("matching is not maximum");
  }
  const GStarInstance gs(inst);
  const Matching s = gale_shapley(gs.inner());
  if (project(gs, s) == m) return extract_certificate(inst, gs, s);

  if (auto level = fit_levels(inst, m, m.size() - 1, {})) {
    DualCertificate cert = certificate_from_levels(m, *level);
    if (verify_certificate(inst, m, cert).valid) return cert;
  }
  if (!verify_popular_max(inst, m).popular) {
    throw PreconditionError("matching is not a popular max-matching");
  }
  throw InternalError("popular max-matching without a certificate");
}

}  // namespace popmax
