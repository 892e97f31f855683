#include "popmax/gstar.hpp"

#include "popmax/certificates.hpp"
#include "popmax/errors.hpp"
#include "popmax/level_fit.hpp"
#include "popmax/stable.hpp"

namespace popmax {

namespace {

void reject_reserved(const std::string& name) {
  if (name.find_first_of("#!~") != std::string::npos) {
    throw ValidationError("identifier '" + name +
                          "' uses a character reserved for G* naming (#, !, ~)");
  }
}

}  // namespace

GStarInstance::GStarInstance(const Instance& source)
    : source_(source), n0_(source.num_a()) {
  for (const auto& n : source_.a_names()) reject_reserved(n);
  for (const auto& n : source_.b_names()) reject_reserved(n);

  const int na = source_.num_a();
  const int nb = source_.num_b();
  std::vector<std::string> a_names;
  std::vector<std::string> b_names;
  a_names.reserve(static_cast<size_t>(na) * n0_);
  for (int a = 0; a < na; ++a) {
    for (int i = 0; i < n0_; ++i) {
      a_names.push_back(source_.a_name(a) + "#" + std::to_string(i));
    }
  }
  for (int b = 0; b < nb; ++b) b_names.push_back(source_.b_name(b) + "~");
  for (int a = 0; a < na; ++a) {
    for (int i = 1; i < n0_; ++i) {
      b_names.push_back(source_.a_name(a) + "!d" + std::to_string(i));
    }
  }

  std::vector<std::vector<int>> a_prefs(a_names.size());
  std::vector<std::vector<int>> b_prefs(b_names.size());
  std::map<Edge, Cost> costs;
  for (int a = 0; a < na; ++a) {
    for (int i = 0; i < n0_; ++i) {
      auto& list = a_prefs[copy(a, i)];
      if (i >= 1) list.push_back(dummy(a, i));
      for (int b : source_.a_prefs(a)) {
        list.push_back(image(b));
        const Cost c = source_.cost(a, b);
        if (c != 0) costs[{copy(a, i), image(b)}] = c;
      }
      if (i + 1 < n0_) list.push_back(dummy(a, i + 1));
    }
    for (int i = 1; i < n0_; ++i) {
      b_prefs[dummy(a, i)] = {copy(a, i - 1), copy(a, i)};
    }
  }
  for (int b = 0; b < nb; ++b) {
    auto& list = b_prefs[image(b)];
    for (int i = n0_ - 1; i >= 0; --i) {
      for (int a : source_.b_prefs(b)) list.push_back(copy(a, i));
    }
  }
  inner_ = Instance(std::move(a_names), std::move(b_names), std::move(a_prefs),
                    std::move(b_prefs), costs);
}

GStarInstance build_gstar(const Instance& inst) { return GStarInstance(inst); }

Matching project(const GStarInstance& gs, const Matching& s) {
  const Instance& src = gs.source();
  Matching out(src.num_a(), src.num_b());
  for (const Edge& e : s.pairs()) {
    if (!gs.is_image(e.b)) continue;
    const int a = gs.copy_of(e.a).a;
    if (out.is_matched_a(a)) {
      throw PreconditionError("two copies of '" + src.a_name(a) +
                              "' are matched to images; the G* matching is "
                              "not stable");
    }
    out.add({a, e.b});
  }
  return out;
}

LevelPartition levels(const GStarInstance& gs, const Matching& s) {
  if (!is_stable(gs.inner(), s)) {
    throw PreconditionError("level partition needs a stable matching of G*");
  }
  const Instance& src = gs.source();
  LevelPartition lp;
  lp.level_a.assign(src.num_a(), gs.n0() - 1);
  lp.level_b.assign(src.num_b(), 0);
  for (const Edge& e : s.pairs()) {
    if (!gs.is_image(e.b)) continue;
    const auto [a, i] = gs.copy_of(e.a);
    lp.level_a[a] = i;
    lp.level_b[e.b] = i;
  }
  return lp;
}

Matching popular_max_matching(const Instance& inst, Side proposing) {
  const GStarInstance gs(inst);
  return project(gs, gale_shapley(gs.inner(), proposing));
}

Matching lift(const GStarInstance& gs, const Matching& m,
              const DualCertificate& cert) {
  const Instance& src = gs.source();
  const CertificateReport report = verify_certificate(src, m, cert);
  if (!report.valid) {
    throw PreconditionError("certificate does not verify: " +
                            report.violations.front().detail);
  }
  const int top = gs.n0() - 1;
  std::vector<int> hint(src.num_a(), 0);
  for (int a = 0; a < src.num_a(); ++a) {
    if (cert.alpha_a[a]) hint[a] = -*cert.alpha_a[a] / 2;
  }
  auto level = fit_levels(src, m, top, hint);
  if (!level) level = fit_levels(src, m, top, {});
  if (!level) throw InternalError("lift: no level assignment fits G*");

  Matching s(gs.inner().num_a(), gs.inner().num_b());
  for (int a = 0; a < src.num_a(); ++a) {
    const int i = m.is_matched_a(a) ? (*level)[a] : top;
    if (m.is_matched_a(a)) s.add({gs.copy(a, i), gs.image(m.mate_of_a(a))});
    for (int j = 0; j < i; ++j) s.add({gs.copy(a, j), gs.dummy(a, j + 1)});
    for (int j = i + 1; j <= top; ++j) s.add({gs.copy(a, j), gs.dummy(a, j)});
  }
  if (!is_stable(gs.inner(), s) || !(project(gs, s) == m)) {
    throw InternalError("lift produced a G* matching that is not a stable "
                        "preimage");
  }
  return s;
}

Matching lift(const Instance& inst, const Matching& m,
              const DualCertificate& cert) {
  return lift(GStarInstance(inst), m, cert);
}

}  // namespace popmax
