#include "popmax/lp.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "popmax/gstar.hpp"

namespace popmax {

namespace {

std::string escape(const std::string& id) {
  std::string out;
  for (unsigned char ch : id) {
    if (std::isalnum(ch) || ch == '_' || ch == '.' || ch == '#' || ch == '!' ||
        ch == '~') {
      out += static_cast<char>(ch);
    } else {
      char buf[4];
      std::snprintf(buf, sizeof buf, "$%02X", ch);
      out += buf;
    }
  }
  return out;
}

// Wraps long rows; CPLEX limits line length.
class RowWriter {
 public:
  explicit RowWriter(std::ostringstream& out) : out_(out) {}

  void begin(const std::string& name) {
    out_ << ' ' << name << ':';
    width_ = name.size() + 2;
    first_ = true;
  }
  void term(long long coef, const std::string& var) {
    std::ostringstream t;
    if (first_) {
      if (coef < 0) t << " -";
      t << ' ';
    } else {
      t << (coef < 0 ? " - " : " + ");
    }
    const long long mag = coef < 0 ? -coef : coef;
    if (mag != 1) t << mag << ' ';
    t << var;
    const std::string s = t.str();
    if (width_ + s.size() > 200) {
      out_ << "\n   ";
      width_ = 3;
    }
    out_ << s;
    width_ += s.size();
    first_ = false;
  }
  void end(const std::string& sense, long long rhs) {
    out_ << ' ' << sense << ' ' << rhs << '\n';
  }

 private:
  std::ostringstream& out_;
  size_t width_ = 0;
  bool first_ = true;
};

}  // namespace

std::string emit_lp(const Instance& inst, const LpOptions& options) {
  const GStarInstance gs(inst);
  const Instance& g = gs.inner();
  auto x = [&](const Edge& e) {
    return "x(" + escape(inst.a_name(e.a)) + "," + escape(inst.b_name(e.b)) + ")";
  };
  auto xs = [&](int a_star, int b_star) {
    return "xs(" + escape(g.a_name(a_star)) + "," + escape(g.b_name(b_star)) + ")";
  };

  std::ostringstream out;
  RowWriter row(out);
  out << "\\ Popular max-matching extended formulation\n";
  out << "\\ source: " << inst.num_a() << " A-nodes, " << inst.num_b()
      << " B-nodes, " << inst.num_edges() << " edges; n0 = " << gs.n0() << "\n";
  out << "Minimize\n";
  row.begin("obj");
  for (int id = 0; id < inst.num_edges(); ++id) {
    row.term(inst.edge_cost(id), x(inst.edge(id)));
  }
  out << '\n';

  out << "Subject To\n";
  // Stability of every image edge (a_i, b~).
  for (int a_star = 0; a_star < g.num_a(); ++a_star) {
    const auto list = g.a_prefs(a_star);
    for (int r = 0; r < static_cast<int>(list.size()); ++r) {
      const int b_star = list[r];
      if (!gs.is_image(b_star)) continue;
      row.begin("stab(" + escape(g.a_name(a_star)) + "," + escape(g.b_name(b_star)) + ")");
      for (int q = 0; q <= r; ++q) row.term(1, xs(a_star, list[q]));
      for (int z : g.b_prefs(b_star)) {
        if (z == a_star) break;
        row.term(1, xs(z, b_star));
      }
      row.end(">=", 1);
    }
  }
  auto degree_row = [&](const std::string& name, Side side, int v,
                        const std::string& sense) {
    const auto list = side == Side::kA ? g.a_prefs(v) : g.b_prefs(v);
    if (list.empty()) return;
    row.begin(name);
    for (int u : list) row.term(1, side == Side::kA ? xs(v, u) : xs(u, v));
    row.end(sense, 1);
  };
  for (int v = 0; v < g.num_a(); ++v) {
    degree_row("deg(" + escape(g.a_name(v)) + ")", Side::kA, v, "<=");
  }
  for (int v = 0; v < g.num_b(); ++v) {
    degree_row("deg(" + escape(g.b_name(v)) + ")", Side::kB, v, "<=");
  }
  for (int a = 0; a < inst.num_a(); ++a) {
    for (int i = 0; i + 1 < gs.n0(); ++i) {
      degree_row("must(" + escape(g.a_name(gs.copy(a, i))) + ")", Side::kA,
                 gs.copy(a, i), "=");
    }
    for (int i = 1; i < gs.n0(); ++i) {
      degree_row("must(" + escape(g.b_name(gs.dummy(a, i))) + ")", Side::kB,
                 gs.dummy(a, i), "=");
    }
  }
  for (const Edge& e : inst.edges()) {
    row.begin("link(" + escape(inst.a_name(e.a)) + "," + escape(inst.b_name(e.b)) + ")");
    row.term(1, x(e));
    for (int i = 0; i < gs.n0(); ++i) row.term(-1, xs(gs.copy(e.a, i), gs.image(e.b)));
    row.end("=", 0);
  }

  std::vector<std::string> vars;
  for (const Edge& e : inst.edges()) vars.push_back(x(e));
  for (const Edge& e : g.edges()) vars.push_back(xs(e.a, e.b));
  out << "Bounds\n";
  for (const auto& v : vars) out << ' ' << v << " >= 0\n";
  if (options.integral && !vars.empty()) {
    out << "Generals\n";
    for (const auto& v : vars) out << ' ' << v << '\n';
  }
  out << "End\n";
  return out.str();
}

}  // namespace popmax
