#include "popmax/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "popmax/errors.hpp"
#include "popmax/instance_io.hpp"

namespace popmax {

CnfFormula parse_dimacs(std::string_view input) {
  CnfFormula f;
  bool have_header = false;
  int declared_clauses = 0;
  std::vector<int> current;
  auto all_lines = text::lines(input);
  for (int ln = 1; ln <= static_cast<int>(all_lines.size()); ++ln) {
    const std::string_view raw = all_lines[ln - 1];
    auto tokens = text::tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens[0].text == "c") continue;
    if (tokens[0].text == "%") break;  // some generators end files this way
    if (tokens[0].text == "p") {
      if (have_header) throw ParseError("second header line", ln, tokens[0].column);
      if (tokens.size() != 4 || tokens[1].text != "cnf") {
        throw ParseError("expected: p cnf <vars> <clauses>", ln, tokens[0].column);
      }
      for (int k : {2, 3}) {
        int value = 0;
        const auto sv = tokens[k].text;
        auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
        if (ec != std::errc() || ptr != sv.data() + sv.size() || value < 0) {
          throw ParseError("invalid count '" + std::string(sv) + "'", ln,
                           tokens[k].column);
        }
        (k == 2 ? f.num_vars : declared_clauses) = value;
      }
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw ParseError("clause before the 'p cnf' header", ln, tokens[0].column);
    }
    for (const auto& t : tokens) {
      int lit = 0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), lit);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw ParseError("invalid literal '" + std::string(t.text) + "'", ln, t.column);
      }
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::abs(lit) > f.num_vars) {
        throw ParseError("literal " + std::to_string(lit) + " exceeds the " +
                             std::to_string(f.num_vars) + " declared variables",
                         ln, t.column);
      }
      current.push_back(lit);
    }
  }
  if (!have_header) throw ParseError("missing 'p cnf' header", 1, 1);
  if (!current.empty()) f.clauses.push_back(std::move(current));
  if (static_cast<int>(f.clauses.size()) != declared_clauses) {
    throw ValidationError("header declares " + std::to_string(declared_clauses) +
                          " clauses but " + std::to_string(f.clauses.size()) +
                          " were given");
  }
  return f;
}

std::string format_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

bool satisfies(const CnfFormula& f, const Assignment& x) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      if (x[std::abs(lit) - 1] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

CnfFormula normalize_formula(const CnfFormula& f) {
  CnfFormula out;
  out.num_vars = f.num_vars;
  int fresh = 0;
  for (const auto& clause : f.clauses) {
    std::vector<int> c;
    for (int lit : clause) {
      if (std::find(c.begin(), c.end(), lit) == c.end()) c.push_back(lit);
    }
    if (c.size() == 1) {
      if (fresh == 0) fresh = ++out.num_vars;
      out.clauses.push_back({c[0], fresh});
      out.clauses.push_back({c[0], -fresh});
    } else {
      out.clauses.push_back(std::move(c));
    }
  }
  return out;
}

CnfFormula transform_formula(const CnfFormula& f) {
  const int n = f.num_vars;
  CnfFormula out;
  out.num_vars = 2 * n;
  for (size_t k = 0; k < f.clauses.size(); ++k) {
    const auto& clause = f.clauses[k];
    if (clause.empty()) {
      throw ValidationError("clause " + std::to_string(k + 1) + " is empty");
    }
    if (clause.size() > 3) {
      throw ValidationError("clause " + std::to_string(k + 1) +
                            " has more than 3 literals");
    }
    std::vector<int> c;
    for (int lit : clause) c.push_back(lit > 0 ? lit : n - lit);
    out.clauses.push_back(std::move(c));
  }
  for (int i = 1; i <= n; ++i) {
    out.clauses.push_back({i, n + i});
    out.clauses.push_back({-i, -(n + i)});
  }
  return out;
}

SatResult brute_sat(const CnfFormula& f) {
  constexpr size_t kMaxStored = 1 << 16;
  if (f.num_vars > 24) {
    throw BoundExceeded("brute_sat: " + std::to_string(f.num_vars) +
                        " variables, bound is 24");
  }
  SatResult result;
  Assignment x(f.num_vars, false);
  for (long long mask = 0; mask < (1LL << f.num_vars); ++mask) {
    for (int v = 0; v < f.num_vars; ++v) x[v] = (mask >> v) & 1;
    if (satisfies(f, x)) {
      ++result.count;
      if (result.assignments.size() < kMaxStored) result.assignments.push_back(x);
    }
  }
  result.satisfiable = result.count > 0;
  return result;
}

}  // namespace popmax
