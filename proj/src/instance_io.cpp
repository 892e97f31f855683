#include "popmax/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>

#include "popmax/errors.hpp"

namespace popmax {

namespace text {

std::vector<std::string_view> lines(std::string_view text) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

}  // namespace text

namespace {

void check_identifier(const text::Token& t, int line_no) {
  if (t.text.find(':') != std::string_view::npos) {
    throw ParseError("identifier '" + std::string(t.text) + "' contains ':'",
                     line_no, t.column);
  }
}

struct PrefLine {
  std::string owner;
  std::vector<std::string> list;
  int line = 0;
};

}  // namespace

Instance parse_instance(std::string_view input) {
  std::vector<std::string> a_names;
  std::vector<std::string> b_names;
  std::vector<PrefLine> prefs;
  struct CostLine {
    std::string a, b;
    Cost value;
    int line;
  };
  std::vector<CostLine> cost_lines;

  auto all_lines = text::lines(input);
  for (int ln = 1; ln <= static_cast<int>(all_lines.size()); ++ln) {
    const std::string_view raw = all_lines[ln - 1];
    auto tokens = text::tokenize(raw);
    if (tokens.empty()) continue;
    const std::string_view kw = tokens[0].text;
    if (kw == "side") {
      if (tokens.size() < 2) {
        throw ParseError("expected side name A or B", ln,
                         static_cast<int>(raw.size()) + 1);
      }
      if (tokens[1].text != "A" && tokens[1].text != "B") {
        throw ParseError("side must be A or B", ln, tokens[1].column);
      }
      auto& names = tokens[1].text == "A" ? a_names : b_names;
      for (size_t i = 2; i < tokens.size(); ++i) {
        check_identifier(tokens[i], ln);
        names.emplace_back(tokens[i].text);
      }
    } else if (kw == "pref") {
      // Owner is everything between the keyword and the first ':'.
      const size_t body = tokens[0].column - 1 + 4;
      size_t comment = raw.size();
      for (const auto& t : tokens) comment = t.column - 1 + t.text.size();
      const std::string_view rest = raw.substr(body, comment - body);
      const size_t colon = rest.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected ':' after node identifier", ln,
                         static_cast<int>(comment) + 1);
      }
      auto owner_tokens = text::tokenize(rest.substr(0, colon));
      if (owner_tokens.size() != 1) {
        throw ParseError("expected exactly one node identifier before ':'", ln,
                         static_cast<int>(body) + 1);
      }
      PrefLine p;
      p.owner = std::string(owner_tokens[0].text);
      p.line = ln;
      const size_t list_offset = body + colon + 1;
      for (const auto& t : text::tokenize(rest.substr(colon + 1))) {
        text::Token shifted{t.text, t.column + static_cast<int>(list_offset)};
        check_identifier(shifted, ln);
        p.list.emplace_back(t.text);
      }
      prefs.push_back(std::move(p));
    } else if (kw == "cost") {
      if (tokens.size() != 4) {
        throw ParseError("expected: cost <idA> <idB> <integer>", ln,
                         tokens[0].column);
      }
      Cost value = 0;
      const auto sv = tokens[3].text;
      auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
      if (ec != std::errc() || ptr != sv.data() + sv.size()) {
        throw ParseError("invalid integer cost '" + std::string(sv) + "'", ln,
                         tokens[3].column);
      }
      cost_lines.push_back({std::string(tokens[1].text),
                            std::string(tokens[2].text), value, ln});
    } else {
      throw ParseError("unknown directive '" + std::string(kw) + "'", ln,
                       tokens[0].column);
    }
  }

  std::unordered_map<std::string, std::pair<Side, int>> index;
  for (int i = 0; i < static_cast<int>(a_names.size()); ++i) {
    if (!index.emplace(a_names[i], std::make_pair(Side::kA, i)).second) {
      throw ValidationError("duplicate node '" + a_names[i] + "'");
    }
  }
  for (int i = 0; i < static_cast<int>(b_names.size()); ++i) {
    if (!index.emplace(b_names[i], std::make_pair(Side::kB, i)).second) {
      throw ValidationError("duplicate node '" + b_names[i] + "'");
    }
  }

  std::vector<std::vector<int>> a_prefs(a_names.size());
  std::vector<std::vector<int>> b_prefs(b_names.size());
  std::vector<bool> a_seen(a_names.size()), b_seen(b_names.size());
  for (const PrefLine& p : prefs) {
    auto it = index.find(p.owner);
    if (it == index.end()) {
      throw ValidationError("line " + std::to_string(p.line) +
                            ": pref for undeclared node '" + p.owner + "'");
    }
    const auto [side, id] = it->second;
    auto seen = side == Side::kA ? a_seen.begin() + id : b_seen.begin() + id;
    if (*seen) {
      throw ValidationError("line " + std::to_string(p.line) +
                            ": second pref line for '" + p.owner + "'");
    }
    *seen = true;
    auto& list = side == Side::kA ? a_prefs[id] : b_prefs[id];
    for (const std::string& n : p.list) {
      auto jt = index.find(n);
      if (jt == index.end()) {
        throw ValidationError("line " + std::to_string(p.line) +
                              ": undeclared node '" + n + "'");
      }
      if (jt->second.first == side) {
        throw ValidationError("line " + std::to_string(p.line) + ": '" + n +
                              "' is on the same side as '" + p.owner + "'");
      }
      list.push_back(jt->second.second);
    }
  }
  for (size_t i = 0; i < a_seen.size(); ++i) {
    if (!a_seen[i]) {
      throw ValidationError("missing pref line for '" + a_names[i] + "'");
    }
  }
  for (size_t i = 0; i < b_seen.size(); ++i) {
    if (!b_seen[i]) {
      throw ValidationError("missing pref line for '" + b_names[i] + "'");
    }
  }

  std::map<Edge, Cost> costs;
  for (const CostLine& c : cost_lines) {
    auto ia = index.find(c.a);
    auto ib = index.find(c.b);
    if (ia == index.end() || ib == index.end() ||
        ia->second.first != Side::kA || ib->second.first != Side::kB) {
      throw ValidationError("line " + std::to_string(c.line) +
                            ": cost needs an A-node then a B-node");
    }
    Edge e{ia->second.second, ib->second.second};
    if (!costs.emplace(e, c.value).second) {
      throw ValidationError("line " + std::to_string(c.line) +
                            ": duplicate cost line");
    }
  }

  return Instance(std::move(a_names), std::move(b_names), std::move(a_prefs),
                  std::move(b_prefs), costs);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "side A";
  for (const auto& n : inst.a_names()) out << ' ' << n;
  out << "\nside B";
  for (const auto& n : inst.b_names()) out << ' ' << n;
  out << '\n';
  for (int a = 0; a < inst.num_a(); ++a) {
    out << "pref " << inst.a_name(a) << ':';
    for (int b : inst.a_prefs(a)) out << ' ' << inst.b_name(b);
    out << '\n';
  }
  for (int b = 0; b < inst.num_b(); ++b) {
    out << "pref " << inst.b_name(b) << ':';
    for (int a : inst.b_prefs(b)) out << ' ' << inst.a_name(a);
    out << '\n';
  }
  for (int id = 0; id < inst.num_edges(); ++id) {
    if (inst.edge_cost(id) != 0) {
      const Edge& e = inst.edge(id);
      out << "cost " << inst.a_name(e.a) << ' ' << inst.b_name(e.b) << ' '
          << inst.edge_cost(id) << '\n';
    }
  }
  return out.str();
}

Matching parse_matching(const Instance& inst, std::string_view input) {
  std::vector<Edge> pairs;
  auto all_lines = text::lines(input);
  for (int ln = 1; ln <= static_cast<int>(all_lines.size()); ++ln) {
    auto tokens = text::tokenize(all_lines[ln - 1]);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError("expected '<idA> <idB>'", ln, tokens[0].column);
    }
    auto a = inst.find_a(tokens[0].text);
    auto b = inst.find_b(tokens[1].text);
    if (!a) {
      throw ParseError("unknown A-node '" + std::string(tokens[0].text) + "'",
                       ln, tokens[0].column);
    }
    if (!b) {
      throw ParseError("unknown B-node '" + std::string(tokens[1].text) + "'",
                       ln, tokens[1].column);
    }
    pairs.push_back({*a, *b});
  }
  return Matching::from_pairs(inst, pairs);
}

std::vector<std::string> matching_lines(const Instance& inst, const Matching& m) {
  std::vector<std::pair<std::string, std::string>> named;
  for (const Edge& e : m.pairs()) named.emplace_back(inst.a_name(e.a), inst.b_name(e.b));
  std::sort(named.begin(), named.end());
  std::vector<std::string> out;
  out.reserve(named.size());
  for (const auto& [a, b] : named) out.push_back(a + " " + b);
  return out;
}

std::string format_matching(const Instance& inst, const Matching& m) {
  std::string out;
  for (const auto& line : matching_lines(inst, m)) {
    out += line;
    out += '\n';
  }
  return out;
}

nlohmann::json matching_to_json(const Instance& inst, const Matching& m) {
  std::vector<std::pair<std::string, std::string>> named;
  for (const Edge& e : m.pairs()) named.emplace_back(inst.a_name(e.a), inst.b_name(e.b));
  std::sort(named.begin(), named.end());
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : named) pairs.push_back({a, b});
  return {{"pairs", pairs}, {"cost", matching_cost(inst, m)}};
}

}  // namespace popmax
