#ifndef POPMAX_INSTANCE_IO_HPP_
#define POPMAX_INSTANCE_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "popmax/core.hpp"
#include "json.hpp"

namespace popmax {

// Line-based instance format:
//
//   side A a1 a2 ...        (one or more lines per side)
//   side B b1 b2 ...
//   pref a1: b2 b1          (exactly one line per node, most preferred first)
//   cost a1 b2 7            (optional, default 0)
//
// '#' starts a comment when it begins a token, so identifiers may contain
// '#' in non-leading positions (used by the auxiliary-instance naming).
// Identifiers are whitespace-free and may not contain ':'.
Instance parse_instance(std::string_view text);

// Canonical text: declaration order for nodes, list order as stored, cost
// lines for non-zero costs in edge order.
std::string serialize_instance(const Instance& inst);

// One "<idA> <idB>" pair per line; same comment rules as instances.
Matching parse_matching(const Instance& inst, std::string_view text);

// Pairs rendered as "<idA> <idB>", sorted lexicographically by the names.
std::vector<std::string> matching_lines(const Instance& inst, const Matching& m);
std::string format_matching(const Instance& inst, const Matching& m);

// {"pairs": [[a, b], ...], "cost": c}
nlohmann::json matching_to_json(const Instance& inst, const Matching& m);

namespace text {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

// Whitespace-separated tokens up to the first token starting with '#'.
std::vector<Token> tokenize(std::string_view line);

// Splits text into lines (without terminators).
std::vector<std::string_view> lines(std::string_view text);

}  // namespace text

}  // namespace popmax

#endif  // POPMAX_INSTANCE_IO_HPP_
