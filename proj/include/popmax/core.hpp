#ifndef POPMAX_CORE_HPP_
#define POPMAX_CORE_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace popmax {

using Cost = std::int64_t;

enum class Side : std::uint8_t { kA, kB };

// An edge of a bipartite instance, by node index on each side.
struct Edge {
  int a = -1;
  int b = -1;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Bipartite graph G = (A u B, E) with strict preference lists and integer
// edge costs. Nodes are indexed per side in declaration order. Immutable
// once constructed; the constructor enforces every invariant.
class Instance {
 public:
  Instance() = default;

  // Throws ValidationError on duplicate names, non-strict or non-mutual
  // lists, out-of-range neighbours, or costs on non-edges.
  Instance(std::vector<std::string> a_names, std::vector<std::string> b_names,
           std::vector<std::vector<int>> a_prefs,
           std::vector<std::vector<int>> b_prefs,
           const std::map<Edge, Cost>& costs = {});

  int num_a() const { return static_cast<int>(a_names_.size()); }
  int num_b() const { return static_cast<int>(b_names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::string& a_name(int a) const { return a_names_[a]; }
  const std::string& b_name(int b) const { return b_names_[b]; }
  const std::vector<std::string>& a_names() const { return a_names_; }
  const std::vector<std::string>& b_names() const { return b_names_; }

  std::span<const int> a_prefs(int a) const { return a_prefs_[a]; }
  std::span<const int> b_prefs(int b) const { return b_prefs_[b]; }

  // Edges ordered by A-node declaration, then by that node's preference.
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  // -1 when (a,b) is not an edge.
  int edge_id(int a, int b) const;
  bool has_edge(int a, int b) const { return edge_id(a, b) >= 0; }

  // 0-based position of b in a's list (resp. a in b's list); -1 if absent.
  int a_rank(int a, int b) const;
  int b_rank(int b, int a) const;

  Cost cost(int a, int b) const;
  Cost cost(const Edge& e) const { return cost(e.a, e.b); }
  Cost edge_cost(int id) const { return costs_[id]; }

  std::optional<int> find_a(std::string_view name) const;
  std::optional<int> find_b(std::string_view name) const;
  std::optional<std::pair<Side, int>> find(std::string_view name) const;

  // Structural equality: names, lists and costs.
  friend bool operator==(const Instance& x, const Instance& y);

 private:
  std::vector<std::string> a_names_;
  std::vector<std::string> b_names_;
  std::vector<std::vector<int>> a_prefs_;
  std::vector<std::vector<int>> b_prefs_;
  std::vector<Edge> edges_;
  std::vector<int> rank_in_a_;  // per edge id
  std::vector<int> rank_in_b_;  // per edge id
  std::vector<Cost> costs_;     // per edge id
  // Per A-node: (b, edge id) sorted by b.
  std::vector<std::vector<std::pair<int, int>>> a_index_;
  std::unordered_map<std::string, std::pair<Side, int>> by_name_;
};

// A set of node-disjoint edges, stored as partner arrays (-1 = unmatched).
class Matching {
 public:
  Matching() = default;
  Matching(int num_a, int num_b) : mate_a_(num_a, -1), mate_b_(num_b, -1) {}

  // Validates that every pair is an edge of inst and pairs are disjoint.
  static Matching from_pairs(const Instance& inst, std::span<const Edge> pairs);

  int num_a() const { return static_cast<int>(mate_a_.size()); }
  int num_b() const { return static_cast<int>(mate_b_.size()); }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  int mate_of_a(int a) const { return mate_a_[a]; }
  int mate_of_b(int b) const { return mate_b_[b]; }
  bool is_matched_a(int a) const { return mate_a_[a] >= 0; }
  bool is_matched_b(int b) const { return mate_b_[b] >= 0; }
  bool contains(const Edge& e) const {
    return e.a >= 0 && e.a < num_a() && mate_a_[e.a] == e.b;
  }

  // Both endpoints must currently be free.
  void add(const Edge& e);
  void remove(const Edge& e);

  // Pairs ordered by A index.
  std::vector<Edge> pairs() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<int> mate_a_;
  std::vector<int> mate_b_;
  int size_ = 0;
};

// m with every listed edge toggled (M xor path/cycle). Throws
// PreconditionError when the result is not a matching.
Matching symmetric_difference(const Matching& m, std::span<const Edge> edges);

// phi(M,N), phi(N,M) and their difference.
struct VoteTally {
  int phi_mn = 0;
  int phi_nm = 0;

  int delta() const { return phi_mn - phi_nm; }
  friend bool operator==(const VoteTally&, const VoteTally&) = default;
};

// Rank of a node's partner, with "unmatched" ranked below every neighbour.
inline constexpr int kUnmatchedRank = 1 << 30;
int partner_rank_a(const Instance& inst, const Matching& m, int a);
int partner_rank_b(const Instance& inst, const Matching& m, int b);

// wt_M(e) in {-2, 0, 2}. Throws PreconditionError if e is not an edge.
int wt_edge(const Instance& inst, const Matching& m, const Edge& e);

VoteTally compare(const Instance& inst, const Matching& m, const Matching& n);

struct MaximumCheck {
  bool maximum = true;
  // An augmenting path as consecutive edges, starting at a free A-node.
  std::vector<Edge> augmenting_path;
};

MaximumCheck is_maximum(const Instance& inst, const Matching& m);

// A maximum-cardinality matching (augmenting paths).
Matching maximum_matching(const Instance& inst);

Cost matching_cost(const Instance& inst, const Matching& m);

}  // namespace popmax

#endif  // POPMAX_CORE_HPP_
