#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "recipair/group.hpp"
#include "recipair/poly.hpp"

namespace recipair {

/// Finite simple graph on vertices {0..n-1}: no loops, no parallel edges.
/// Edges are stored normalized (u < v) and lexicographically sorted.
class SimpleGraph {
 public:
  SimpleGraph() = default;  // no vertices
  SimpleGraph(std::size_t n, std::vector<std::pair<int, int>> edges);

  static SimpleGraph null_graph(std::size_t n);
  static SimpleGraph complete(std::size_t n);
  static SimpleGraph cycle(std::size_t n);  // n >= 3
  /// Clique on {0..k-1} with n-k further vertices each adjacent to every
  /// clique vertex and to nothing else; 1 <= k < n.
  static SimpleGraph k_star(std::size_t k, std::size_t n);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t vertex_degree(std::size_t v) const;

  /// Components as sorted vertex lists, ordered by minimum vertex.
  std::vector<std::vector<std::uint8_t>> connected_components() const;

  /// Subgraph on the given sorted vertex list, relabeled by position.
  SimpleGraph induced(const std::vector<std::uint8_t>& vertices) const;

  /// This graph with `other` appended on fresh vertices.
  SimpleGraph disjoint_union(const SimpleGraph& other) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adjacency_;  // one bitmask row per vertex
};

/// Quotient of a graph by one of its automorphisms: vertices are the cycles
/// of the permutation; an edge inside a cycle kills the quotient (reported
/// via has_internal_edge), otherwise distinct cycles are joined when any of
/// their members are. Cycle ordering follows Permutation::cycles(), so vertex
/// i of the quotient is the cycle with the i-th smallest minimum.
struct QuotientResult {
  bool has_internal_edge = false;
  std::optional<SimpleGraph> graph;  // engaged iff !has_internal_edge
};
QuotientResult quotient(const SimpleGraph& graph, const Permutation& g);

/// Exact chromatic polynomial by memoized deletion-contraction, always
/// branching on the lexicographically smallest edge. Monic of degree n.
IntPolynomial chromatic_polynomial(const SimpleGraph& graph);

/// Independent oracle: counts proper colourings with the given number of
/// colours by direct enumeration. Guarded by colours^n <= 10^8.
std::uint64_t count_colorings_oracle(const SimpleGraph& graph,
                                     std::uint64_t colours);

bool is_automorphism(const SimpleGraph& graph, const Permutation& g);

/// Full automorphism group by backtracking over degree-compatible images.
/// Guarded by n <= 9.
PermGroup automorphism_group(const SimpleGraph& graph);

/// All vertex bijections p with (u,v) an edge of `from` iff (p(u),p(v)) an
/// edge of `to`, in lexicographic order; empty when not isomorphic.
/// Guarded by n <= 9.
std::vector<Permutation> all_isomorphisms(const SimpleGraph& from,
                                          const SimpleGraph& to);

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace recipair
