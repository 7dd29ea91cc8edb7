#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "recipair/graph.hpp"
#include "recipair/group.hpp"
#include "recipair/reciprocity.hpp"

namespace recipair {

/// One representative per isomorphism class of graphs on n vertices; the
/// representative is the class member with the smallest edge bitmask in
/// lexicographic edge order, and classes are listed in that order.
/// Guarded by n <= 7.
std::vector<SimpleGraph> enumerate_graphs(std::size_t n);

struct SubgroupLattice {
  std::vector<PermGroup> all;   // every subgroup, by (order, element list)
  std::vector<PermGroup> conjugacy_reps;  // canonical member per class
};

/// All subgroups by closing under pairwise joins of cyclic subgroups.
/// Guarded by order <= order_cap.
SubgroupLattice subgroup_lattice(const PermGroup& group,
                                 std::size_t order_cap = 5000);

/// Conjugacy-class representatives only.
std::vector<PermGroup> enumerate_subgroups(const PermGroup& group,
                                           std::size_t order_cap = 5000);

/// A way to assemble a pair from strictly smaller reciprocal pairs.
struct DecompositionWitness {
  enum class Kind { DirectProduct, Wreath };
  Kind kind;
  std::string description;
  /// For wreath witnesses: whether the block-permuting group contains odd
  /// permutations (such pairs fall outside the guarded wreath construction
  /// yet can still be reciprocal).
  bool top_has_odd_permutation = false;
};

struct IrreducibilityResult {
  bool irreducible = false;
  std::optional<DecompositionWitness> witness;  // engaged iff !irreducible
};

/// Searches component-structure decompositions of a reciprocal pair: splits
/// of the component set into group-invariant halves that are themselves
/// reciprocal, and wreath structure over isomorphic components. Connected
/// graphs are irreducible by convention.
IrreducibilityResult is_irreducible(const PairReport& pair);

/// First matching explanation, in a fixed order: edgeless, complete,
/// 4-cycle, k-star family, product split, wreath split, else Unknown.
/// The one-vertex graph counts as complete.
Classification classify(const PairReport& pair);

struct SearchOptions {
  std::size_t max_n = 6;
  std::size_t subgroup_order_cap = 5000;
  unsigned jobs = 1;
  /// When set, per-graph results are cached as JSON lines under this
  /// directory and reused by later runs with the same parameters.
  std::optional<std::string> cache_dir;
};

struct SearchResult {
  std::size_t n = 0;
  std::size_t graphs_examined = 0;
  std::size_t subgroups_examined = 0;
  std::vector<PairReport> pairs;  // every reciprocal pair, classified
};

/// Exhaustive scan of all graphs on n vertices (up to isomorphism) paired
/// with all subgroups of their automorphism groups (up to conjugacy).
/// The result is deterministic and independent of the worker count.
SearchResult search_pairs(std::size_t n, const SearchOptions& options = {});

}  // namespace recipair
