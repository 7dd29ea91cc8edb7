#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "recipair/perm.hpp"
#include "recipair/poly.hpp"

namespace recipair {

class SimpleGraph;

/// A permutation group on {0..degree-1}, held as its full, lexicographically
/// sorted element list. All groups in this toolkit are small enough for
/// explicit enumeration; a closure cap guards against accidental blowups.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultClosureCap = 1'000'000;

  /// Closure of the generators under composition (breadth-first).
  static PermGroup close(std::size_t degree,
                         std::vector<Permutation> generators,
                         std::size_t cap = kDefaultClosureCap);

  /// Wraps an already closed element set; derives a small generating set.
  /// Validates identity membership and uniqueness, not closure.
  static PermGroup from_elements(std::size_t degree,
                                 std::vector<Permutation> elements);

  static PermGroup trivial(std::size_t degree);
  static PermGroup symmetric(std::size_t n);
  static PermGroup alternating(std::size_t n);
  static PermGroup cyclic(std::size_t n);
  /// Symmetries of the n-cycle 0-1-...-(n-1)-0; order 2n, n >= 3.
  static PermGroup dihedral(std::size_t n);

  /// Acts on {0..n1-1} by the first factor and {n1..n1+n2-1} by the second.
  static PermGroup direct_product(const PermGroup& g1, const PermGroup& g2,
                                  std::size_t cap = kDefaultClosureCap);

  /// Imprimitive wreath action on top.degree() consecutive blocks of size
  /// base.degree(): the tuple (g_1..g_m; h) maps block i to block h(i) via
  /// g_i. Generators are the block-wise copies of base's generators plus the
  /// block-permuting lifts of top's generators.
  static PermGroup wreath_product(const PermGroup& base, const PermGroup& top,
                                  std::size_t cap = kDefaultClosureCap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool contains(const Permutation& p) const;

  bool has_odd_permutation() const;

  /// F(x) = sum over elements of x^(number of cycles, fixed points included).
  /// Monic of degree() degree; F(1) = order().
  IntPolynomial cycle_polynomial() const;

  /// Subgroup fixing every listed point.
  PermGroup point_stabilizer(const std::vector<std::uint8_t>& points) const;

  /// s G s^{-1}.
  PermGroup conjugate(const Permutation& s) const;

  /// Restriction to an invariant point set (throws if not invariant), with
  /// points relabeled by their position in `points` (which must be sorted).
  PermGroup restricted(const std::vector<std::uint8_t>& points) const;

  /// Same degree and same element set; generating sets may differ.
  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Permutation> elements);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

struct TranspositionCensus {
  std::size_t transpositions = 0;       // elements moving exactly two points
  std::size_t non_edge_transpositions = 0;  // those whose two points are not adjacent
};

/// Counts transpositions in the group and how many of them swap a non-edge
/// of the graph. Degree of group and graph must match.
TranspositionCensus transposition_census(const PermGroup& group,
                                         const SimpleGraph& graph);

}  // namespace recipair
