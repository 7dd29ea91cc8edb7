#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "recipair/graph.hpp"
#include "recipair/group.hpp"
#include "recipair/poly.hpp"

namespace recipair {

/// Why a reciprocal pair is reciprocal, when we know.
struct Classification {
  enum class Tag {
    TrivialNull,      // no edges, group without odd permutations
    TrivialComplete,  // complete graph with its full symmetric group
    FourCycle,        // the 4-cycle with its full (dihedral) symmetry
    KStar,            // the k-star family up to conjugacy
    ProductDerived,   // splits into smaller reciprocal pairs
    WreathDerived,    // wreath extension of a smaller reciprocal pair
    Unknown,          // no classifier matched
  };
  Tag tag;
  std::string evidence;
};

/// A graph with a group acting on its vertices, the two polynomials of the
/// pair, and whether they satisfy the reciprocity P(x) = (-1)^n F(-x).
struct PairReport {
  SimpleGraph graph;
  PermGroup group;
  IntPolynomial orbital;
  IntPolynomial cycle;
  bool reciprocal = false;
  std::optional<Classification> classification;
};

/// P(x) = sum over group elements of the chromatic polynomial of the
/// quotient by that element (zero when the quotient has an internal edge).
/// Every element must be an automorphism of the graph.
IntPolynomial orbital_chromatic_polynomial(const SimpleGraph& graph,
                                           const PermGroup& group);

/// Computes both polynomials of the pair and compares the orbital polynomial
/// with (-1)^n F(-x) coefficientwise. Leaves classification empty.
PairReport is_reciprocal_pair(const SimpleGraph& graph, const PermGroup& group);

/// Orbital chromatic polynomial of the k-star on n vertices under
/// S_k x (anything), given only the factor acting on the n-k outer points:
/// x(x-1)...(x-k+1) * F(x-k) with F the cycle polynomial of that factor.
/// Valid whenever the group splits as the full symmetric group on the
/// clique times a group on the outer points.
IntPolynomial kstar_orbital_closed_form(std::size_t k, std::size_t n,
                                        const PermGroup& outer_factor);

/// The k-star family group on n = r(k+1) + k points: S_k on the clique
/// times (S_{k+1} wr top) on the outer points, where top acts on the r
/// blocks of size k+1.
PermGroup kstar_family_group(std::size_t k, std::size_t r,
                             const PermGroup& top);

/// Builds the k-star pair for these parameters and checks reciprocity.
PairReport verify_kstar_family(std::size_t k, std::size_t r,
                               const PermGroup& top);

/// Disjoint union of the graphs with the direct product of the groups.
/// All inputs must already be reciprocal; the result provably is.
PairReport product_pair(const std::vector<PairReport>& pairs);

/// top.degree() disjoint copies of the graph with the wreath product of the
/// group by `top`. Requires a reciprocal input and a top group without odd
/// permutations; the result provably is reciprocal.
PairReport wreath_pair(const PairReport& pair, const PermGroup& top);

}  // namespace recipair
