#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "recipair/errors.hpp"
#include "recipair/graph.hpp"
#include "recipair/group.hpp"
#include "recipair/poly.hpp"
#include "recipair/reciprocity.hpp"
#include "recipair/search.hpp"

using namespace recipair;

namespace {

IntPolynomial poly(std::initializer_list<long> ascending) {
  std::vector<Integer> coeffs;
  for (long c : ascending) coeffs.emplace_back(c);
  return IntPolynomial(std::move(coeffs));
}

// Edge count of a reciprocal pair's graph must split into transpositions in
// the group plus those supported on non-edges.
void check_transposition_split(const PairReport& report) {
  REQUIRE(report.reciprocal);
  const auto census = transposition_census(report.group, report.graph);
  CHECK(report.graph.edge_count() ==
        census.transpositions + census.non_edge_transpositions);
}

// Counts (g, colouring) incidences: proper colourings with `colours` colours
// fixed by g, summed over the group. Independent route to orbital values.
std::uint64_t incidence_oracle(const SimpleGraph& graph, const PermGroup& group,
                               std::uint64_t colours) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::uint64_t> colouring(n, 0);
  std::uint64_t total = 0;
  while (true) {
    bool proper = true;
    for (const auto& [u, v] : graph.edges())
      if (colouring[u] == colouring[v]) {
        proper = false;
        break;
      }
    if (proper && colours > 0) {
      for (const Permutation& g : group.elements()) {
        bool fixed = true;
        for (std::size_t v = 0; v < n; ++v)
          if (colouring[g.apply(static_cast<std::uint8_t>(v))] !=
              colouring[v]) {
            fixed = false;
            break;
          }
        if (fixed) ++total;
      }
    }
    // Odometer over all colour maps.
    std::size_t pos = 0;
    while (pos < n && ++colouring[pos] == colours) colouring[pos++] = 0;
    if (pos == n || colours == 0) break;
  }
  return total;
}

}  // namespace

TEST_CASE("orbital polynomial of complete graphs under full symmetry") {
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(orbital_chromatic_polynomial(SimpleGraph::complete(n),
                                       PermGroup::symmetric(n)) ==
          falling_factorial(n));
}

TEST_CASE("orbital polynomial of the 4-cycle under dihedral symmetry") {
  CHECK(orbital_chromatic_polynomial(SimpleGraph::cycle(4),
                                     PermGroup::dihedral(4)) ==
        poly({0, -2, 3, -2, 1}));
}

TEST_CASE("orbital polynomial of null graphs is the cycle polynomial") {
  const std::vector<PermGroup> groups = {
      PermGroup::trivial(3), PermGroup::symmetric(4), PermGroup::alternating(4),
      PermGroup::cyclic(5), PermGroup::dihedral(5)};
  for (const auto& g : groups)
    CHECK(orbital_chromatic_polynomial(SimpleGraph::null_graph(g.degree()),
                                       g) == g.cycle_polynomial());
}

TEST_CASE("non-automorphisms in the group are rejected") {
  CHECK_THROWS_AS(orbital_chromatic_polynomial(SimpleGraph::cycle(4),
                                               PermGroup::symmetric(4)),
                  NotAutomorphismGroup);
  CHECK_THROWS_AS(orbital_chromatic_polynomial(SimpleGraph::cycle(4),
                                               PermGroup::symmetric(3)),
                  std::invalid_argument);
}

TEST_CASE("reciprocity verdicts on the pinned pairs") {
  const PairReport complete =
      is_reciprocal_pair(SimpleGraph::complete(4), PermGroup::symmetric(4));
  CHECK(complete.reciprocal);
  check_transposition_split(complete);

  const PairReport four_cycle =
      is_reciprocal_pair(SimpleGraph::cycle(4), PermGroup::dihedral(4));
  CHECK(four_cycle.reciprocal);
  CHECK(four_cycle.orbital == poly({0, -2, 3, -2, 1}));
  CHECK(four_cycle.cycle == poly({0, 2, 3, 2, 1}));
  check_transposition_split(four_cycle);

  const PairReport rotations =
      is_reciprocal_pair(SimpleGraph::cycle(4), PermGroup::cyclic(4));
  CHECK_FALSE(rotations.reciprocal);
  CHECK(rotations.orbital == poly({0, -4, 7, -4, 1}));
  CHECK(rotations.cycle == poly({0, 2, 1, 0, 1}));
}

TEST_CASE("odd-degree sign convention") {
  // (K_3, S_3): orbital = x(x-1)(x-2), cycle = x(x+1)(x+2); with n = 3 odd
  // the comparison target is -F(-x).
  const PairReport r =
      is_reciprocal_pair(SimpleGraph::complete(3), PermGroup::symmetric(3));
  CHECK(r.reciprocal);
  CHECK(r.orbital == poly({0, 2, -3, 1}));
  CHECK(r.cycle == poly({0, 2, 3, 1}));
}

TEST_CASE("closed form for k-star orbital polynomials") {
  CHECK(kstar_orbital_closed_form(1, 3, PermGroup::symmetric(2)) ==
        poly({0, 0, -1, 1}));
  CHECK(kstar_orbital_closed_form(2, 5, PermGroup::symmetric(3)) ==
        poly({0, 0, -2, 5, -4, 1}));
  // With a trivial outer factor only the identity contributes, so the closed
  // form collapses to the chromatic polynomial of the k-star itself.
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t k = 1; k < n; ++k)
      CHECK(kstar_orbital_closed_form(k, n, PermGroup::trivial(n - k)) ==
            chromatic_polynomial(SimpleGraph::k_star(k, n)));
  CHECK_THROWS_AS(kstar_orbital_closed_form(2, 5, PermGroup::symmetric(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(kstar_orbital_closed_form(0, 3, PermGroup::symmetric(3)),
                  std::invalid_argument);
}

TEST_CASE("closed form matches the direct orbital sum") {
  // k = 2, n = 5, full outer symmetry: group S_2 x S_3 on the 2-star.
  const PermGroup group = PermGroup::direct_product(PermGroup::symmetric(2),
                                                    PermGroup::symmetric(3));
  CHECK(orbital_chromatic_polynomial(SimpleGraph::k_star(2, 5), group) ==
        kstar_orbital_closed_form(2, 5, PermGroup::symmetric(3)));
}

TEST_CASE("closed form matches the orbital sum across the block grid") {
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t r = 1; r * (k + 1) + k <= 9; ++r) {
      const std::size_t n = r * (k + 1) + k;
      std::vector<PermGroup> tops = {PermGroup::trivial(r)};
      if (r >= 2) {
        tops.push_back(PermGroup::symmetric(r));
        tops.push_back(PermGroup::alternating(r));
      }
      for (const auto& top : tops) {
        const PermGroup outer =
            PermGroup::wreath_product(PermGroup::symmetric(k + 1), top);
        const PermGroup group =
            PermGroup::direct_product(PermGroup::symmetric(k), outer);
        CHECK(orbital_chromatic_polynomial(SimpleGraph::k_star(k, n), group) ==
              kstar_orbital_closed_form(k, n, outer));
      }
    }
}

TEST_CASE("family group construction") {
  CHECK(kstar_family_group(1, 1, PermGroup::trivial(1)).order() == 2);
  CHECK(kstar_family_group(2, 1, PermGroup::trivial(1)).order() == 12);
  const PermGroup g = kstar_family_group(1, 2, PermGroup::symmetric(2));
  CHECK(g.order() == 8);
  CHECK(g.degree() == 5);
  CHECK_THROWS_AS(kstar_family_group(0, 1, PermGroup::trivial(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(kstar_family_group(1, 2, PermGroup::symmetric(3)),
                  std::invalid_argument);
}

TEST_CASE("family verification verdicts") {
  CHECK(verify_kstar_family(1, 2, PermGroup::symmetric(2)).reciprocal);
  CHECK(verify_kstar_family(2, 2, PermGroup::alternating(2)).reciprocal);
  CHECK_FALSE(verify_kstar_family(2, 2, PermGroup::symmetric(2)).reciprocal);
}

TEST_CASE("family verification across the full small grid") {
  // k odd pairs with the full block-permutation group, k even with its
  // even part; every case with n <= 11 and group order <= 10^5 verifies.
  for (std::size_t k = 1; k <= 5; ++k)
    for (std::size_t r = 1; r * (k + 1) + k <= 11; ++r) {
      const PermGroup top = (k % 2 == 1) ? PermGroup::symmetric(r)
                                         : PermGroup::alternating(r);
      Integer order(1);
      for (std::size_t i = 2; i <= k; ++i) order *= static_cast<long>(i);
      Integer block_factorial(1);
      for (std::size_t i = 2; i <= k + 1; ++i)
        block_factorial *= static_cast<long>(i);
      for (std::size_t i = 0; i < r; ++i) order *= block_factorial;
      order *= static_cast<long>(top.order());
      if (order > 100000) continue;
      const PairReport report = verify_kstar_family(k, r, top);
      CHECK(report.reciprocal);
      check_transposition_split(report);
    }
}

TEST_CASE("null-graph pairs are reciprocal exactly for even groups") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto lattice = subgroup_lattice(PermGroup::symmetric(n));
    for (const auto& sub : lattice.all) {
      const PairReport report =
          is_reciprocal_pair(SimpleGraph::null_graph(n), sub);
      CHECK(report.reciprocal == !sub.has_odd_permutation());
      if (report.reciprocal) check_transposition_split(report);
    }
  }
}

TEST_CASE("orbital values count fixed proper colourings") {
  struct Case {
    SimpleGraph graph;
    PermGroup group;
  };
  const std::vector<Case> cases = {
      {SimpleGraph::cycle(4), PermGroup::dihedral(4)},
      {SimpleGraph::cycle(4), PermGroup::cyclic(4)},
      {SimpleGraph::cycle(5), PermGroup::dihedral(5)},
      {SimpleGraph::k_star(2, 5),
       PermGroup::direct_product(PermGroup::symmetric(2),
                                 PermGroup::symmetric(3))},
      {SimpleGraph::null_graph(3), PermGroup::symmetric(3)},
      {SimpleGraph::complete(4), PermGroup::symmetric(4)},
  };
  for (const auto& c : cases) {
    const IntPolynomial orbital =
        orbital_chromatic_polynomial(c.graph, c.group);
    for (std::uint64_t colours = 0; colours <= 3; ++colours)
      CHECK(orbital.eval(static_cast<long>(colours)) ==
            Integer(static_cast<unsigned long>(
                incidence_oracle(c.graph, c.group, colours))));
  }
}

TEST_CASE("products of reciprocal pairs") {
  const PairReport k2 =
      is_reciprocal_pair(SimpleGraph::complete(2), PermGroup::symmetric(2));
  REQUIRE(k2.reciprocal);

  const PairReport doubled = product_pair({k2, k2});
  CHECK(doubled.reciprocal);
  CHECK(doubled.graph.vertex_count() == 4);
  CHECK(doubled.graph.edge_count() == 2);
  CHECK(doubled.group.order() == 4);
  check_transposition_split(doubled);

  const PairReport k3 =
      is_reciprocal_pair(SimpleGraph::complete(3), PermGroup::symmetric(3));
  const PairReport nulls =
      is_reciprocal_pair(SimpleGraph::null_graph(2), PermGroup::trivial(2));
  const PairReport mixed = product_pair({k3, nulls});
  CHECK(mixed.reciprocal);
  CHECK(mixed.graph.vertex_count() == 5);
  check_transposition_split(mixed);

  CHECK_THROWS_AS(product_pair({}), std::invalid_argument);
  const PairReport bad =
      is_reciprocal_pair(SimpleGraph::cycle(4), PermGroup::cyclic(4));
  CHECK_THROWS_AS(product_pair({k2, bad}), std::invalid_argument);
}

TEST_CASE("wreath extensions of reciprocal pairs") {
  const PairReport k2 =
      is_reciprocal_pair(SimpleGraph::complete(2), PermGroup::symmetric(2));
  REQUIRE(k2.reciprocal);

  const PairReport tripled = wreath_pair(k2, PermGroup::alternating(3));
  CHECK(tripled.reciprocal);
  CHECK(tripled.graph.vertex_count() == 6);
  CHECK(tripled.group.order() == 24);
  check_transposition_split(tripled);

  const PairReport unchanged = wreath_pair(k2, PermGroup::trivial(1));
  CHECK(unchanged.graph == k2.graph);
  CHECK(unchanged.group == k2.group);
  CHECK(unchanged.reciprocal);

  CHECK_THROWS_AS(wreath_pair(k2, PermGroup::symmetric(2)),
                  OddPermutationInH);
  const PairReport bad =
      is_reciprocal_pair(SimpleGraph::cycle(4), PermGroup::cyclic(4));
  CHECK_THROWS_AS(wreath_pair(bad, PermGroup::alternating(3)),
                  std::invalid_argument);
}
