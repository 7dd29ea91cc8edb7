#include "recipair/reciprocity.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "recipair/errors.hpp"

namespace recipair {

namespace {

std::string graph_fingerprint(const SimpleGraph& g) {
  std::string key(1, static_cast<char>(g.vertex_count()));
  for (const auto& [u, v] : g.edges()) {
    key.push_back(static_cast<char>(u));
    key.push_back(static_cast<char>(v));
  }
  return key;
}

}  // namespace

IntPolynomial orbital_chromatic_polynomial(const SimpleGraph& graph,
                                           const PermGroup& group) {
  if (group.degree() != graph.vertex_count())
    throw std::invalid_argument("group degree must match graph vertex count");
  for (const Permutation& g : group.elements()) {
    if (!is_automorphism(graph, g))
      throw NotAutomorphismGroup("group element " + to_cycle_string(g) +
                                 " is not an automorphism of the graph");
  }
  // Identical labelled quotients recur across elements; compute each
  // chromatic polynomial once with its multiplicity.
  std::map<std::string, std::pair<SimpleGraph, Integer>> quotients;
  for (const Permutation& g : group.elements()) {
    QuotientResult q = quotient(graph, g);
    if (q.has_internal_edge) continue;  // contributes zero
    auto [it, inserted] = quotients.try_emplace(
        graph_fingerprint(*q.graph), std::move(*q.graph), Integer(0));
    it->second.second += 1;
  }
  IntPolynomial sum;
  for (const auto& [key, entry] : quotients)
    sum += chromatic_polynomial(entry.first) * entry.second;
  return sum;
}

PairReport is_reciprocal_pair(const SimpleGraph& graph,
                              const PermGroup& group) {
  PairReport report{graph, group, {}, {}, false, std::nullopt};
  report.orbital = orbital_chromatic_polynomial(graph, group);
  report.cycle = group.cycle_polynomial();
  IntPolynomial target = substitute_negate(report.cycle);
  if (graph.vertex_count() % 2 == 1) target = -target;
  report.reciprocal = report.orbital == target;
  return report;
}

IntPolynomial kstar_orbital_closed_form(std::size_t k, std::size_t n,
                                        const PermGroup& outer_factor) {
  if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
  if (outer_factor.degree() != n - k)
    throw std::invalid_argument(
        "outer factor must act on the n-k outer points");
  return falling_factorial(k) *
         substitute_shift(outer_factor.cycle_polynomial(), k);
}

PermGroup kstar_family_group(std::size_t k, std::size_t r,
                             const PermGroup& top) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  if (r < 1) throw std::invalid_argument("need r >= 1");
  if (top.degree() != r)
    throw std::invalid_argument("top group must act on r blocks");
  PermGroup outer = PermGroup::wreath_product(PermGroup::symmetric(k + 1), top);
  return PermGroup::direct_product(PermGroup::symmetric(k), outer);
}

PairReport verify_kstar_family(std::size_t k, std::size_t r,
                               const PermGroup& top) {
  PermGroup group = kstar_family_group(k, r, top);
  const std::size_t n = r * (k + 1) + k;
  return is_reciprocal_pair(SimpleGraph::k_star(k, n), group);
}

PairReport product_pair(const std::vector<PairReport>& pairs) {
  if (pairs.empty())
    throw std::invalid_argument("product of zero pairs");
  for (const PairReport& p : pairs)
    if (!p.reciprocal)
      throw std::invalid_argument("all pairs in a product must be reciprocal");
  SimpleGraph graph = pairs.front().graph;
  PermGroup group = pairs.front().group;
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    graph = graph.disjoint_union(pairs[i].graph);
    group = PermGroup::direct_product(group, pairs[i].group);
  }
  PairReport report = is_reciprocal_pair(graph, group);
  if (!report.reciprocal)
    throw std::logic_error("product of reciprocal pairs failed to verify");
  return report;
}

PairReport wreath_pair(const PairReport& pair, const PermGroup& top) {
  if (!pair.reciprocal)
    throw std::invalid_argument("wreath extension needs a reciprocal pair");
  if (top.has_odd_permutation())
    throw OddPermutationInH(
        "wreath extension requires a top group without odd permutations");
  SimpleGraph graph = pair.graph;
  for (std::size_t i = 1; i < top.degree(); ++i)
    graph = graph.disjoint_union(pair.graph);
  PermGroup group = PermGroup::wreath_product(pair.group, top);
  PairReport report = is_reciprocal_pair(graph, group);
  if (!report.reciprocal)
    throw std::logic_error("wreath extension failed to verify");
  return report;
}

}  // namespace recipair
