#include "recipair/group.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "recipair/errors.hpp"
#include "recipair/graph.hpp"

namespace recipair {

namespace {

using PermSet = std::unordered_set<Permutation, PermutationHash>;

/// Greedy generating set: walk the sorted elements, keeping each one not yet
/// in the closure of those kept so far. Produces at most log2(order)
/// generators, deterministically.
std::vector<Permutation> derive_generators(
    std::size_t degree, const std::vector<Permutation>& sorted_elements) {
  std::vector<Permutation> gens;
  PermSet closure;
  std::vector<Permutation> closure_list{Permutation::identity(degree)};
  closure.insert(closure_list.front());
  for (const Permutation& e : sorted_elements) {
    if (closure.contains(e)) continue;
    gens.push_back(e);
    // Re-close from scratch with the enlarged generating set.
    closure.clear();
    closure_list.assign(1, Permutation::identity(degree));
    closure.insert(closure_list.front());
    for (std::size_t i = 0; i < closure_list.size(); ++i) {
      for (const Permutation& g : gens) {
        Permutation p = closure_list[i] * g;
        if (closure.insert(p).second) closure_list.push_back(std::move(p));
      }
    }
  }
  return gens;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Permutation> elements)
    : degree_(degree),
      generators_(std::move(generators)),
      elements_(std::move(elements)) {}

PermGroup PermGroup::close(std::size_t degree,
                           std::vector<Permutation> generators,
                           std::size_t cap) {
  if (degree == 0) throw std::invalid_argument("group degree must be >= 1");
  for (const Permutation& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
  }
  PermSet seen;
  std::vector<Permutation> elements{Permutation::identity(degree)};
  seen.insert(elements.front());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Permutation& g : generators) {
      Permutation p = elements[i] * g;
      if (seen.insert(p).second) {
        elements.push_back(std::move(p));
        if (elements.size() > cap)
          throw BoundExceeded("group closure exceeds cap of " +
                              std::to_string(cap) + " elements");
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return PermGroup(degree, std::move(generators), std::move(elements));
}

PermGroup PermGroup::from_elements(std::size_t degree,
                                   std::vector<Permutation> elements) {
  if (degree == 0) throw std::invalid_argument("group degree must be >= 1");
  if (elements.empty())
    throw std::invalid_argument("element set must be non-empty");
  for (const Permutation& e : elements) {
    if (e.degree() != degree)
      throw std::invalid_argument("element degree mismatch");
  }
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw std::invalid_argument("duplicate elements");
  if (!elements.front().is_identity())
    throw std::invalid_argument("element set lacks the identity");
  std::vector<Permutation> gens = derive_generators(degree, elements);
  return PermGroup(degree, std::move(gens), std::move(elements));
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return close(degree, {});
}

PermGroup PermGroup::symmetric(std::size_t n) {
  if (n == 0) throw std::invalid_argument("group degree must be >= 1");
  if (n == 1) return trivial(1);
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n > 2) {
    std::vector<std::uint8_t> full(n);
    for (std::size_t i = 0; i < n; ++i) full[i] = static_cast<std::uint8_t>(i);
    gens.push_back(Permutation::from_cycles(n, {full}));
  }
  return close(n, std::move(gens));
}

PermGroup PermGroup::alternating(std::size_t n) {
  if (n == 0) throw std::invalid_argument("group degree must be >= 1");
  if (n <= 2) return trivial(n);
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i)
    gens.push_back(
        Permutation::from_cycles(n, {{0, 1, static_cast<std::uint8_t>(i)}}));
  return close(n, std::move(gens));
}

PermGroup PermGroup::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("group degree must be >= 1");
  if (n == 1) return trivial(1);
  std::vector<std::uint8_t> full(n);
  for (std::size_t i = 0; i < n; ++i) full[i] = static_cast<std::uint8_t>(i);
  return close(n, {Permutation::from_cycles(n, {full})});
}

PermGroup PermGroup::dihedral(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs degree >= 3");
  std::vector<std::uint8_t> rotation(n), reflection(n);
  for (std::size_t i = 0; i < n; ++i) {
    rotation[i] = static_cast<std::uint8_t>((i + 1) % n);
    reflection[i] = static_cast<std::uint8_t>((n - i) % n);
  }
  return close(n, {Permutation(std::move(rotation)),
                   Permutation(std::move(reflection))});
}

PermGroup PermGroup::direct_product(const PermGroup& g1, const PermGroup& g2,
                                    std::size_t cap) {
  const std::size_t n1 = g1.degree(), n2 = g2.degree();
  if (n1 + n2 > 255)
    throw std::invalid_argument("direct product degree exceeds 255");
  const unsigned __int128 order =
      static_cast<unsigned __int128>(g1.order()) * g2.order();
  if (order > cap)
    throw BoundExceeded("direct product order exceeds cap of " +
                        std::to_string(cap));
  auto embed = [&](const Permutation& a, const Permutation& b) {
    std::vector<std::uint8_t> img(n1 + n2);
    for (std::size_t i = 0; i < n1; ++i) img[i] = a.apply(static_cast<std::uint8_t>(i));
    for (std::size_t i = 0; i < n2; ++i)
      img[n1 + i] =
          static_cast<std::uint8_t>(n1 + b.apply(static_cast<std::uint8_t>(i)));
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens;
  const Permutation id1 = Permutation::identity(n1);
  const Permutation id2 = Permutation::identity(n2);
  for (const Permutation& g : g1.generators()) gens.push_back(embed(g, id2));
  for (const Permutation& g : g2.generators()) gens.push_back(embed(id1, g));
  std::vector<Permutation> elements;
  elements.reserve(static_cast<std::size_t>(order));
  for (const Permutation& a : g1.elements())
    for (const Permutation& b : g2.elements()) elements.push_back(embed(a, b));
  std::sort(elements.begin(), elements.end());
  return PermGroup(n1 + n2, std::move(gens), std::move(elements));
}

PermGroup PermGroup::wreath_product(const PermGroup& base, const PermGroup& top,
                                    std::size_t cap) {
  const std::size_t d = base.degree(), m = top.degree();
  const std::size_t n = d * m;
  if (n == 0 || n > 255)
    throw std::invalid_argument("wreath product degree out of range");
  unsigned __int128 order = top.order();
  for (std::size_t i = 0; i < m; ++i) {
    order *= base.order();
    if (order > cap)
      throw BoundExceeded("wreath product order exceeds cap of " +
                          std::to_string(cap));
  }
  std::vector<Permutation> gens;
  for (std::size_t block = 0; block < m; ++block) {
    for (const Permutation& g : base.generators()) {
      Permutation p = Permutation::identity(n);
      std::vector<std::uint8_t> img = p.images();
      for (std::size_t j = 0; j < d; ++j)
        img[block * d + j] = static_cast<std::uint8_t>(
            block * d + g.apply(static_cast<std::uint8_t>(j)));
      gens.emplace_back(std::move(img));
    }
  }
  for (const Permutation& h : top.generators()) {
    std::vector<std::uint8_t> img(n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < d; ++j)
        img[i * d + j] = static_cast<std::uint8_t>(
            h.apply(static_cast<std::uint8_t>(i)) * d + j);
    gens.emplace_back(std::move(img));
  }
  // The element set is the full product: every choice of one base element
  // per block combined with every top element.
  std::vector<Permutation> elements;
  elements.reserve(static_cast<std::size_t>(order));
  std::vector<std::size_t> pick(m, 0);
  for (const Permutation& h : top.elements()) {
    std::fill(pick.begin(), pick.end(), 0);
    for (;;) {
      std::vector<std::uint8_t> img(n);
      for (std::size_t i = 0; i < m; ++i) {
        const Permutation& g = base.elements()[pick[i]];
        const std::size_t target = h.apply(static_cast<std::uint8_t>(i)) * d;
        for (std::size_t j = 0; j < d; ++j)
          img[i * d + j] = static_cast<std::uint8_t>(
              target + g.apply(static_cast<std::uint8_t>(j)));
      }
      elements.emplace_back(std::move(img));
      std::size_t pos = 0;
      while (pos < m && ++pick[pos] == base.order()) pick[pos++] = 0;
      if (pos == m) break;
    }
  }
  std::sort(elements.begin(), elements.end());
  return PermGroup(n, std::move(gens), std::move(elements));
}

bool PermGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ &&
         std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::has_odd_permutation() const {
  for (const Permutation& e : elements_)
    if (!e.is_even()) return true;
  return false;
}

IntPolynomial PermGroup::cycle_polynomial() const {
  std::vector<Integer> coeffs(degree_ + 1, Integer(0));
  for (const Permutation& e : elements_) coeffs[e.cycle_count()] += 1;
  return IntPolynomial(std::move(coeffs));
}

PermGroup PermGroup::point_stabilizer(
    const std::vector<std::uint8_t>& points) const {
  for (std::uint8_t p : points)
    if (p >= degree_) throw std::invalid_argument("stabilized point out of range");
  std::vector<Permutation> kept;
  for (const Permutation& e : elements_) {
    bool fixes = true;
    for (std::uint8_t p : points)
      if (e.apply(p) != p) {
        fixes = false;
        break;
      }
    if (fixes) kept.push_back(e);
  }
  return from_elements(degree_, std::move(kept));
}

PermGroup PermGroup::conjugate(const Permutation& s) const {
  if (s.degree() != degree_)
    throw std::invalid_argument("conjugating permutation degree mismatch");
  const Permutation s_inv = s.inverse();
  std::vector<Permutation> gens, elements;
  gens.reserve(generators_.size());
  elements.reserve(elements_.size());
  for (const Permutation& g : generators_) gens.push_back(s * g * s_inv);
  for (const Permutation& e : elements_) elements.push_back(s * e * s_inv);
  std::sort(elements.begin(), elements.end());
  return PermGroup(degree_, std::move(gens), std::move(elements));
}

PermGroup PermGroup::restricted(const std::vector<std::uint8_t>& points) const {
  if (!std::is_sorted(points.begin(), points.end()))
    throw std::invalid_argument("restriction point set must be sorted");
  std::vector<int> position(degree_, -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= degree_)
      throw std::invalid_argument("restriction point out of range");
    position[points[i]] = static_cast<int>(i);
  }
  std::vector<Permutation> restricted_elements;
  for (const Permutation& e : elements_) {
    std::vector<std::uint8_t> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const std::uint8_t target = e.apply(points[i]);
      if (target >= degree_ || position[target] < 0)
        throw std::invalid_argument(
            "point set is not invariant under the group");
      img[i] = static_cast<std::uint8_t>(position[target]);
    }
    restricted_elements.emplace_back(std::move(img));
  }
  std::sort(restricted_elements.begin(), restricted_elements.end());
  restricted_elements.erase(
      std::unique(restricted_elements.begin(), restricted_elements.end()),
      restricted_elements.end());
  return from_elements(points.size(), std::move(restricted_elements));
}

TranspositionCensus transposition_census(const PermGroup& group,
                                         const SimpleGraph& graph) {
  if (group.degree() != graph.vertex_count())
    throw std::invalid_argument("group degree must match graph vertex count");
  TranspositionCensus census;
  for (const Permutation& e : group.elements()) {
    const std::vector<std::uint8_t> moved = e.moved_points();
    if (moved.size() != 2) continue;
    ++census.transpositions;
    if (!graph.adjacent(moved[0], moved[1])) ++census.non_edge_transpositions;
  }
  return census;
}

}  // namespace recipair
