#include "recipair/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "recipair/errors.hpp"

namespace recipair {

namespace {

constexpr std::size_t kMaxVertices = 64;       // adjacency rows are uint64_t
constexpr std::size_t kMaxSearchVertices = 9;  // backtracking guards
constexpr std::uint64_t kColoringCap = 100'000'000;

}  // namespace

SimpleGraph::SimpleGraph(std::size_t n, std::vector<std::pair<int, int>> edges)
    : n_(n) {
  if (n > kMaxVertices)
    throw std::invalid_argument("graph vertex count exceeds 64");
  adjacency_.assign(n, 0);
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= static_cast<int>(n) || v >= static_cast<int>(n))
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u > v) std::swap(u, v);
    if (adjacency_[u] >> v & 1)
      throw std::invalid_argument("duplicate edge");
    adjacency_[u] |= std::uint64_t(1) << v;
    adjacency_[v] |= std::uint64_t(1) << u;
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

SimpleGraph SimpleGraph::null_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  return SimpleGraph(n, {});
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < static_cast<int>(n); ++u)
    for (int v = u + 1; v < static_cast<int>(n); ++v) edges.emplace_back(u, v);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs >= 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < static_cast<int>(n); ++u)
    edges.emplace_back(u, (u + 1) % static_cast<int>(n));
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::k_star(std::size_t k, std::size_t n) {
  if (k < 1 || k >= n)
    throw std::invalid_argument("k-star needs 1 <= k < n");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < static_cast<int>(k); ++u) {
    for (int v = u + 1; v < static_cast<int>(k); ++v) edges.emplace_back(u, v);
    for (int v = static_cast<int>(k); v < static_cast<int>(n); ++v)
      edges.emplace_back(u, v);
  }
  return SimpleGraph(n, std::move(edges));
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_)
    throw std::invalid_argument("vertex out of range");
  return adjacency_[u] >> v & 1;
}

std::size_t SimpleGraph::vertex_degree(std::size_t v) const {
  if (v >= n_) throw std::invalid_argument("vertex out of range");
  return static_cast<std::size_t>(__builtin_popcountll(adjacency_[v]));
}

std::vector<std::vector<std::uint8_t>> SimpleGraph::connected_components()
    const {
  std::vector<std::vector<std::uint8_t>> components;
  std::vector<bool> visited(n_, false);
  for (std::size_t start = 0; start < n_; ++start) {
    if (visited[start]) continue;
    std::vector<std::uint8_t> component;
    std::vector<std::size_t> stack{start};
    visited[start] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      component.push_back(static_cast<std::uint8_t>(v));
      for (std::size_t u = 0; u < n_; ++u) {
        if ((adjacency_[v] >> u & 1) && !visited[u]) {
          visited[u] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

SimpleGraph SimpleGraph::induced(
    const std::vector<std::uint8_t>& vertices) const {
  if (!std::is_sorted(vertices.begin(), vertices.end()))
    throw std::invalid_argument("induced vertex list must be sorted");
  std::vector<int> position(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= n_) throw std::invalid_argument("vertex out of range");
    if (position[vertices[i]] >= 0)
      throw std::invalid_argument("duplicate vertex in induced list");
    position[vertices[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : edges_) {
    if (position[u] >= 0 && position[v] >= 0)
      edges.emplace_back(position[u], position[v]);
  }
  return SimpleGraph(vertices.size(), std::move(edges));
}

SimpleGraph SimpleGraph::disjoint_union(const SimpleGraph& other) const {
  std::vector<std::pair<int, int>> edges = edges_;
  const int shift = static_cast<int>(n_);
  for (const auto& [u, v] : other.edges_)
    edges.emplace_back(u + shift, v + shift);
  return SimpleGraph(n_ + other.n_, std::move(edges));
}

QuotientResult quotient(const SimpleGraph& graph, const Permutation& g) {
  if (g.degree() != graph.vertex_count())
    throw std::invalid_argument("permutation degree must match vertex count");
  const auto orbits = g.cycles();
  std::vector<int> orbit_of(graph.vertex_count());
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::uint8_t v : orbits[i]) orbit_of[v] = static_cast<int>(i);
  std::set<std::pair<int, int>> edge_set;
  for (const auto& [u, v] : graph.edges()) {
    const int ou = orbit_of[u], ov = orbit_of[v];
    if (ou == ov) return {true, std::nullopt};
    edge_set.emplace(std::min(ou, ov), std::max(ou, ov));
  }
  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
  return {false, SimpleGraph(orbits.size(), std::move(edges))};
}

namespace {

/// Lightweight working form for deletion-contraction.
struct EdgeList {
  std::size_t n;
  std::vector<std::pair<int, int>> edges;  // normalized, sorted
};

std::string edge_list_key(const EdgeList& g) {
  std::string key(1, static_cast<char>(g.n));
  key.reserve(1 + 2 * g.edges.size());
  for (const auto& [u, v] : g.edges) {
    key.push_back(static_cast<char>(u));
    key.push_back(static_cast<char>(v));
  }
  return key;
}

IntPolynomial chromatic_rec(const EdgeList& g,
                            std::unordered_map<std::string, IntPolynomial>& memo) {
  if (g.edges.empty()) return IntPolynomial::monomial(1, g.n);
  const std::string key = edge_list_key(g);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Branch on the lexicographically smallest edge (the front, since the
  // list is kept sorted).
  const auto [a, b] = g.edges.front();

  EdgeList deleted{g.n, {g.edges.begin() + 1, g.edges.end()}};

  // Contract b into a: vertices above b shift down by one.
  EdgeList contracted;
  contracted.n = g.n - 1;
  std::set<std::pair<int, int>> contracted_set;
  auto relabel = [&](int v) {
    if (v == b) v = a;
    return v > b ? v - 1 : v;
  };
  for (auto it = g.edges.begin() + 1; it != g.edges.end(); ++it) {
    int u = relabel(it->first), v = relabel(it->second);
    if (u == v) continue;
    contracted_set.emplace(std::min(u, v), std::max(u, v));
  }
  contracted.edges.assign(contracted_set.begin(), contracted_set.end());

  IntPolynomial result =
      chromatic_rec(deleted, memo) - chromatic_rec(contracted, memo);
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

IntPolynomial chromatic_polynomial(const SimpleGraph& graph) {
  std::unordered_map<std::string, IntPolynomial> memo;
  return chromatic_rec({graph.vertex_count(), graph.edges()}, memo);
}

std::uint64_t count_colorings_oracle(const SimpleGraph& graph,
                                     std::uint64_t colours) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) return 1;
  if (colours == 0) return 0;
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= colours;
    if (total > kColoringCap)
      throw BoundExceeded("colouring enumeration exceeds 10^8 assignments");
  }
  std::vector<std::uint64_t> colour(n, 0);
  std::uint64_t count = 0;
  // Depth-first over proper partial colourings, checking each vertex only
  // against its already-coloured neighbours.
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (std::uint64_t c = 0; c < colours; ++c) {
      bool ok = true;
      for (std::size_t u = 0; u < v; ++u) {
        if (graph.adjacent(u, v) && colour[u] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        colour[v] = c;
        self(self, v + 1);
      }
    }
  };
  rec(rec, 0);
  return count;
}

bool is_automorphism(const SimpleGraph& graph, const Permutation& g) {
  if (g.degree() != graph.vertex_count())
    throw std::invalid_argument("permutation degree must match vertex count");
  for (const auto& [u, v] : graph.edges()) {
    if (!graph.adjacent(g.apply(static_cast<std::uint8_t>(u)),
                        g.apply(static_cast<std::uint8_t>(v))))
      return false;
  }
  return true;
}

namespace {

void isomorphism_backtrack(const SimpleGraph& from, const SimpleGraph& to,
                           std::vector<std::uint8_t>& image,
                           std::vector<bool>& used, std::size_t depth,
                           std::vector<Permutation>& out, bool stop_at_first) {
  const std::size_t n = from.vertex_count();
  if (depth == n) {
    out.emplace_back(image);
    return;
  }
  for (std::size_t w = 0; w < n; ++w) {
    if (used[w]) continue;
    if (from.vertex_degree(depth) != to.vertex_degree(w)) continue;
    bool ok = true;
    for (std::size_t u = 0; u < depth; ++u) {
      if (from.adjacent(u, depth) != to.adjacent(image[u], w)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    image[depth] = static_cast<std::uint8_t>(w);
    used[w] = true;
    isomorphism_backtrack(from, to, image, used, depth + 1, out, stop_at_first);
    used[w] = false;
    if (stop_at_first && !out.empty()) return;
  }
}

std::vector<Permutation> isomorphisms(const SimpleGraph& from,
                                      const SimpleGraph& to,
                                      bool stop_at_first) {
  const std::size_t n = from.vertex_count();
  if (n > kMaxSearchVertices)
    throw BoundExceeded("isomorphism search limited to 9 vertices");
  if (n != to.vertex_count() || from.edge_count() != to.edge_count())
    return {};
  std::vector<std::size_t> deg_a(n), deg_b(n);
  for (std::size_t v = 0; v < n; ++v) {
    deg_a[v] = from.vertex_degree(v);
    deg_b[v] = to.vertex_degree(v);
  }
  std::sort(deg_a.begin(), deg_a.end());
  std::sort(deg_b.begin(), deg_b.end());
  if (deg_a != deg_b) return {};
  std::vector<Permutation> out;
  std::vector<std::uint8_t> image(n, 0);
  std::vector<bool> used(n, false);
  isomorphism_backtrack(from, to, image, used, 0, out, stop_at_first);
  return out;
}

}  // namespace

PermGroup automorphism_group(const SimpleGraph& graph) {
  if (graph.vertex_count() > kMaxSearchVertices)
    throw BoundExceeded("automorphism search limited to 9 vertices");
  std::vector<Permutation> autos = isomorphisms(graph, graph, false);
  return PermGroup::from_elements(graph.vertex_count(), std::move(autos));
}

std::vector<Permutation> all_isomorphisms(const SimpleGraph& from,
                                          const SimpleGraph& to) {
  return isomorphisms(from, to, false);
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return !isomorphisms(a, b, true).empty();
}

}  // namespace recipair
