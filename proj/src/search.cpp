#include "recipair/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>

#include "recipair/errors.hpp"
#include "recipair/io.hpp"
#include "recipair/version.hpp"

namespace recipair {

namespace {

constexpr std::size_t kMaxEnumerationVertices = 7;

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Attaching the larger root under the smaller keeps every root equal to
  // the minimum of its class.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

std::vector<SimpleGraph> enumerate_graphs(std::size_t n) {
  if (n < 1) throw std::invalid_argument("graph enumeration needs n >= 1");
  if (n > kMaxEnumerationVertices)
    throw BoundExceeded("graph enumeration limited to 7 vertices");
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<std::uint32_t>> pair_index(n,
                                                     std::vector<std::uint32_t>(n, 0));
  for (int u = 0; u < static_cast<int>(n); ++u)
    for (int v = u + 1; v < static_cast<int>(n); ++v) {
      pair_index[u][v] = static_cast<std::uint32_t>(pairs.size());
      pairs.emplace_back(u, v);
    }
  const std::size_t m = pairs.size();
  const std::size_t total = std::size_t(1) << m;

  // S_n is generated by one transposition and one full cycle; their induced
  // actions on vertex pairs drive the labelled-graph orbits.
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<std::uint8_t> full(n);
    std::iota(full.begin(), full.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {full}));
  }
  std::vector<std::vector<std::uint32_t>> bit_image(gens.size(),
                                                    std::vector<std::uint32_t>(m));
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < m; ++i) {
      std::uint8_t a = gens[g].apply(static_cast<std::uint8_t>(pairs[i].first));
      std::uint8_t b = gens[g].apply(static_cast<std::uint8_t>(pairs[i].second));
      if (a > b) std::swap(a, b);
      bit_image[g][i] = pair_index[a][b];
    }

  UnionFind uf(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::uint32_t image = 0;
      for (std::uint32_t bits = mask; bits;) {
        const int bit = __builtin_ctz(bits);
        bits &= bits - 1;
        image |= std::uint32_t(1) << bit_image[g][bit];
      }
      uf.unite(mask, image);
    }
  }

  std::vector<SimpleGraph> out;
  std::vector<bool> seen(total, false);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    const std::uint32_t root = uf.find(mask);
    if (seen[root]) continue;
    seen[root] = true;  // ascending scan: the first member is the minimum
    std::vector<std::pair<int, int>> edges;
    for (std::uint32_t bits = mask; bits;) {
      const int bit = __builtin_ctz(bits);
      bits &= bits - 1;
      edges.push_back(pairs[bit]);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

namespace {

/// Index-space view of a parent group: elements are referred to by their
/// position in the sorted element list, with an optional multiplication
/// table for small orders.
struct GroupIndex {
  const PermGroup& group;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  std::vector<std::uint32_t> inverse;
  std::vector<std::uint32_t> table;  // empty when the order is large
  std::size_t order;

  explicit GroupIndex(const PermGroup& g) : group(g), order(g.order()) {
    index.reserve(order * 2);
    for (std::uint32_t i = 0; i < order; ++i)
      index.emplace(g.elements()[i], i);
    inverse.resize(order);
    for (std::uint32_t i = 0; i < order; ++i)
      inverse[i] = index.at(g.elements()[i].inverse());
    if (order <= 2048) {
      table.resize(order * order);
      for (std::uint32_t a = 0; a < order; ++a)
        for (std::uint32_t b = 0; b < order; ++b)
          table[a * order + b] =
              index.at(g.elements()[a] * g.elements()[b]);
    }
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!table.empty()) return table[a * order + b];
    return index.at(group.elements()[a] * group.elements()[b]);
  }

  std::uint32_t conj(std::uint32_t s, std::uint32_t e) const {
    return mul(mul(s, e), inverse[s]);
  }
};

using IndexSet = std::vector<std::uint32_t>;  // sorted element indices

/// Closure of the generators inside the parent, in index space. Returns the
/// sorted index set.
IndexSet close_in_parent(const GroupIndex& gi, const IndexSet& gens) {
  std::vector<bool> in(gi.order, false);
  IndexSet list;
  const std::uint32_t id = gi.index.at(Permutation::identity(gi.group.degree()));
  in[id] = true;
  list.push_back(id);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::uint32_t g : gens) {
      const std::uint32_t p = gi.mul(list[i], g);
      if (!in[p]) {
        in[p] = true;
        list.push_back(p);
        if (list.size() == gi.order) {
          // Early exit: the join is the whole parent group.
          IndexSet all(gi.order);
          std::iota(all.begin(), all.end(), 0);
          return all;
        }
      }
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

}  // namespace

SubgroupLattice subgroup_lattice(const PermGroup& group,
                                 std::size_t order_cap) {
  if (group.order() > order_cap)
    throw BoundExceeded("subgroup enumeration limited to parent order " +
                        std::to_string(order_cap));
  GroupIndex gi(group);

  std::vector<IndexSet> subs;       // discovered subgroups, element-index sets
  std::vector<IndexSet> sub_gens;   // a generating set for each
  std::set<IndexSet> known;
  auto add_subgroup = [&](IndexSet set, IndexSet gens) -> bool {
    if (!known.insert(set).second) return false;
    subs.push_back(std::move(set));
    sub_gens.push_back(std::move(gens));
    return true;
  };

  // Seed with every cyclic subgroup.
  for (std::uint32_t e = 0; e < gi.order; ++e) {
    IndexSet set = close_in_parent(gi, {e});
    add_subgroup(std::move(set), {e});
  }

  // Close under pairwise joins: each unordered pair of known subgroups is
  // processed exactly once, including pairs involving later discoveries.
  for (std::size_t i = 1; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (subs[i].size() == gi.order || subs[j].size() == gi.order) continue;
      if (std::includes(subs[i].begin(), subs[i].end(), subs[j].begin(),
                        subs[j].end()) ||
          std::includes(subs[j].begin(), subs[j].end(), subs[i].begin(),
                        subs[i].end()))
        continue;  // the join is the larger of the two, already known
      IndexSet gens = sub_gens[i];
      gens.insert(gens.end(), sub_gens[j].begin(), sub_gens[j].end());
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      IndexSet joined = close_in_parent(gi, gens);
      add_subgroup(std::move(joined), std::move(gens));
    }
  }

  // Deterministic order: by order, then by element-index list.
  std::vector<std::size_t> by_order(subs.size());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::sort(by_order.begin(), by_order.end(), [&](std::size_t a, std::size_t b) {
    if (subs[a].size() != subs[b].size())
      return subs[a].size() < subs[b].size();
    return subs[a] < subs[b];
  });

  auto realize = [&](const IndexSet& set) {
    std::vector<Permutation> elements;
    elements.reserve(set.size());
    for (std::uint32_t e : set) elements.push_back(group.elements()[e]);
    return PermGroup::from_elements(group.degree(), std::move(elements));
  };

  SubgroupLattice lattice;
  std::set<IndexSet> canonical_seen;
  std::vector<IndexSet> canonical_order;
  for (std::size_t idx : by_order) {
    lattice.all.push_back(realize(subs[idx]));
    // Canonical conjugate: the least conjugated element-index set.
    IndexSet best;
    IndexSet conjugated(subs[idx].size());
    for (std::uint32_t s = 0; s < gi.order; ++s) {
      for (std::size_t t = 0; t < subs[idx].size(); ++t)
        conjugated[t] = gi.conj(s, subs[idx][t]);
      std::sort(conjugated.begin(), conjugated.end());
      if (best.empty() || conjugated < best) best = conjugated;
    }
    if (canonical_seen.insert(best).second)
      canonical_order.push_back(std::move(best));
  }
  for (const IndexSet& set : canonical_order)
    lattice.conjugacy_reps.push_back(realize(set));
  return lattice;
}

std::vector<PermGroup> enumerate_subgroups(const PermGroup& group,
                                           std::size_t order_cap) {
  return subgroup_lattice(group, order_cap).conjugacy_reps;
}

namespace {

std::string vertex_set_string(const std::vector<std::uint8_t>& vertices) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out << ',';
    out << static_cast<int>(vertices[i]);
  }
  out << '}';
  return out.str();
}

}  // namespace

IrreducibilityResult is_irreducible(const PairReport& pair) {
  if (!pair.reciprocal)
    throw std::invalid_argument(
        "irreducibility is defined for reciprocal pairs");
  const SimpleGraph& graph = pair.graph;
  const PermGroup& group = pair.group;
  const auto comps = graph.connected_components();
  const std::size_t m = comps.size();
  if (m < 2) return {true, std::nullopt};

  std::vector<int> comp_of(graph.vertex_count());
  for (std::size_t i = 0; i < m; ++i)
    for (std::uint8_t v : comps[i]) comp_of[v] = static_cast<int>(i);
  auto component_image = [&](const Permutation& g) {
    std::vector<std::uint8_t> img(m);
    for (std::size_t i = 0; i < m; ++i)
      img[i] = static_cast<std::uint8_t>(comp_of[g.apply(comps[i][0])]);
    return Permutation(std::move(img));
  };

  // --- split into two group-invariant unions of component orbits ---
  UnionFind uf(m);
  for (const Permutation& g : group.generators()) {
    const Permutation ci = component_image(g);
    for (std::size_t i = 0; i < m; ++i)
      uf.unite(static_cast<std::uint32_t>(i), ci.apply(static_cast<std::uint8_t>(i)));
  }
  std::vector<std::vector<std::size_t>> orbits;
  {
    std::map<std::uint32_t, std::size_t> root_orbit;
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint32_t root = uf.find(static_cast<std::uint32_t>(i));
      auto [it, inserted] = root_orbit.try_emplace(root, orbits.size());
      if (inserted) orbits.emplace_back();
      orbits[it->second].push_back(i);
    }
  }
  const std::size_t o = orbits.size();
  if (o >= 2) {
    for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t(1) << o); ++mask) {
      if (!(mask & 1)) continue;  // keep orbit 0 on the left to halve the scan
      std::vector<std::uint8_t> left, right;
      for (std::size_t i = 0; i < o; ++i) {
        auto& side = (mask >> i & 1) ? left : right;
        for (std::size_t c : orbits[i])
          side.insert(side.end(), comps[c].begin(), comps[c].end());
      }
      std::sort(left.begin(), left.end());
      std::sort(right.begin(), right.end());
      const PermGroup left_group = group.restricted(left);
      const PermGroup right_group = group.restricted(right);
      if (left_group.order() * right_group.order() != group.order()) continue;
      const PairReport left_pair =
          is_reciprocal_pair(graph.induced(left), left_group);
      if (!left_pair.reciprocal) continue;
      const PairReport right_pair =
          is_reciprocal_pair(graph.induced(right), right_group);
      if (!right_pair.reciprocal) continue;
      DecompositionWitness witness;
      witness.kind = DecompositionWitness::Kind::DirectProduct;
      witness.description = "vertices " + vertex_set_string(left) + " x " +
                            vertex_set_string(right) + "; factor orders " +
                            std::to_string(left_group.order()) + " and " +
                            std::to_string(right_group.order());
      return {false, witness};
    }
  }

  // --- wreath structure over isomorphic components ---
  const std::size_t c = comps[0].size();
  for (const auto& comp : comps)
    if (comp.size() != c) return {true, std::nullopt};
  const SimpleGraph base = graph.induced(comps[0]);
  std::vector<std::vector<Permutation>> isos(m);
  for (std::size_t i = 0; i < m; ++i) {
    isos[i] = all_isomorphisms(base, graph.induced(comps[i]));
    if (isos[i].empty()) return {true, std::nullopt};
  }
  std::vector<Permutation> block_images;
  block_images.reserve(group.order());
  for (const Permutation& e : group.elements())
    block_images.push_back(component_image(e));
  std::vector<Permutation> block_set = block_images;
  std::sort(block_set.begin(), block_set.end());
  block_set.erase(std::unique(block_set.begin(), block_set.end()),
                  block_set.end());
  const PermGroup block_group = PermGroup::from_elements(m, std::move(block_set));
  std::vector<Permutation> kernel_on_base;
  for (std::size_t e = 0; e < group.order(); ++e) {
    if (!block_images[e].is_identity()) continue;
    std::vector<std::uint8_t> img(c);
    for (std::size_t j = 0; j < c; ++j) {
      const std::uint8_t target = group.elements()[e].apply(comps[0][j]);
      img[j] = static_cast<std::uint8_t>(
          std::lower_bound(comps[0].begin(), comps[0].end(), target) -
          comps[0].begin());
    }
    kernel_on_base.emplace_back(std::move(img));
  }
  std::sort(kernel_on_base.begin(), kernel_on_base.end());
  kernel_on_base.erase(
      std::unique(kernel_on_base.begin(), kernel_on_base.end()),
      kernel_on_base.end());
  if (kernel_on_base.empty()) return {true, std::nullopt};
  const PermGroup base_group =
      PermGroup::from_elements(c, std::move(kernel_on_base));
  unsigned __int128 expected = block_group.order();
  for (std::size_t i = 0; i < m; ++i) expected *= base_group.order();
  if (expected != group.order()) return {true, std::nullopt};
  const PairReport base_pair = is_reciprocal_pair(base, base_group);
  if (!base_pair.reciprocal) return {true, std::nullopt};
  const PermGroup candidate = PermGroup::wreath_product(base_group, block_group);

  // Try every per-component choice of isomorphism to align the candidate
  // wreath action with the actual group.
  std::vector<std::size_t> pick(m, 0);
  for (;;) {
    std::vector<std::uint8_t> tau(m * c);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < c; ++j)
        tau[i * c + j] =
            comps[i][isos[i][pick[i]].apply(static_cast<std::uint8_t>(j))];
    const Permutation t(std::move(tau));
    const Permutation t_inv = t.inverse();
    bool match = true;
    for (const Permutation& w : candidate.elements()) {
      if (!group.contains(t * w * t_inv)) {
        match = false;
        break;
      }
    }
    if (match) {
      DecompositionWitness witness;
      witness.kind = DecompositionWitness::Kind::Wreath;
      witness.top_has_odd_permutation = block_group.has_odd_permutation();
      witness.description =
          std::to_string(m) + " isomorphic components of size " +
          std::to_string(c) + "; base group order " +
          std::to_string(base_group.order()) + ", block-permuting group order " +
          std::to_string(block_group.order()) +
          (witness.top_has_odd_permutation ? " (contains odd permutations)"
                                           : " (even permutations only)");
      return {false, witness};
    }
    std::size_t pos = 0;
    while (pos < m && ++pick[pos] == isos[pos].size()) pick[pos++] = 0;
    if (pos == m) break;
  }
  return {true, std::nullopt};
}

namespace {

unsigned __int128 factorial128(std::size_t n) {
  unsigned __int128 f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Classification classify(const PairReport& pair) {
  if (!pair.reciprocal)
    throw std::invalid_argument("only reciprocal pairs are classified");
  const SimpleGraph& graph = pair.graph;
  const PermGroup& group = pair.group;
  const std::size_t n = graph.vertex_count();

  if (graph.edge_count() == 0) {
    if (n == 1)
      return {Classification::Tag::TrivialComplete, "single vertex"};
    return {Classification::Tag::TrivialNull,
            "edgeless graph; group free of odd permutations"};
  }
  if (graph.edge_count() == n * (n - 1) / 2 &&
      factorial128(n) == group.order()) {
    return {Classification::Tag::TrivialComplete,
            "complete graph with its full symmetric group"};
  }
  if (n == 4 && graph.edge_count() == 4 && group.order() == 8 &&
      isomorphic(graph, SimpleGraph::cycle(4))) {
    return {Classification::Tag::FourCycle,
            "the 4-cycle with its full symmetry group"};
  }

  // k-star family: relabel onto the reference k-star, then compare with the
  // family groups for every block-permuting subgroup up to conjugacy.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if ((n - k) % (k + 1) != 0) continue;
    const std::size_t r = (n - k) / (k + 1);
    const SimpleGraph target = SimpleGraph::k_star(k, n);
    if (graph.edge_count() != target.edge_count()) continue;
    const std::vector<Permutation> isos = all_isomorphisms(graph, target);
    if (isos.empty()) continue;
    for (const PermGroup& top : enumerate_subgroups(PermGroup::symmetric(r))) {
      if (k % 2 == 0 && top.has_odd_permutation()) continue;
      const PermGroup candidate = kstar_family_group(k, r, top);
      if (candidate.order() != group.order()) continue;
      for (const Permutation& s : isos) {
        if (group.conjugate(s) == candidate) {
          return {Classification::Tag::KStar,
                  "k=" + std::to_string(k) + ", r=" + std::to_string(r) +
                      ", block-permuting subgroup of order " +
                      std::to_string(top.order())};
        }
      }
    }
  }

  const IrreducibilityResult ir = is_irreducible(pair);
  if (!ir.irreducible) {
    const DecompositionWitness& w = *ir.witness;
    if (w.kind == DecompositionWitness::Kind::DirectProduct)
      return {Classification::Tag::ProductDerived, w.description};
    return {Classification::Tag::WreathDerived, w.description};
  }
  return {Classification::Tag::Unknown, "no classifier matched"};
}

namespace {

struct GraphOutcome {
  bool done = false;
  std::size_t subgroups = 0;
  std::vector<PairReport> pairs;
};

/// JSON-lines cache of per-graph outcomes, keyed by code version and search
/// parameters; stale or foreign files are discarded wholesale.
class SearchCache {
 public:
  SearchCache(const SearchOptions& options, std::size_t n) {
    if (!options.cache_dir) return;
    std::filesystem::create_directories(*options.cache_dir);
    path_ = std::filesystem::path(*options.cache_dir) /
            ("search-n" + std::to_string(n) + ".jsonl");
    header_ = Json{{"type", "header"},
                   {"version", kVersion},
                   {"n", n},
                   {"subgroup_order_cap", options.subgroup_order_cap}};
  }

  void load(std::vector<GraphOutcome>& slots) {
    if (!path_) return;
    std::ifstream in(*path_);
    if (!in) return;
    std::string line;
    bool header_ok = false;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Json j = Json::parse(line, nullptr, false);
      if (j.is_discarded()) break;  // truncated tail; recompute the rest
      const std::string type = j.value("type", "");
      if (!header_ok) {
        if (type != "header" || j != header_) {
          stale_ = true;
          return;
        }
        header_ok = true;
        continue;
      }
      if (type != "graph") continue;
      const std::size_t index = j.at("index").get<std::size_t>();
      if (index >= slots.size()) continue;
      GraphOutcome outcome;
      outcome.subgroups = j.at("subgroups").get<std::size_t>();
      for (const Json& p : j.at("pairs"))
        outcome.pairs.push_back(pair_report_from_json(p));
      outcome.done = true;
      slots[index] = std::move(outcome);
    }
    header_written_ = header_ok;
  }

  void append(std::size_t index, const GraphOutcome& outcome) {
    if (!path_) return;
    Json line{{"type", "graph"},
              {"index", index},
              {"subgroups", outcome.subgroups}};
    Json pairs = Json::array();
    for (const PairReport& p : outcome.pairs) pairs.push_back(to_json(p));
    line["pairs"] = std::move(pairs);
    std::lock_guard<std::mutex> lock(mutex_);
    std::ofstream out(*path_, stale_ || !header_written_
                                  ? std::ios::trunc
                                  : std::ios::app);
    if (!out) return;
    if (stale_ || !header_written_) {
      out << header_.dump() << '\n';
      header_written_ = true;
      stale_ = false;
    }
    out << line.dump() << '\n';
  }

 private:
  std::optional<std::filesystem::path> path_;
  Json header_;
  bool header_written_ = false;
  bool stale_ = false;
  std::mutex mutex_;
};

}  // namespace

SearchResult search_pairs(std::size_t n, const SearchOptions& options) {
  if (n < 1) throw std::invalid_argument("search needs n >= 1");
  if (n > options.max_n)
    throw BoundExceeded("search bound is n <= " +
                        std::to_string(options.max_n));
  const std::vector<SimpleGraph> graphs = enumerate_graphs(n);
  std::vector<GraphOutcome> slots(graphs.size());
  SearchCache cache(options, n);
  cache.load(slots);

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      if (slots[i].done) continue;
      try {
        GraphOutcome outcome;
        const PermGroup aut = automorphism_group(graphs[i]);
        const std::vector<PermGroup> subgroups =
            enumerate_subgroups(aut, options.subgroup_order_cap);
        outcome.subgroups = subgroups.size();
        for (const PermGroup& sub : subgroups) {
          PairReport report = is_reciprocal_pair(graphs[i], sub);
          if (!report.reciprocal) continue;
          report.classification = classify(report);
          outcome.pairs.push_back(std::move(report));
        }
        outcome.done = true;
        cache.append(i, outcome);
        slots[i] = std::move(outcome);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  unsigned jobs = std::max(1u, options.jobs);
  jobs = static_cast<unsigned>(
      std::min<std::size_t>(jobs, graphs.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  SearchResult result;
  result.n = n;
  result.graphs_examined = graphs.size();
  for (GraphOutcome& slot : slots) {
    result.subgroups_examined += slot.subgroups;
    for (PairReport& p : slot.pairs) result.pairs.push_back(std::move(p));
  }
  return result;
}

}  // namespace recipair
