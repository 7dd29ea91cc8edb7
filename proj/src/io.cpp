#include "recipair/io.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace recipair {

Json to_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const Integer& c : p.coeffs()) coeffs.push_back(c.get_str());
  return coeffs;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array())
    throw std::invalid_argument("polynomial must be a JSON array");
  std::vector<Integer> coeffs;
  for (const Json& item : j) {
    if (item.is_string()) {
      try {
        coeffs.emplace_back(item.get<std::string>());
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed polynomial coefficient: " +
                                    item.get<std::string>());
      }
    } else if (item.is_number_integer()) {
      coeffs.emplace_back(static_cast<long>(item.get<std::int64_t>()));
    } else {
      throw std::invalid_argument(
          "polynomial coefficients must be decimal strings");
    }
  }
  return IntPolynomial(std::move(coeffs));
}

Json to_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

SimpleGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph needs \"n\" and \"edges\"");
  const std::size_t n = j.at("n").get<std::size_t>();
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("each edge must be a two-element array");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return SimpleGraph(n, std::move(edges));
}

Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const Permutation& p : g.generators())
    gens.push_back(to_cycle_string(p));
  return Json{{"degree", g.degree()},
              {"order", g.order()},
              {"generators", std::move(gens)}};
}

PermGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw std::invalid_argument("group needs \"degree\" and \"generators\"");
  const std::size_t degree = j.at("degree").get<std::size_t>();
  std::vector<Permutation> gens;
  for (const Json& g : j.at("generators"))
    gens.push_back(
        permutation_from_cycle_string(degree, g.get<std::string>()));
  return PermGroup::close(degree, std::move(gens));
}

std::string classification_tag_name(Classification::Tag tag) {
  switch (tag) {
    case Classification::Tag::TrivialNull: return "TrivialNull";
    case Classification::Tag::TrivialComplete: return "TrivialComplete";
    case Classification::Tag::FourCycle: return "FourCycle";
    case Classification::Tag::KStar: return "KStar";
    case Classification::Tag::ProductDerived: return "ProductDerived";
    case Classification::Tag::WreathDerived: return "WreathDerived";
    case Classification::Tag::Unknown: return "Unknown";
  }
  throw std::logic_error("unreachable classification tag");
}

Classification::Tag classification_tag_from_name(const std::string& name) {
  if (name == "TrivialNull") return Classification::Tag::TrivialNull;
  if (name == "TrivialComplete") return Classification::Tag::TrivialComplete;
  if (name == "FourCycle") return Classification::Tag::FourCycle;
  if (name == "KStar") return Classification::Tag::KStar;
  if (name == "ProductDerived") return Classification::Tag::ProductDerived;
  if (name == "WreathDerived") return Classification::Tag::WreathDerived;
  if (name == "Unknown") return Classification::Tag::Unknown;
  throw std::invalid_argument("unknown classification tag: " + name);
}

Json to_json(const Classification& c) {
  return Json{{"tag", classification_tag_name(c.tag)},
              {"evidence", c.evidence}};
}

Classification classification_from_json(const Json& j) {
  return Classification{
      classification_tag_from_name(j.at("tag").get<std::string>()),
      j.at("evidence").get<std::string>()};
}

Json to_json(const PairReport& report) {
  Json j{{"graph", to_json(report.graph)},
         {"group", to_json(report.group)},
         {"orbital", to_json(report.orbital)},
         {"cycle", to_json(report.cycle)},
         {"reciprocal", report.reciprocal}};
  j["classification"] =
      report.classification ? to_json(*report.classification) : Json(nullptr);
  return j;
}

PairReport pair_report_from_json(const Json& j) {
  PairReport report{graph_from_json(j.at("graph")),
                    group_from_json(j.at("group")),
                    polynomial_from_json(j.at("orbital")),
                    polynomial_from_json(j.at("cycle")),
                    j.at("reciprocal").get<bool>(),
                    std::nullopt};
  if (j.contains("classification") && !j.at("classification").is_null())
    report.classification = classification_from_json(j.at("classification"));
  return report;
}

Json to_json(const SearchResult& result) {
  Json pairs = Json::array();
  for (const PairReport& p : result.pairs) pairs.push_back(to_json(p));
  return Json{{"n", result.n},
              {"graphs_examined", result.graphs_examined},
              {"subgroups_examined", result.subgroups_examined},
              {"pairs_found", result.pairs.size()},
              {"pairs", std::move(pairs)}};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::size_t parse_size(std::string_view& s, const char* what) {
  std::size_t digits = 0;
  while (digits < s.size() &&
         std::isdigit(static_cast<unsigned char>(s[digits])))
    ++digits;
  if (digits == 0)
    throw std::invalid_argument(std::string("expected a number in ") + what);
  const std::size_t value = std::stoul(std::string(s.substr(0, digits)));
  s.remove_prefix(digits);
  return value;
}

PermGroup parse_group(std::string_view& s) {
  const std::size_t colon = s.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("group spec needs the form name:args");
  const std::string_view name = s.substr(0, colon);
  s.remove_prefix(colon + 1);
  if (name == "trivial") return PermGroup::trivial(parse_size(s, "group spec"));
  if (name == "sym") return PermGroup::symmetric(parse_size(s, "group spec"));
  if (name == "alt") return PermGroup::alternating(parse_size(s, "group spec"));
  if (name == "cyclic") return PermGroup::cyclic(parse_size(s, "group spec"));
  if (name == "dihedral") return PermGroup::dihedral(parse_size(s, "group spec"));
  if (name == "product" || name == "wreath") {
    PermGroup a = parse_group(s);
    if (s.empty() || s.front() != ',')
      throw std::invalid_argument("expected ',' between group factors");
    s.remove_prefix(1);
    PermGroup b = parse_group(s);
    return name == "product" ? PermGroup::direct_product(a, b)
                             : PermGroup::wreath_product(a, b);
  }
  throw std::invalid_argument("unknown group spec: " + std::string(name));
}

}  // namespace

SimpleGraph graph_from_spec(const std::string& spec) {
  std::string_view s = trim(spec);
  if (s.empty()) throw std::invalid_argument("empty graph spec");
  if (s.front() == '{') return graph_from_json(Json::parse(s));
  const std::size_t colon = s.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("graph spec needs the form name:args");
  const std::string_view name = s.substr(0, colon);
  std::string_view rest = s.substr(colon + 1);
  SimpleGraph result = [&] {
    if (name == "null") return SimpleGraph::null_graph(parse_size(rest, "graph spec"));
    if (name == "complete") return SimpleGraph::complete(parse_size(rest, "graph spec"));
    if (name == "cycle") return SimpleGraph::cycle(parse_size(rest, "graph spec"));
    if (name == "kstar") {
      const std::size_t k = parse_size(rest, "graph spec");
      if (rest.empty() || rest.front() != ',')
        throw std::invalid_argument("kstar spec needs the form kstar:K,N");
      rest.remove_prefix(1);
      const std::size_t n = parse_size(rest, "graph spec");
      return SimpleGraph::k_star(k, n);
    }
    throw std::invalid_argument("unknown graph spec: " + std::string(name));
  }();
  if (!rest.empty())
    throw std::invalid_argument("trailing characters in graph spec");
  return result;
}

PermGroup group_from_spec(const std::string& spec) {
  std::string_view s = trim(spec);
  if (s.empty()) throw std::invalid_argument("empty group spec");
  if (s.front() == '{') return group_from_json(Json::parse(s));
  PermGroup result = parse_group(s);
  if (!s.empty())
    throw std::invalid_argument("trailing characters in group spec");
  return result;
}

}  // namespace recipair
