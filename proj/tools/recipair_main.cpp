#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "recipair/errors.hpp"
#include "recipair/graph.hpp"
#include "recipair/group.hpp"
#include "recipair/io.hpp"
#include "recipair/poly.hpp"
#include "recipair/reciprocity.hpp"
#include "recipair/search.hpp"
#include "recipair/version.hpp"

namespace {

using namespace recipair;

std::string edges_string(const SimpleGraph& g) {
  if (g.edge_count() == 0) return "(none)";
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << '(' << u << ',' << v << ')';
  return out.str();
}

void print_pair_human(const PairReport& report) {
  std::cout << "graph:      n=" << report.graph.vertex_count()
            << " edges=" << edges_string(report.graph) << '\n';
  std::cout << "group:      order " << report.group.order() << '\n';
  std::cout << "orbital:    " << to_display_string(report.orbital) << '\n';
  std::cout << "cycle:      " << to_display_string(report.cycle) << '\n';
  std::cout << "reciprocal: " << (report.reciprocal ? "yes" : "no") << '\n';
}

int run_cycle_poly(const std::string& group_spec, bool as_json) {
  const PermGroup group = group_from_spec(group_spec);
  const IntPolynomial f = group.cycle_polynomial();
  if (as_json) {
    Json j{{"group", to_json(group)}, {"cycle", to_json(f)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_display_string(f) << '\n';
  }
  return 0;
}

int run_chrom_poly(const std::string& graph_spec, bool as_json) {
  const SimpleGraph graph = graph_from_spec(graph_spec);
  const IntPolynomial p = chromatic_polynomial(graph);
  if (as_json) {
    Json j{{"graph", to_json(graph)}, {"chromatic", to_json(p)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_display_string(p) << '\n';
  }
  return 0;
}

int run_orbital(const std::string& graph_spec, const std::string& group_spec,
                bool as_json) {
  const SimpleGraph graph = graph_from_spec(graph_spec);
  const PermGroup group = group_from_spec(group_spec);
  const IntPolynomial p = orbital_chromatic_polynomial(graph, group);
  if (as_json) {
    Json j{{"graph", to_json(graph)},
           {"group", to_json(group)},
           {"orbital", to_json(p)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_display_string(p) << '\n';
  }
  return 0;
}

int run_check(const std::string& graph_spec, const std::string& group_spec,
              bool as_json) {
  const SimpleGraph graph = graph_from_spec(graph_spec);
  const PermGroup group = group_from_spec(group_spec);
  const PairReport report = is_reciprocal_pair(graph, group);
  if (as_json) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    print_pair_human(report);
  }
  return report.reciprocal ? 0 : 1;
}

int run_theorem1(std::size_t k, std::size_t r, const std::string& top_name,
                 bool as_json) {
  PermGroup top = [&] {
    if (top_name == "s") return PermGroup::symmetric(r);
    if (top_name == "a") return PermGroup::alternating(r);
    if (top_name == "trivial") return PermGroup::trivial(r);
    throw std::invalid_argument("--h must be one of: s, a, trivial");
  }();
  const PairReport report = verify_kstar_family(k, r, top);
  if (as_json) {
    Json j{{"k", k},
           {"r", r},
           {"h", top_name},
           {"n", report.graph.vertex_count()},
           {"report", to_json(report)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "k=" << k << " r=" << r
              << " n=" << report.graph.vertex_count()
              << " group order=" << report.group.order() << '\n';
    print_pair_human(report);
  }
  return report.reciprocal ? 0 : 1;
}

int run_search(std::size_t n, const SearchOptions& options, bool strict,
               bool as_json) {
  const SearchResult result = search_pairs(n, options);
  bool any_unknown = false;
  for (const PairReport& pair : result.pairs) {
    const bool unknown = pair.classification &&
                         pair.classification->tag == Classification::Tag::Unknown;
    any_unknown = any_unknown || unknown;
    if (as_json) {
      Json line = to_json(pair);
      line["type"] = "pair";
      std::cout << line.dump() << '\n';
    } else {
      std::cout << "pair n=" << pair.graph.vertex_count()
                << " edges=" << edges_string(pair.graph)
                << " order=" << pair.group.order() << " tag="
                << (pair.classification
                        ? classification_tag_name(pair.classification->tag)
                        : std::string("(none)"))
                << '\n';
    }
  }
  if (as_json) {
    Json summary{{"type", "summary"},
                 {"n", result.n},
                 {"graphs_examined", result.graphs_examined},
                 {"subgroups_examined", result.subgroups_examined},
                 {"pairs_found", result.pairs.size()}};
    std::cout << summary.dump() << '\n';
  } else {
    std::cout << "summary n=" << result.n << " graphs="
              << result.graphs_examined << " subgroups="
              << result.subgroups_examined << " pairs=" << result.pairs.size()
              << '\n';
  }
  return strict && any_unknown ? 1 : 0;
}

int run_classify(const std::string& pair_json, const std::string& graph_spec,
                 const std::string& group_spec, bool as_json) {
  SimpleGraph graph;
  PermGroup group = PermGroup::trivial(1);
  if (!pair_json.empty()) {
    const Json j = Json::parse(pair_json);
    graph = graph_from_json(j.at("graph"));
    group = group_from_json(j.at("group"));
  } else if (!graph_spec.empty() && !group_spec.empty()) {
    graph = graph_from_spec(graph_spec);
    group = group_from_spec(group_spec);
  } else {
    throw std::invalid_argument(
        "classify needs either --pair or both --graph and --group");
  }
  PairReport report = is_reciprocal_pair(graph, group);
  if (!report.reciprocal) {
    if (as_json) {
      Json j{{"reciprocal", false}, {"classification", nullptr}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "pair is not reciprocal; nothing to classify\n";
    }
    return 1;
  }
  report.classification = classify(report);
  if (as_json) {
    Json j{{"reciprocal", true},
           {"classification", to_json(*report.classification)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << classification_tag_name(report.classification->tag) << ": "
              << report.classification->evidence << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for cycle polynomials, orbital chromatic "
               "polynomials, and reciprocal graph/group pairs"};
  app.set_version_flag("--version", std::string(recipair::kVersion));
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  std::string group_spec, graph_spec, top_name = "s", pair_json;
  std::size_t k = 1, r = 1, n = 0;
  SearchOptions options;
  bool strict = false;

  CLI::App* cycle_cmd =
      app.add_subcommand("cycle-poly", "cycle polynomial of a group");
  cycle_cmd->add_option("--group", group_spec, "group spec")->required();

  CLI::App* chrom_cmd =
      app.add_subcommand("chrom-poly", "chromatic polynomial of a graph");
  chrom_cmd->add_option("--graph", graph_spec, "graph spec")->required();

  CLI::App* orbital_cmd = app.add_subcommand(
      "orbital", "orbital chromatic polynomial of a graph under a group");
  orbital_cmd->add_option("--graph", graph_spec, "graph spec")->required();
  orbital_cmd->add_option("--group", group_spec, "group spec")->required();

  CLI::App* check_cmd = app.add_subcommand(
      "check", "test a graph/group pair for reciprocity");
  check_cmd->add_option("--graph", graph_spec, "graph spec")->required();
  check_cmd->add_option("--group", group_spec, "group spec")->required();

  CLI::App* theorem_cmd = app.add_subcommand(
      "theorem1", "build and verify a k-star family pair");
  // The pinned option name --h collides with the default -h help alias.
  theorem_cmd->set_help_flag("--help", "print help");
  theorem_cmd->add_option("--k", k, "clique size")->required();
  theorem_cmd->add_option("--r", r, "number of outer blocks")->required();
  theorem_cmd->add_option("--h", top_name,
                          "block-permuting group: s, a, or trivial");

  CLI::App* search_cmd = app.add_subcommand(
      "search", "enumerate reciprocal pairs on n vertices");
  search_cmd->add_option("--n", n, "vertex count")->required();
  search_cmd->add_option("--jobs", options.jobs, "worker threads");
  search_cmd->add_option("--max-n", options.max_n, "search bound override");
  search_cmd->add_option("--subgroup-cap", options.subgroup_order_cap,
                         "largest automorphism group to expand");
  search_cmd->add_flag("--strict", strict,
                       "exit 1 when any pair classifies as Unknown");

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "explain why a reciprocal pair is reciprocal");
  classify_cmd->add_option("--pair", pair_json,
                           "pair as JSON with \"graph\" and \"group\"");
  classify_cmd->add_option("--graph", graph_spec, "graph spec");
  classify_cmd->add_option("--group", group_spec, "group spec");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cycle_cmd->parsed()) return run_cycle_poly(group_spec, as_json);
    if (chrom_cmd->parsed()) return run_chrom_poly(graph_spec, as_json);
    if (orbital_cmd->parsed())
      return run_orbital(graph_spec, group_spec, as_json);
    if (check_cmd->parsed()) return run_check(graph_spec, group_spec, as_json);
    if (theorem_cmd->parsed()) return run_theorem1(k, r, top_name, as_json);
    if (search_cmd->parsed()) {
      if (const char* dir = std::getenv("RECIPAIR_CACHE_DIR"))
        if (*dir) options.cache_dir = dir;
      return run_search(n, options, strict, as_json);
    }
    if (classify_cmd->parsed())
      return run_classify(pair_json, graph_spec, group_spec, as_json);
  } catch (const recipair::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const recipair::Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
