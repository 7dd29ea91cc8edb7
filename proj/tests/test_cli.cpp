#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "recipair/graph.hpp"
#include "recipair/group.hpp"
#include "recipair/io.hpp"

using namespace recipair;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string command =
      env + (env.empty() ? "" : " ") + RECIPAIR_CLI_PATH " " + args +
      " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<Json> parse_lines(const std::string& text) {
  std::vector<Json> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    if (end > start) lines.push_back(Json::parse(text.substr(start, end - start)));
    start = end + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("polynomial commands print one-line display forms") {
  const RunResult cycle = run_cli("cycle-poly --group sym:3");
  CHECK(cycle.exit_code == 0);
  CHECK(cycle.output == "x^3+3x^2+2x\n");

  const RunResult chrom = run_cli("chrom-poly --graph complete:3");
  CHECK(chrom.exit_code == 0);
  CHECK(chrom.output == "x^3-3x^2+2x\n");

  const RunResult orbital =
      run_cli("orbital --graph cycle:4 --group dihedral:4");
  CHECK(orbital.exit_code == 0);
  CHECK(orbital.output == "x^4-2x^3+3x^2-2x\n");
}

TEST_CASE("check exit codes reflect the verdict") {
  const RunResult good = run_cli("check --graph cycle:4 --group dihedral:4");
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("reciprocal: yes") != std::string::npos);

  const RunResult bad = run_cli("check --graph cycle:4 --group cyclic:4");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("reciprocal: no") != std::string::npos);

  // A group that is not an automorphism group is an input error, not a
  // negative verdict.
  CHECK(run_cli("check --graph cycle:4 --group sym:4").exit_code == 2);
}

TEST_CASE("family verification exit codes") {
  CHECK(run_cli("theorem1 --k 1 --r 2 --h s").exit_code == 0);
  CHECK(run_cli("theorem1 --k 2 --r 2 --h a").exit_code == 0);
  CHECK(run_cli("theorem1 --k 2 --r 2 --h s").exit_code == 1);
  CHECK(run_cli("theorem1 --k 1 --r 1 --h nonsense").exit_code == 2);
}

TEST_CASE("argument and bound errors") {
  CHECK(run_cli("cycle-poly").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("cycle-poly --group monster:1").exit_code == 2);
  CHECK(run_cli("chrom-poly --graph cycle:2").exit_code == 2);
  CHECK(run_cli("search --n 9").exit_code == 3);
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}

TEST_CASE("--version") {
  const RunResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0.1.0\n");
}

TEST_CASE("json output round-trips") {
  const RunResult check =
      run_cli("check --graph cycle:4 --group dihedral:4 --json");
  CHECK(check.exit_code == 0);
  const Json j = Json::parse(check.output);
  const PairReport report = pair_report_from_json(j);
  CHECK(report.graph == SimpleGraph::cycle(4));
  CHECK(report.group == PermGroup::dihedral(4));
  CHECK(report.reciprocal);

  const RunResult cycle = run_cli("cycle-poly --group sym:3 --json");
  const Json cj = Json::parse(cycle.output);
  CHECK(polynomial_from_json(cj.at("cycle")) ==
        PermGroup::symmetric(3).cycle_polynomial());
  CHECK(group_from_json(cj.at("group")) == PermGroup::symmetric(3));

  const RunResult chrom = run_cli("chrom-poly --graph kstar:2,5 --json");
  const Json hj = Json::parse(chrom.output);
  CHECK(graph_from_json(hj.at("graph")) == SimpleGraph::k_star(2, 5));
  CHECK(polynomial_from_json(hj.at("chromatic")) ==
        chromatic_polynomial(SimpleGraph::k_star(2, 5)));
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::string> commands = {
      "check --graph cycle:4 --group dihedral:4 --json",
      "search --n 4 --json",
      "theorem1 --k 2 --r 1 --json",
      "classify --graph cycle:4 --group dihedral:4",
  };
  for (const auto& command : commands) {
    const RunResult a = run_cli(command);
    const RunResult b = run_cli(command);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
  }
}

TEST_CASE("search emits JSON lines with a trailing summary") {
  const RunResult r = run_cli("search --n 4 --json");
  CHECK(r.exit_code == 0);
  const std::vector<Json> lines = parse_lines(r.output);
  REQUIRE(!lines.empty());
  const Json& summary = lines.back();
  CHECK(summary.at("type") == "summary");
  CHECK(summary.at("n") == 4);
  CHECK(summary.at("graphs_examined") == 11);
  std::size_t pair_lines = 0;
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    CHECK(lines[i].at("type") == "pair");
    const PairReport report = pair_report_from_json(lines[i]);
    CHECK(report.reciprocal);
    ++pair_lines;
  }
  CHECK(summary.at("pairs_found") == pair_lines);
}

TEST_CASE("search worker count does not change the output") {
  const RunResult serial = run_cli("search --n 4 --json --jobs 1");
  const RunResult parallel = run_cli("search --n 4 --json --jobs 4");
  CHECK(serial.exit_code == parallel.exit_code);
  CHECK(serial.output == parallel.output);
}

TEST_CASE("search cache directory is honoured") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "recipair-cli-cache-test";
  fs::remove_all(dir);
  const std::string env = "RECIPAIR_CACHE_DIR=" + dir.string();

  const RunResult cold = run_cli("search --n 3 --json", env);
  CHECK(cold.exit_code == 0);
  CHECK(fs::exists(dir / "search-n3.jsonl"));
  const RunResult warm = run_cli("search --n 3 --json", env);
  CHECK(warm.exit_code == 0);
  CHECK(warm.output == cold.output);

  const RunResult uncached = run_cli("search --n 3 --json");
  CHECK(uncached.output == cold.output);
  fs::remove_all(dir);
}

TEST_CASE("classify explains pinned pairs") {
  const RunResult four_cycle =
      run_cli("classify --graph cycle:4 --group dihedral:4");
  CHECK(four_cycle.exit_code == 0);
  CHECK(four_cycle.output.rfind("FourCycle", 0) == 0);

  const RunResult inline_pair = run_cli(
      "classify --pair "
      "'{\"graph\":{\"n\":4,\"edges\":[[0,1],[1,2],[2,3],[0,3]]},"
      "\"group\":{\"degree\":4,\"generators\":[\"(1,2,3,4)\",\"(2,4)\"]}}'");
  CHECK(inline_pair.exit_code == 0);
  CHECK(inline_pair.output.rfind("FourCycle", 0) == 0);

  const RunResult json_mode =
      run_cli("classify --graph null:4 --group alt:4 --json");
  CHECK(json_mode.exit_code == 0);
  const Json j = Json::parse(json_mode.output);
  CHECK(j.at("reciprocal") == true);
  CHECK(j.at("classification").at("tag") == "TrivialNull");

  const RunResult not_reciprocal =
      run_cli("classify --graph cycle:4 --group cyclic:4");
  CHECK(not_reciprocal.exit_code == 1);
  CHECK(not_reciprocal.output.find("not reciprocal") != std::string::npos);

  CHECK(run_cli("classify").exit_code == 2);
}
