// Black-box drive of the command line tool. argv[1] is the binary path;
// scratch files land in the working directory under a smoke_ prefix.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "twoblock/generators.hpp"
#include "twoblock/graph_io.hpp"
#include "twoblock/oriented_graph.hpp"
#include "twoblock/path_model.hpp"

using namespace twoblock;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& name, const std::string& detail = "") {
  if (ok) {
    std::printf("ok - %s\n", name.c_str());
  } else {
    ++g_failures;
    std::printf("FAIL - %s%s%s\n", name.c_str(), detail.empty() ? "" : ": ",
                detail.c_str());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& cli, const std::string& args) {
  const std::string cmd = cli + " " + args + " > smoke_stdout.txt 2> smoke_stderr.txt";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = read_file("smoke_stdout.txt");
  r.err = read_file("smoke_stderr.txt");
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Parses the embedding the CLI printed and re-verifies it against the graph.
bool embedding_checks_out(const OrientedGraph& g, const std::string& stdout_text,
                          const std::string& expected_pattern) {
  const auto j = nlohmann::json::parse(stdout_text, nullptr, false);
  if (j.is_discarded()) return false;
  if (j["pattern"] != expected_pattern) return false;
  Embedding emb{j["vertices"].get<std::vector<int>>()};
  return !verify_embedding(g, PathPattern(expected_pattern), emb).has_value();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::printf("usage: cli_smoke <path-to-cli>\n");
    return 1;
  }
  const std::string cli = argv[1];

  const OrientedGraph rt7 = regular_tournament(7);
  const OrientedGraph triangle = directed_triangle();
  write_file("smoke_tri.json", graph_to_json(triangle) + "\n");
  write_file("smoke_chain5.json",
             graph_to_json(OrientedGraph::from_arcs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})) +
                 "\n");
  write_file("smoke_fallback.json",
             graph_to_json(OrientedGraph::from_arcs(5, {{1, 0}, {2, 1}, {2, 3}, {3, 4}})) +
                 "\n");
  write_file("smoke_bad.json", "{oops\n");

  // generation round trip
  {
    const RunResult r =
        run(cli, "gen --family regular-tournament --n 7 --out smoke_rt7.json "
                 "--dot-out smoke_rt7.dot");
    const std::string json = read_file("smoke_rt7.json");
    bool ok = r.code == 0 && !json.empty();
    if (ok) ok = graph_from_json(json) == rt7;
    check(ok, "gen writes the rotational tournament", "exit " + std::to_string(r.code));
    const std::string dot = read_file("smoke_rt7.dot");
    check(contains(dot, "digraph {") && contains(dot, "0 -> 1;"),
          "gen writes Graphviz output");
  }
  {
    const RunResult r = run(cli, "gen --family regular-tournament --n 5 --out smoke_rt5.json");
    check(r.code == 0, "gen writes the 5-vertex tournament");
  }

  // embed, both orientations, with a trace
  {
    const RunResult r = run(cli, "embed smoke_rt7.json --k 4 --ell 2 --trace smoke_trace.json");
    check(r.code == 0 && embedding_checks_out(rt7, r.out, "BBFF"),
          "embed back-first returns a valid embedding", r.out);
    const auto trace = nlohmann::json::parse(read_file("smoke_trace.json"), nullptr, false);
    check(!trace.is_discarded() && trace["k"] == 4 && trace["ell"] == 2 &&
              trace.contains("case") && trace.contains("windows"),
          "embed writes a replayable trace");
  }
  {
    const RunResult r = run(cli, "embed smoke_rt7.json --k 4 --ell 2 --orientation forward-first");
    check(r.code == 0 && embedding_checks_out(rt7, r.out, "FFBB"),
          "embed forward-first flips the block order", r.out);
  }
  {
    const RunResult r = run(cli, "embed smoke_rt7.json --k 4 --ell 2 --heuristic");
    check(r.code == 0 && embedding_checks_out(rt7, r.out, "BBFF"),
          "heuristic embed agrees on the result", r.out);
  }

  // threshold refusals and the oracle fallback
  {
    const RunResult r = run(cli, "embed smoke_tri.json --k 4 --ell 2");
    check(r.code == 2 && contains(r.err, "threshold not met"),
          "embed refuses below the threshold", "exit " + std::to_string(r.code));
  }
  {
    const RunResult r = run(cli, "embed smoke_tri.json --k 4 --ell 2 --oracle-fallback");
    check(r.code == 2 && contains(r.err, "certifies the pattern absent"),
          "fallback certifies absence on the triangle", "exit " + std::to_string(r.code));
  }
  {
    const RunResult r = run(cli, "embed smoke_fallback.json --k 4 --ell 2 --oracle-fallback");
    const OrientedGraph g = OrientedGraph::from_arcs(5, {{1, 0}, {2, 1}, {2, 3}, {3, 4}});
    check(r.code == 0 && embedding_checks_out(g, r.out, "BBFF"),
          "fallback embeds a sparse positive instance", r.out);
  }

  // one-block routes through the exact path search
  {
    const RunResult r = run(cli, "embed smoke_rt7.json --k 3 --ell 3");
    check(r.code == 0 && embedding_checks_out(rt7, r.out, "BBB"),
          "one-block back request", r.out);
  }
  {
    const RunResult r = run(cli, "embed smoke_rt7.json --k 3 --ell 0");
    check(r.code == 0 && embedding_checks_out(rt7, r.out, "FFF"),
          "one-block forward request", r.out);
  }
  {
    const RunResult r = run(cli, "embed smoke_tri.json --k 3 --ell 3");
    check(r.code == 2, "one-block refuses when the order is too small",
          "exit " + std::to_string(r.code));
  }

  // oracle subcommand
  {
    const RunResult r = run(cli, "oracle smoke_tri.json --pattern FF");
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(r.code == 0 && !j.is_discarded() && j["found"] == true &&
              j["exhausted"] == false && !j["embedding"].is_null(),
          "oracle finds the forward pair in the triangle");
  }
  {
    const RunResult r = run(cli, "oracle smoke_tri.json --pattern FB");
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(r.code == 0 && !j.is_discarded() && j["found"] == false &&
              j["exhausted"] == false && j["antidirected"] == true,
          "oracle certifies an absence");
  }
  {
    const RunResult r = run(cli, "oracle smoke_rt5.json --all-orientations --k 4");
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    bool ok = r.code == 0 && !j.is_discarded() && j["classes"].size() == 10 &&
              j["missing"].size() == 2 && j["all_present"] == false;
    if (ok) {
      for (const auto& miss : j["missing"]) ok = ok && miss["antidirected"] == true;
    }
    check(ok, "orientation survey of the 5-vertex tournament");
  }

  // longest-path
  {
    const RunResult r = run(cli, "longest-path smoke_chain5.json");
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(r.code == 0 && !j.is_discarded() && j["length"] == 4 &&
              j["certified"] == true &&
              j["vertices"] == nlohmann::json::parse("[0,1,2,3,4]"),
          "longest-path certifies the chain");
  }

  // verify-theorem
  {
    write_file("smoke_cfg.json", R"({"pairs":[[4,2]],"instances_per_pair":3,"seed":11})");
    const RunResult r = run(cli,
                            "verify-theorem --config smoke_cfg.json --csv-out smoke_sweep.csv "
                            "--summary-out smoke_sum.json");
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    bool ok = r.code == 0 && !j.is_discarded() && j["rows"] == 6 && j["ok"] == 6;
    const std::string csv = read_file("smoke_sweep.csv");
    std::size_t lines = 0;
    for (char c : csv) lines += c == '\n';
    ok = ok && lines == 7 && contains(csv, "graph_id,");
    ok = ok && !read_file("smoke_sum.json").empty();
    check(ok, "verify-theorem writes csv and summary", "exit " + std::to_string(r.code));
  }

  // tightness
  {
    const RunResult r = run(cli, "tightness --k 4");
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(r.code == 0 && !j.is_discarded() && j["blowup_delta0"] == 2 &&
              j["tournament_two_block_complete"] == true,
          "tightness certifies the k=4 boundary", "exit " + std::to_string(r.code));
  }

  // hunt
  {
    const RunResult r = run(cli, "hunt --k 3 --rule explicit --d 2 --n-max 4 "
                                 "--csv-out smoke_hunt.csv");
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(r.code == 0 && !j.is_discarded() && j["clean"] == true &&
              contains(read_file("smoke_hunt.csv"), "n,enumerated,meeting_rule"),
          "hunt explicit floor runs clean", "exit " + std::to_string(r.code));
  }
  {
    const RunResult r = run(cli, "hunt --k 4 --rule question --n-max 5");
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(r.code == 3 && !j.is_discarded() && j["conjecture_candidates"] == 24 &&
              j["question_candidates"] == 0 && contains(r.err, "counterexample"),
          "hunt surfaces strict-rule candidates with exit 3",
          "exit " + std::to_string(r.code));
  }

  // operational errors
  {
    const RunResult r = run(cli, "longest-path smoke_bad.json");
    check(r.code == 1 && contains(r.err, "error"), "malformed graph JSON is an error",
          "exit " + std::to_string(r.code));
  }
  {
    const RunResult r = run(cli, "gen --family circulant --n 6 --jumps 3");
    check(r.code == 1 && contains(r.err, "error"),
          "self-paired circulant jump is rejected", "exit " + std::to_string(r.code));
  }
  {
    const RunResult r = run(cli, "embed smoke_rt7.json --k 3 --ell 4");
    check(r.code == 1, "first block longer than the path is an error",
          "exit " + std::to_string(r.code));
  }
  {
    const RunResult r = run(cli, "");
    check(r.code != 0, "bare invocation demands a subcommand");
  }

  if (g_failures == 0) {
    std::printf("cli smoke: all checks passed\n");
  } else {
    std::printf("cli smoke: %d check(s) failed\n", g_failures);
  }
  return g_failures;
}
