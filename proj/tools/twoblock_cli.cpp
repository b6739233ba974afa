// Command line front end: embed, oracle, gen, longest-path, verify-theorem,
// tightness, hunt. Exit codes: 0 clean, 1 operational error, 2 threshold not
// met (embed only), 3 theorem-violation detected.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twoblock/embedder.hpp"
#include "twoblock/errors.hpp"
#include "twoblock/generators.hpp"
#include "twoblock/graph_io.hpp"
#include "twoblock/hunt.hpp"
#include "twoblock/oracle.hpp"
#include "twoblock/search.hpp"
#include "twoblock/sweep.hpp"
#include "twoblock/threshold.hpp"

namespace {

using namespace twoblock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  out << content;
}

OrientedGraph load_graph(const std::string& path) { return graph_from_json(read_file(path)); }

nlohmann::json report_to_json(const OracleReport& report) {
  nlohmann::json j;
  j["pattern"] = report.pattern.dirs();
  j["found"] = report.found;
  if (report.embedding) {
    j["embedding"] = nlohmann::json::parse(embedding_to_json(report.pattern, *report.embedding));
  } else {
    j["embedding"] = nullptr;
  }
  j["nodes_explored"] = report.nodes_explored;
  j["exhausted"] = report.exhausted;
  j["antidirected"] = report.pattern.is_antidirected();
  return j;
}

struct BudgetFlags {
  std::uint64_t node_limit = SearchBudget{}.node_limit;
  double time_limit = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--node-limit", node_limit, "Search node budget (0 = unlimited)");
    cmd->add_option("--time-limit", time_limit, "Search time budget in seconds (0 = none)");
  }
  SearchBudget budget() const { return SearchBudget{node_limit, time_limit}; }
};

int report_violation(const TheoremViolation& v) {
  nlohmann::json j;
  j["theorem_violation"] = nlohmann::json::parse(v.scene());
  j["what"] = v.what();
  std::cout << j.dump(2) << "\n";
  std::cerr << "theorem-violation: " << v.what() << "\n";
  return 3;
}

// ---- embed ------------------------------------------------------------------

struct EmbedArgs {
  std::string graph_path;
  int k = 0;
  int ell = 0;
  std::string orientation = "back-first";
  std::string trace_path;
  bool oracle_fallback = false;
  bool heuristic = false;
  BudgetFlags budget;
};

int run_one_block(const OrientedGraph& g, const EmbedArgs& args, Orientation orientation) {
  if (g.vertex_count() <= args.k) {
    std::cerr << "threshold not met: " << args.k << " arcs need " << args.k + 1
              << " vertices, graph has " << g.vertex_count() << "\n";
    return 2;
  }
  const PathSearchResult pr = longest_directed_path(g, args.budget.budget());
  if (!pr.certified) {
    std::cerr << "error: longest-path search exhausted its budget before certification\n";
    return 1;
  }
  const int t = pr.length();
  if (t >= args.k) {
    std::vector<int> window(pr.vertices.begin(), pr.vertices.begin() + args.k + 1);
    if (orientation == Orientation::BackFirst) {
      std::reverse(window.begin(), window.end());
    }
    const char dir = orientation == Orientation::BackFirst ? 'B' : 'F';
    const PathPattern pattern(std::string(static_cast<std::size_t>(args.k), dir));
    std::cout << embedding_to_json(pattern, Embedding{std::move(window)}) << "\n";
    return 0;
  }
  const int delta0 = min_semidegree(g);
  if (t < 2 * delta0) {
    // A certified maximum below twice the minimum semidegree contradicts the
    // directed-path guarantee outright.
    nlohmann::json scene{{"n", g.vertex_count()},
                         {"delta0", delta0},
                         {"longest_path", pr.vertices},
                         {"length", t}};
    std::cout << nlohmann::json{{"theorem_violation", scene},
                                {"what", "certified longest path shorter than 2*delta0"}}
                     .dump(2)
              << "\n";
    std::cerr << "theorem-violation: certified longest path shorter than 2*delta0\n";
    return 3;
  }
  std::cerr << "threshold not met: a directed path on " << args.k
            << " arcs is only guaranteed when 2*delta0 >= k (here delta0 = " << delta0
            << ", longest = " << t << ")\n";
  return 2;
}

int cmd_embed(const EmbedArgs& args) {
  const OrientedGraph g = load_graph(args.graph_path);
  const Orientation orientation =
      args.orientation == "forward-first" ? Orientation::ForwardFirst : Orientation::BackFirst;
  if (args.k < 1) {
    std::cerr << "error: --k must be at least 1\n";
    return 1;
  }
  if (args.ell == args.k || args.ell == 0) {
    // One block is just a directed path; route to the exact search.
    return run_one_block(g, args,
                         args.ell == 0 ? (orientation == Orientation::BackFirst
                                              ? Orientation::ForwardFirst
                                              : Orientation::BackFirst)
                                       : orientation);
  }

  const TwoBlockSpec spec{args.k, args.ell, orientation};
  try {
    EmbedResult res = embed_two_block(g, spec, args.budget.budget(),
                                      EmbedOptions{args.heuristic});
    if (!args.trace_path.empty()) write_file(args.trace_path, trace_to_json(res.trace));
    std::cout << embedding_to_json(spec.to_pattern(), res.embedding) << "\n";
    return 0;
  } catch (const TheoremViolation& v) {
    return report_violation(v);
  } catch (const Error& e) {
    if (e.code() != Errc::ThresholdNotMet) throw;
    if (!args.oracle_fallback) {
      std::cerr << "threshold not met: " << e.what() << " (retry with --oracle-fallback)\n";
      return 2;
    }
    OracleReport report = contains_two_block(g, spec, args.budget.budget());
    if (report.found) {
      std::cout << embedding_to_json(spec.to_pattern(), *report.embedding) << "\n";
      return 0;
    }
    if (report.exhausted) {
      std::cerr << "error: below threshold and the exhaustive search ran out of budget\n";
      return 1;
    }
    std::cerr << "threshold not met and the exhaustive search certifies the pattern absent\n";
    return 2;
  }
}

// ---- oracle -----------------------------------------------------------------

struct OracleArgs {
  std::string graph_path;
  std::string pattern;
  bool all_orientations = false;
  int k = 0;
  BudgetFlags budget;
};

int cmd_oracle(const OracleArgs& args) {
  const OrientedGraph g = load_graph(args.graph_path);
  if (args.all_orientations) {
    const OrientationSurvey survey = contains_all_orientations(g, args.k, args.budget.budget());
    nlohmann::json j;
    j["k"] = survey.k;
    nlohmann::json classes = nlohmann::json::array();
    for (const OracleReport& r : survey.classes) classes.push_back(report_to_json(r));
    j["classes"] = std::move(classes);
    nlohmann::json missing = nlohmann::json::array();
    for (const PathPattern& p : survey.missing) {
      missing.push_back({{"pattern", p.dirs()}, {"antidirected", p.is_antidirected()}});
    }
    j["missing"] = std::move(missing);
    nlohmann::json inconclusive = nlohmann::json::array();
    for (const PathPattern& p : survey.inconclusive) inconclusive.push_back(p.dirs());
    j["inconclusive"] = std::move(inconclusive);
    j["all_present"] = survey.all_present();
    j["nodes_explored"] = survey.nodes_explored;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  const OracleReport report =
      find_pattern_embedding(g, PathPattern(args.pattern), args.budget.budget());
  std::cout << report_to_json(report).dump(2) << "\n";
  return 0;
}

// ---- gen --------------------------------------------------------------------

struct GenArgs {
  std::string family;
  int n = 0;
  int m = 0;
  std::string base = "triangle";
  int min_semidegree = -1;
  double arc_prob = 0.5;
  std::uint64_t seed = 1;
  std::vector<int> jumps;
  std::string out_path;
  std::string dot_path;
};

int cmd_gen(const GenArgs& args) {
  OrientedGraph g = [&]() -> OrientedGraph {
    if (args.family == "regular-tournament") return regular_tournament(args.n);
    if (args.family == "circulant") return circulant(args.n, args.jumps);
    if (args.family == "blowup") {
      const OrientedGraph base =
          args.base == "triangle" ? directed_triangle() : load_graph(args.base);
      return blowup(base, args.m);
    }
    if (args.family == "random-tournament") return random_tournament(args.n, args.seed);
    if (args.family == "random") {
      if (args.min_semidegree >= 0) {
        return random_with_min_semidegree(args.n, args.min_semidegree, args.seed);
      }
      return random_oriented_graph(args.n, args.arc_prob, args.seed);
    }
    throw Error(Errc::ParseError, "unknown family: " + args.family);
  }();

  const std::string json = graph_to_json(g);
  if (args.out_path.empty()) {
    std::cout << json << "\n";
  } else {
    write_file(args.out_path, json + "\n");
  }
  if (!args.dot_path.empty()) write_file(args.dot_path, graph_to_dot(g));
  return 0;
}

// ---- longest-path -----------------------------------------------------------

int cmd_longest_path(const std::string& graph_path, const BudgetFlags& budget) {
  const OrientedGraph g = load_graph(graph_path);
  const PathSearchResult pr = longest_directed_path(g, budget.budget());
  nlohmann::json j;
  j["length"] = pr.length();
  j["vertices"] = pr.vertices;
  j["certified"] = pr.certified;
  std::cout << j.dump() << "\n";
  return 0;
}

// ---- verify-theorem ---------------------------------------------------------

struct SweepArgs {
  std::string config_path;
  int jobs = 0;
  std::string csv_path;
  std::string summary_path;
};

int cmd_verify_theorem(const SweepArgs& args) {
  SweepConfig config = sweep_config_from_json(read_file(args.config_path));
  if (args.jobs > 0) config.jobs = args.jobs;
  if (!args.csv_path.empty()) config.csv_path = args.csv_path;
  if (!args.summary_path.empty()) config.summary_path = args.summary_path;
  if (config.csv_path.empty()) config.csv_path = "sweep.csv";
  if (config.summary_path.empty()) config.summary_path = "sweep_summary.json";

  const SweepResult result = run_sweep(config);
  write_file(config.csv_path, sweep_csv(result));
  const std::string summary = sweep_summary_json(result);
  write_file(config.summary_path, summary);
  std::cout << summary;
  if (result.violations > 0) {
    std::cerr << "theorem-violation: " << result.violations << " row(s) dead-ended\n";
    return 3;
  }
  if (!result.clean()) {
    std::cerr << "error: sweep finished with failures (see " << config.csv_path << ")\n";
    return 1;
  }
  return 0;
}

// ---- tightness --------------------------------------------------------------

int cmd_tightness(int k, const BudgetFlags& budget) {
  const TightnessReport report = tightness_report(k, budget.budget());
  std::cout << tightness_json(report);
  if (!report.tournament_survey.inconclusive.empty() || report.blowup_inconclusive) {
    std::cerr << "error: budget ran out before certification\n";
    return 1;
  }
  if (!report.tournament_two_block_complete || !report.longer_impossible_by_order ||
      !report.blowup_all_antidirected_absent()) {
    std::cerr << "theorem-violation: tightness family failed a certified check\n";
    return 3;
  }
  return 0;
}

// ---- hunt -------------------------------------------------------------------

struct HuntArgs {
  int k = 3;
  std::string rule = "conjecture";
  int d = 0;
  int n_max = 5;
  bool randomized = false;
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  std::string csv_path;
  std::string summary_path;
  BudgetFlags budget;
};

int cmd_hunt(const HuntArgs& args) {
  HuntConfig config;
  config.k = args.k;
  if (args.rule == "conjecture") {
    config.rule = {HuntRule::Kind::Conjecture, 0};
  } else if (args.rule == "question") {
    config.rule = {HuntRule::Kind::Question, 0};
  } else if (args.rule == "explicit") {
    config.rule = {HuntRule::Kind::Explicit, args.d};
  } else {
    throw Error(Errc::ParseError, "unknown rule: " + args.rule);
  }
  config.budget = args.budget.budget();
  config.n_max = args.n_max;
  config.randomized = args.randomized;
  config.n = args.n;
  config.samples = args.samples;
  config.seed = args.seed;

  const HuntReport report = run_hunt(config);
  if (!args.csv_path.empty()) write_file(args.csv_path, hunt_csv(report));
  const std::string summary = hunt_summary_json(report);
  if (!args.summary_path.empty()) write_file(args.summary_path, summary);
  std::cout << summary;

  const bool alarming = config.rule.kind != HuntRule::Kind::Explicit;
  if (alarming &&
      (!report.conjecture_candidates.empty() || !report.question_candidates.empty())) {
    std::cerr << "counterexample candidates found; inspect the summary\n";
    return 3;
  }
  if (report.inconclusive > 0) {
    std::cerr << "error: " << report.inconclusive << " survey(s) ran out of budget\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-block oriented path embedding toolkit"};
  app.require_subcommand(1);

  EmbedArgs embed_args;
  auto* embed = app.add_subcommand(
      "embed", "Constructively embed a two-block oriented path above the degree threshold");
  embed->add_option("graph", embed_args.graph_path, "Graph JSON file")->required();
  embed->add_option("--k", embed_args.k, "Total arcs")->required();
  embed->add_option("--ell", embed_args.ell, "Arcs in the first block")->required();
  embed->add_option("--orientation", embed_args.orientation, "back-first or forward-first")
      ->check(CLI::IsMember({"back-first", "forward-first"}));
  embed->add_option("--trace", embed_args.trace_path, "Write the proof trace JSON here");
  embed->add_flag("--oracle-fallback", embed_args.oracle_fallback,
                  "Below threshold, fall back to the exhaustive search");
  embed->add_flag("--heuristic", embed_args.heuristic,
                  "Use greedy maximal paths with restarts instead of the exact search");
  embed_args.budget.attach(embed);

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive pattern containment search");
  oracle->add_option("graph", oracle_args.graph_path, "Graph JSON file")->required();
  auto* pattern_opt =
      oracle->add_option("--pattern", oracle_args.pattern, "Orientation string, e.g. BBFF");
  auto* all_opt = oracle->add_flag("--all-orientations", oracle_args.all_orientations,
                                   "Survey every k-arc orientation class");
  oracle->add_option("--k", oracle_args.k, "Arc count for --all-orientations");
  pattern_opt->excludes(all_opt);
  oracle_args.budget.attach(oracle);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a graph from a named family");
  gen->add_option("--family", gen_args.family,
                  "regular-tournament | circulant | blowup | random | random-tournament")
      ->required();
  gen->add_option("--n", gen_args.n, "Vertex count");
  gen->add_option("--m", gen_args.m, "Blowup part size");
  gen->add_option("--base", gen_args.base, "Blowup base: 'triangle' or a graph JSON file");
  gen->add_option("--min-semidegree", gen_args.min_semidegree,
                  "random family: enforce min semidegree");
  gen->add_option("--arc-prob", gen_args.arc_prob, "random family: pair retention probability");
  gen->add_option("--seed", gen_args.seed, "RNG seed");
  gen->add_option("--jumps", gen_args.jumps, "circulant jumps, e.g. --jumps 1 2 4");
  gen->add_option("--out", gen_args.out_path, "Write graph JSON here (default: stdout)");
  gen->add_option("--dot-out", gen_args.dot_path, "Also write Graphviz DOT here");

  std::string lp_graph;
  BudgetFlags lp_budget;
  auto* lp = app.add_subcommand("longest-path", "Exact longest directed path");
  lp->add_option("graph", lp_graph, "Graph JSON file")->required();
  lp_budget.attach(lp);

  SweepArgs sweep_args;
  auto* vt = app.add_subcommand("verify-theorem", "Run a verification sweep from a config");
  vt->add_option("--config", sweep_args.config_path, "SweepConfig JSON file")->required();
  vt->add_option("--jobs", sweep_args.jobs, "Worker threads (overrides config)");
  vt->add_option("--csv-out", sweep_args.csv_path, "CSV output path (overrides config)");
  vt->add_option("--summary-out", sweep_args.summary_path,
                 "Summary JSON path (overrides config)");

  int tightness_k = 4;
  BudgetFlags tightness_budget;
  auto* tight = app.add_subcommand("tightness", "Certify the extremal families for even k");
  tight->add_option("--k", tightness_k, "Even arc count")->required();
  tightness_budget.attach(tight);

  HuntArgs hunt_args;
  auto* hunt = app.add_subcommand("hunt", "Search for orientation-containment counterexamples");
  hunt->add_option("--k", hunt_args.k, "Arc count")->required();
  hunt->add_option("--rule", hunt_args.rule, "conjecture | question | explicit")
      ->check(CLI::IsMember({"conjecture", "question", "explicit"}));
  hunt->add_option("--d", hunt_args.d, "Min semidegree for --rule explicit");
  hunt->add_option("--n-max", hunt_args.n_max, "Exhaustive mode: enumerate n = 1..n_max");
  hunt->add_flag("--randomized", hunt_args.randomized, "Sample instead of enumerating");
  hunt->add_option("--n", hunt_args.n, "Randomized mode: vertex count");
  hunt->add_option("--samples", hunt_args.samples, "Randomized mode: sample count");
  hunt->add_option("--seed", hunt_args.seed, "Randomized mode: RNG seed");
  hunt->add_option("--csv-out", hunt_args.csv_path, "Per-n CSV output path");
  hunt->add_option("--summary-out", hunt_args.summary_path, "Summary JSON output path");
  hunt_args.budget.attach(hunt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (embed->parsed()) return cmd_embed(embed_args);
    if (oracle->parsed()) {
      if (!oracle_args.all_orientations && oracle_args.pattern.empty()) {
        std::cerr << "error: pass --pattern or --all-orientations --k K\n";
        return 1;
      }
      return cmd_oracle(oracle_args);
    }
    if (gen->parsed()) return cmd_gen(gen_args);
    if (lp->parsed()) return cmd_longest_path(lp_graph, lp_budget);
    if (vt->parsed()) return cmd_verify_theorem(sweep_args);
    if (tight->parsed()) return cmd_tightness(tightness_k, tightness_budget);
    if (hunt->parsed()) return cmd_hunt(hunt_args);
  } catch (const TheoremViolation& v) {
    return report_violation(v);
  } catch (const Error& e) {
    std::cerr << "error (" << e.code_name() << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
