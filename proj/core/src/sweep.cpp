#include "twoblock/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "twoblock/embedder.hpp"
#include "twoblock/errors.hpp"
#include "twoblock/generators.hpp"
#include "twoblock/oracle.hpp"
#include "twoblock/rng.hpp"

namespace twoblock {

namespace {

long long ceil_rational(const Rational& r) { return (r.num + r.den - 1) / r.den; }

struct InstanceJob {
  int k = 0;
  int ell = 0;
  int idx = 0;
  int n = 0;
  int dmin = 0;
  std::uint64_t graph_seed = 0;
};

std::vector<std::pair<int, int>> expand_pairs(const SweepConfig& config) {
  if (!config.pairs.empty()) return config.pairs;
  std::vector<std::pair<int, int>> pairs;
  for (int k = config.k_min; k <= config.k_max; ++k) {
    for (int ell = (k + 1) / 2; ell <= k - 1; ++ell) pairs.emplace_back(k, ell);
  }
  return pairs;
}

std::vector<InstanceJob> plan_jobs(const SweepConfig& config) {
  std::vector<InstanceJob> jobs;
  for (const auto& [k, ell] : expand_pairs(config)) {
    const Rational thr = two_block_threshold(k, ell);  // rejects bad (k, ell)
    const int dmin = static_cast<int>(ceil_rational(thr));
    const int n_lo = 2 * dmin + 1;
    const int n_hi = std::max(n_lo, std::min(3 * k, n_lo + config.n_span - 1));
    for (int idx = 0; idx < config.instances_per_pair; ++idx) {
      Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(k),
                          static_cast<std::uint64_t>(ell), static_cast<std::uint64_t>(idx)));
      InstanceJob job;
      job.k = k;
      job.ell = ell;
      job.idx = idx;
      job.n = rng.uniform_int(n_lo, n_hi);
      job.dmin = dmin;
      job.graph_seed = rng.next_u64();
      jobs.push_back(job);
    }
  }
  return jobs;
}

std::string make_graph_id(int k, int ell, int idx) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "k%02d-l%02d-i%03d", k, ell, idx);
  return buf;
}

std::int64_t elapsed_micros(std::chrono::steady_clock::time_point from) {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::steady_clock::now() - from)
      .count();
}

void run_one(const SweepConfig& config, const InstanceJob& job, Orientation orientation,
             SweepRow& row) {
  row.graph_id = make_graph_id(job.k, job.ell, job.idx);
  row.k = job.k;
  row.ell = job.ell;
  row.orientation = orientation;
  row.threshold = two_block_threshold(job.k, job.ell).str();
  row.verify = row.trace_check = row.oracle_check = "-";

  OrientedGraph g = random_with_min_semidegree(job.n, job.dmin, job.graph_seed);
  row.n = g.vertex_count();
  row.delta0 = min_semidegree(g);
  const TwoBlockSpec spec{job.k, job.ell, orientation};

  const auto t0 = std::chrono::steady_clock::now();
  EmbedResult res;
  try {
    res = embed_two_block(g, spec, config.budget);
  } catch (const TheoremViolation&) {
    row.outcome = "theorem-violation";
    row.embed_micros = elapsed_micros(t0);
    return;
  } catch (const Error& e) {
    row.outcome = std::string("error:") + e.code_name();
    row.embed_micros = elapsed_micros(t0);
    return;
  }
  row.embed_micros = elapsed_micros(t0);

  row.outcome = "ok";
  row.case_fired = trace_case_name(res.trace.case_fired);
  row.restarts = static_cast<int>(res.trace.restarts.size());
  row.verify =
      verify_embedding(g, spec.to_pattern(), res.embedding).has_value() ? "fail" : "ok";
  const OrientedGraph dispatch_g = res.trace.graph_reversed ? g.reversed() : g;
  row.trace_check = validate_trace(dispatch_g, res.trace).has_value() ? "fail" : "ok";

  const double fraction = job.n <= config.oracle_n_cutoff ? config.oracle_fraction_small
                                                          : config.oracle_fraction_large;
  Rng orc(derive_seed(config.seed ^ 0xa5a5a5a5ULL, static_cast<std::uint64_t>(job.k),
                      static_cast<std::uint64_t>(job.ell),
                      static_cast<std::uint64_t>(job.idx) * 2 +
                          (orientation == Orientation::ForwardFirst ? 1 : 0)));
  if (!orc.bernoulli(fraction)) {
    row.oracle_check = "skipped";
    return;
  }
  const auto t1 = std::chrono::steady_clock::now();
  OracleReport report = contains_two_block(g, spec, config.budget);
  row.oracle_micros = elapsed_micros(t1);
  if (report.found) {
    row.oracle_check = "confirmed";
  } else {
    row.oracle_check = report.exhausted ? "inconclusive" : "mismatch";
  }
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  if (config.instances_per_pair < 1 || config.n_span < 1) {
    throw Error(Errc::SpecOutOfRange, "sweep needs instances_per_pair >= 1 and n_span >= 1");
  }
  SweepResult result;
  result.config = config;

  const std::vector<InstanceJob> jobs = plan_jobs(config);
  result.rows.resize(jobs.size() * 2);

  const int workers = std::max(1, std::min<int>(config.jobs, static_cast<int>(jobs.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      for (int o = 0; o < 2; ++o) {
        const Orientation orientation =
            o == 0 ? Orientation::BackFirst : Orientation::ForwardFirst;
        SweepRow& row = result.rows[i * 2 + static_cast<std::size_t>(o)];
        try {
          run_one(config, jobs[i], orientation, row);
        } catch (const Error& e) {
          row.outcome = std::string("error:") + e.code_name();
        }
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (const SweepRow& row : result.rows) {
    if (row.outcome == "ok") {
      ++result.ok;
      ++result.histogram[row.case_fired];
    } else if (row.outcome == "theorem-violation") {
      ++result.violations;
    } else {
      ++result.errors;
    }
    if (row.verify == "fail") ++result.verify_failures;
    if (row.trace_check == "fail") ++result.trace_failures;
    if (row.oracle_check == "confirmed") ++result.oracle_confirmed;
    if (row.oracle_check == "mismatch") ++result.oracle_mismatches;
    if (row.oracle_check == "inconclusive") ++result.oracle_inconclusive;
  }
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "graph_id,n,delta0,threshold,k,ell,orientation,outcome,case,restarts,"
         "verify,trace_check,oracle_check,embed_micros,oracle_micros\n";
  for (const SweepRow& r : result.rows) {
    out << r.graph_id << ',' << r.n << ',' << r.delta0 << ',' << r.threshold << ',' << r.k
        << ',' << r.ell << ',' << orientation_name(r.orientation) << ',' << r.outcome << ','
        << r.case_fired << ',' << r.restarts << ',' << r.verify << ',' << r.trace_check << ','
        << r.oracle_check << ',' << r.embed_micros << ',' << r.oracle_micros << '\n';
  }
  return out.str();
}

std::string sweep_summary_json(const SweepResult& result) {
  nlohmann::json j;
  j["rows"] = result.rows.size();
  j["ok"] = result.ok;
  j["violations"] = result.violations;
  j["errors"] = result.errors;
  j["verify_failures"] = result.verify_failures;
  j["trace_failures"] = result.trace_failures;
  std::uint64_t skipped = 0;
  for (const SweepRow& r : result.rows) {
    if (r.oracle_check == "skipped") ++skipped;
  }
  j["oracle"] = {{"confirmed", result.oracle_confirmed},
                 {"mismatches", result.oracle_mismatches},
                 {"inconclusive", result.oracle_inconclusive},
                 {"skipped", skipped}};
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [label, count] : result.histogram) hist[label] = count;
  j["histogram"] = std::move(hist);

  nlohmann::json table = nlohmann::json::array();
  for (const auto& [k, ell] : expand_pairs(result.config)) {
    const Rational thr = two_block_threshold(k, ell);
    table.push_back({{"k", k},
                     {"ell", ell},
                     {"threshold", thr.str()},
                     {"value", thr.real()},
                     {"branch", 3 * ell <= 2 * k ? "small-ell" : "large-ell"}});
  }
  j["threshold_table"] = std::move(table);
  j["config"] = nlohmann::json::parse(sweep_config_to_json(result.config));
  return j.dump(2) + "\n";
}

TightnessReport tightness_report(int k, const SearchBudget& budget) {
  if (k < 2 || k % 2 != 0) {
    throw Error(Errc::SpecOutOfRange, "tightness report is defined for even k >= 2");
  }
  TightnessReport report;
  report.k = k;

  const OrientedGraph tournament = regular_tournament(k + 1);
  report.tournament_n = tournament.vertex_count();
  report.tournament_survey = contains_all_orientations(tournament, k, budget);
  report.nodes_explored += report.tournament_survey.nodes_explored;

  std::map<std::string, const OracleReport*> by_rep;
  for (const OracleReport& r : report.tournament_survey.classes) {
    by_rep[r.pattern.dirs()] = &r;
  }
  report.tournament_two_block_complete = true;
  for (int ell = 1; ell <= k - 1; ++ell) {
    for (Orientation o : {Orientation::BackFirst, Orientation::ForwardFirst}) {
      const TwoBlockSpec spec{k, ell, o};
      const auto it = by_rep.find(spec.to_pattern().canonical());
      if (it == by_rep.end() || !it->second->found) {
        report.tournament_two_block_complete = false;
      }
    }
  }
  report.longer_impossible_by_order = report.tournament_n < k + 2;

  const OrientedGraph blown = blowup(directed_triangle(), k / 2);
  report.blowup_delta0 = min_semidegree(blown);
  std::string alt_f, alt_b;
  for (int q = 0; q < k; ++q) {
    alt_f.push_back(q % 2 == 0 ? 'F' : 'B');
    alt_b.push_back(q % 2 == 0 ? 'B' : 'F');
  }
  std::set<std::string> anti_reps{PathPattern(alt_f).canonical(),
                                  PathPattern(alt_b).canonical()};
  for (const std::string& rep : anti_reps) {
    const PathPattern pattern(rep);
    OracleReport r = find_pattern_embedding(blown, pattern, budget);
    report.nodes_explored += r.nodes_explored;
    if (r.found) {
      report.blowup_antidirected_found.push_back(pattern);
    } else if (r.exhausted) {
      report.blowup_inconclusive = true;
    }
  }
  return report;
}

std::string tightness_json(const TightnessReport& report) {
  nlohmann::json j;
  j["k"] = report.k;
  j["tournament_n"] = report.tournament_n;
  nlohmann::json classes = nlohmann::json::array();
  for (const OracleReport& r : report.tournament_survey.classes) {
    classes.push_back({{"pattern", r.pattern.dirs()},
                       {"found", r.found},
                       {"antidirected", r.pattern.is_antidirected()},
                       {"exhausted", r.exhausted}});
  }
  j["tournament_classes"] = std::move(classes);
  nlohmann::json missing = nlohmann::json::array();
  for (const PathPattern& p : report.tournament_survey.missing) missing.push_back(p.dirs());
  j["tournament_missing"] = std::move(missing);
  j["tournament_two_block_complete"] = report.tournament_two_block_complete;
  j["longer_impossible_by_order"] = report.longer_impossible_by_order;
  j["blowup_delta0"] = report.blowup_delta0;
  nlohmann::json found = nlohmann::json::array();
  for (const PathPattern& p : report.blowup_antidirected_found) found.push_back(p.dirs());
  j["blowup_antidirected_found"] = std::move(found);
  j["blowup_all_antidirected_absent"] = report.blowup_all_antidirected_absent();
  j["nodes_explored"] = report.nodes_explored;
  return j.dump(2) + "\n";
}

SweepConfig sweep_config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("sweep config: ") + e.what());
  }
  SweepConfig config;
  try {
    if (j.contains("k_min")) config.k_min = j["k_min"].get<int>();
    if (j.contains("k_max")) config.k_max = j["k_max"].get<int>();
    if (j.contains("pairs")) {
      for (const auto& p : j["pairs"]) {
        config.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
      }
    }
    if (j.contains("instances_per_pair")) {
      config.instances_per_pair = j["instances_per_pair"].get<int>();
    }
    if (j.contains("n_span")) config.n_span = j["n_span"].get<int>();
    if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("oracle_fraction_small")) {
      config.oracle_fraction_small = j["oracle_fraction_small"].get<double>();
    }
    if (j.contains("oracle_fraction_large")) {
      config.oracle_fraction_large = j["oracle_fraction_large"].get<double>();
    }
    if (j.contains("oracle_n_cutoff")) config.oracle_n_cutoff = j["oracle_n_cutoff"].get<int>();
    if (j.contains("node_limit")) config.budget.node_limit = j["node_limit"].get<std::uint64_t>();
    if (j.contains("time_limit_seconds")) {
      config.budget.time_limit_seconds = j["time_limit_seconds"].get<double>();
    }
    if (j.contains("jobs")) config.jobs = j["jobs"].get<int>();
    if (j.contains("csv_path")) config.csv_path = j["csv_path"].get<std::string>();
    if (j.contains("summary_path")) config.summary_path = j["summary_path"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("sweep config: ") + e.what());
  }
  return config;
}

std::string sweep_config_to_json(const SweepConfig& config) {
  nlohmann::json j;
  j["k_min"] = config.k_min;
  j["k_max"] = config.k_max;
  if (!config.pairs.empty()) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [k, ell] : config.pairs) pairs.push_back({k, ell});
    j["pairs"] = std::move(pairs);
  }
  j["instances_per_pair"] = config.instances_per_pair;
  j["n_span"] = config.n_span;
  j["seed"] = config.seed;
  j["oracle_fraction_small"] = config.oracle_fraction_small;
  j["oracle_fraction_large"] = config.oracle_fraction_large;
  j["oracle_n_cutoff"] = config.oracle_n_cutoff;
  j["node_limit"] = config.budget.node_limit;
  j["time_limit_seconds"] = config.budget.time_limit_seconds;
  j["jobs"] = config.jobs;
  if (!config.csv_path.empty()) j["csv_path"] = config.csv_path;
  if (!config.summary_path.empty()) j["summary_path"] = config.summary_path;
  return j.dump(2) + "\n";
}

}  // namespace twoblock
