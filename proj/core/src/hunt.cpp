#include "twoblock/hunt.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "twoblock/errors.hpp"
#include "twoblock/generators.hpp"
#include "twoblock/rng.hpp"

namespace twoblock {

namespace {

std::int64_t elapsed_micros(std::chrono::steady_clock::time_point from) {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::steady_clock::now() - from)
      .count();
}

// Walks every labeled oriented graph on n vertices once: each unordered pair
// in lex order takes one of three states (absent, u->v, v->u). A vertex is
// pruned as soon as its decided degree plus its undecided incident pairs
// cannot reach dmin, which is exact at the last incident pair, so every leaf
// reached already has min semidegree >= dmin.
struct Enumerator {
  int n;
  int dmin;
  std::function<void(const std::vector<std::pair<int, int>>&)> on_leaf;

  std::vector<std::pair<int, int>> pairs;
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> outdeg, indeg, rem;
  std::uint64_t leaves = 0;

  Enumerator(int n_, int dmin_) : n(n_), dmin(dmin_) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    outdeg.assign(static_cast<std::size_t>(n), 0);
    indeg.assign(static_cast<std::size_t>(n), 0);
    rem.assign(static_cast<std::size_t>(n), n - 1);
  }

  bool feasible(int x) const {
    return outdeg[static_cast<std::size_t>(x)] + rem[static_cast<std::size_t>(x)] >= dmin &&
           indeg[static_cast<std::size_t>(x)] + rem[static_cast<std::size_t>(x)] >= dmin;
  }

  void run() { decide(0); }

  void decide(std::size_t p) {
    if (p == pairs.size()) {
      ++leaves;
      on_leaf(arcs);
      return;
    }
    const auto [u, v] = pairs[p];
    --rem[static_cast<std::size_t>(u)];
    --rem[static_cast<std::size_t>(v)];

    if (feasible(u) && feasible(v)) decide(p + 1);

    ++outdeg[static_cast<std::size_t>(u)];
    ++indeg[static_cast<std::size_t>(v)];
    if (feasible(u) && feasible(v)) {
      arcs.emplace_back(u, v);
      decide(p + 1);
      arcs.pop_back();
    }
    --outdeg[static_cast<std::size_t>(u)];
    --indeg[static_cast<std::size_t>(v)];

    ++outdeg[static_cast<std::size_t>(v)];
    ++indeg[static_cast<std::size_t>(u)];
    if (feasible(u) && feasible(v)) {
      arcs.emplace_back(v, u);
      decide(p + 1);
      arcs.pop_back();
    }
    --outdeg[static_cast<std::size_t>(v)];
    --indeg[static_cast<std::size_t>(u)];

    ++rem[static_cast<std::size_t>(u)];
    ++rem[static_cast<std::size_t>(v)];
  }
};

void survey_graph(const HuntConfig& config, const OrientedGraph& g, int delta0,
                  HuntPerN& row, HuntReport& report) {
  ++row.checked;
  const OrientationSurvey survey = contains_all_orientations(g, config.k, config.budget);
  if (!survey.inconclusive.empty()) ++row.inconclusive;
  if (survey.missing.empty()) return;

  HuntCounterexample ce;
  ce.n = g.vertex_count();
  ce.arcs = g.arcs();
  ce.delta0 = delta0;
  for (const PathPattern& p : survey.missing) ce.missing.push_back(p.dirs());
  report.conjecture_candidates.push_back(ce);
  if (!survey.missing_non_antidirected().empty()) {
    report.question_candidates.push_back(std::move(ce));
  }
}

}  // namespace

bool HuntRule::satisfied(int delta0, int k) const {
  switch (kind) {
    case Kind::Conjecture:
      return 2 * delta0 > k;
    case Kind::Question:
      return 2 * delta0 >= k;
    case Kind::Explicit:
      return delta0 >= d;
  }
  return false;
}

int HuntRule::min_degree(int k) const {
  switch (kind) {
    case Kind::Conjecture:
      return k / 2 + 1;
    case Kind::Question:
      return (k + 1) / 2;
    case Kind::Explicit:
      return std::max(0, d);
  }
  return 0;
}

std::string HuntRule::name() const {
  switch (kind) {
    case Kind::Conjecture:
      return "conjecture";
    case Kind::Question:
      return "question";
    case Kind::Explicit:
      return "delta0>=" + std::to_string(d);
  }
  return "";
}

HuntReport run_hunt(const HuntConfig& config) {
  if (config.k < 1 || config.k > 30) {
    throw Error(Errc::SpecOutOfRange, "hunt supports 1 <= k <= 30");
  }
  HuntReport report;
  report.config = config;
  const int dmin = config.rule.min_degree(config.k);

  if (config.randomized) {
    if (config.n < 1 || config.n > 64) {
      throw Error(Errc::TooManyVertices, "randomized hunt needs 1 <= n <= 64");
    }
    if (config.samples < 1) {
      throw Error(Errc::SpecOutOfRange, "randomized hunt needs samples >= 1");
    }
    HuntPerN row;
    row.n = config.n;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t s = 0; s < config.samples; ++s) {
      const std::uint64_t gs = derive_seed(config.seed, s);
      // dmin == 0 would make the degree-targeted generator prune every arc,
      // so sample the unconstrained model instead.
      const OrientedGraph g = dmin > 0 ? random_with_min_semidegree(config.n, dmin, gs)
                                       : random_oriented_graph(config.n, 0.5, gs);
      ++row.enumerated;
      const int delta0 = min_semidegree(g);
      if (!config.rule.satisfied(delta0, config.k)) continue;
      ++row.meeting_rule;
      survey_graph(config, g, delta0, row, report);
    }
    row.elapsed_micros = elapsed_micros(t0);
    report.per_n.push_back(row);
  } else {
    if (config.n_max < 1 || config.n_max > 6) {
      throw Error(Errc::TooManyVertices,
                  "exhaustive hunt is capped at n_max <= 6 (3^(n choose 2) leaves)");
    }
    for (int n = 1; n <= config.n_max; ++n) {
      HuntPerN row;
      row.n = n;
      const auto t0 = std::chrono::steady_clock::now();
      Enumerator en(n, dmin);
      en.on_leaf = [&](const std::vector<std::pair<int, int>>& arcs) {
        const OrientedGraph g = OrientedGraph::from_arcs(n, arcs);
        const int delta0 = min_semidegree(g);
        if (!config.rule.satisfied(delta0, config.k)) return;
        ++row.meeting_rule;
        survey_graph(config, g, delta0, row, report);
      };
      en.run();
      row.enumerated = en.leaves;
      row.elapsed_micros = elapsed_micros(t0);
      report.per_n.push_back(row);
    }
  }

  for (const HuntPerN& row : report.per_n) report.inconclusive += row.inconclusive;
  return report;
}

std::string hunt_csv(const HuntReport& report) {
  std::ostringstream out;
  out << "n,enumerated,meeting_rule,checked,conjecture_candidates,question_candidates,"
         "inconclusive,elapsed_micros\n";
  for (const HuntPerN& row : report.per_n) {
    const auto count_for = [&](const std::vector<HuntCounterexample>& list) {
      return std::count_if(list.begin(), list.end(),
                           [&](const HuntCounterexample& ce) { return ce.n == row.n; });
    };
    out << row.n << ',' << row.enumerated << ',' << row.meeting_rule << ',' << row.checked
        << ',' << count_for(report.conjecture_candidates) << ','
        << count_for(report.question_candidates) << ',' << row.inconclusive << ','
        << row.elapsed_micros << '\n';
  }
  return out.str();
}

std::string hunt_summary_json(const HuntReport& report) {
  nlohmann::json j;
  j["k"] = report.config.k;
  j["rule"] = report.config.rule.name();
  j["mode"] = report.config.randomized ? "randomized" : "exhaustive";
  if (report.config.randomized) {
    j["n"] = report.config.n;
    j["samples"] = report.config.samples;
    j["seed"] = report.config.seed;
  } else {
    j["n_max"] = report.config.n_max;
  }
  nlohmann::json per_n = nlohmann::json::array();
  for (const HuntPerN& row : report.per_n) {
    per_n.push_back({{"n", row.n},
                     {"enumerated", row.enumerated},
                     {"meeting_rule", row.meeting_rule},
                     {"checked", row.checked},
                     {"inconclusive", row.inconclusive}});
  }
  j["per_n"] = std::move(per_n);

  const auto dump_list = [](const std::vector<HuntCounterexample>& list) {
    nlohmann::json arr = nlohmann::json::array();
    const std::size_t cap = 50;
    for (std::size_t i = 0; i < list.size() && i < cap; ++i) {
      const HuntCounterexample& ce = list[i];
      nlohmann::json arcs = nlohmann::json::array();
      for (const auto& [u, v] : ce.arcs) arcs.push_back({u, v});
      arr.push_back({{"n", ce.n},
                     {"arcs", std::move(arcs)},
                     {"delta0", ce.delta0},
                     {"missing", ce.missing}});
    }
    return arr;
  };
  j["conjecture_candidates"] = report.conjecture_candidates.size();
  j["question_candidates"] = report.question_candidates.size();
  j["conjecture_examples"] = dump_list(report.conjecture_candidates);
  j["question_examples"] = dump_list(report.question_candidates);
  j["inconclusive"] = report.inconclusive;
  j["clean"] = report.clean();
  return j.dump(2) + "\n";
}

}  // namespace twoblock
