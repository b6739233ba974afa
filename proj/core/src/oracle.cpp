#include "twoblock/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>

#include "twoblock/errors.hpp"

namespace twoblock {

namespace {

using Clock = std::chrono::steady_clock;

struct Backtracker {
  const OrientedGraph& g;
  const PathPattern& pattern;
  const SearchBudget& budget;
  std::vector<char> used;
  std::vector<int> emb;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  Clock::time_point deadline{};
  bool timed = false;

  Backtracker(const OrientedGraph& graph, const PathPattern& pat, const SearchBudget& b)
      : g(graph), pattern(pat), budget(b),
        used(static_cast<std::size_t>(graph.vertex_count()), 0) {
    emb.reserve(static_cast<std::size_t>(pat.arc_count()) + 1);
    if (budget.time_limit_seconds > 0.0) {
      timed = true;
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(budget.time_limit_seconds));
    }
  }

  // False once the node or time budget is gone; the search unwinds without
  // concluding anything.
  bool spend() {
    ++nodes;
    if (budget.node_limit > 0 && nodes > budget.node_limit) {
      exhausted = true;
      return false;
    }
    if (timed && (nodes & 0x1fff) == 0 && Clock::now() >= deadline) {
      exhausted = true;
      return false;
    }
    return true;
  }

  bool extend(int pos) {
    if (pos == pattern.arc_count() + 1) return true;
    const int prev = emb.back();
    const auto& cands =
        pattern.at(pos - 1) == 'F' ? g.out_neighbors(prev) : g.in_neighbors(prev);
    for (int v : cands) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (!spend()) return false;
      used[static_cast<std::size_t>(v)] = 1;
      emb.push_back(v);
      if (extend(pos + 1)) return true;
      emb.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
      if (exhausted) return false;
    }
    return false;
  }
};

OracleReport run_search(const OrientedGraph& g, const PathPattern& pattern,
                        const SearchBudget& budget) {
  if (pattern.arc_count() < 1) {
    throw Error(Errc::SpecOutOfRange, "pattern must have at least one arc");
  }
  OracleReport report;
  report.pattern = pattern;

  // Deterministic start order: vertices with more neighbours in the first
  // step's direction go first, ties by label.
  std::vector<int> starts(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) starts[static_cast<std::size_t>(v)] = v;
  const bool first_back = pattern.at(0) == 'B';
  std::stable_sort(starts.begin(), starts.end(), [&](int a, int b) {
    const auto deg = [&](int v) {
      return first_back ? g.in_neighbors(v).size() : g.out_neighbors(v).size();
    };
    return deg(a) > deg(b);
  });

  Backtracker bt(g, pattern, budget);
  for (int s : starts) {
    if (!bt.spend()) break;
    bt.used[static_cast<std::size_t>(s)] = 1;
    bt.emb.push_back(s);
    if (bt.extend(1)) {
      report.found = true;
      report.embedding = Embedding{bt.emb};
      break;
    }
    bt.emb.pop_back();
    bt.used[static_cast<std::size_t>(s)] = 0;
    if (bt.exhausted) break;
  }
  report.nodes_explored = bt.nodes;
  report.exhausted = bt.exhausted && !report.found;
  return report;
}

}  // namespace

OracleReport find_pattern_embedding(const OrientedGraph& g, const PathPattern& pattern,
                                    const SearchBudget& budget) {
  return run_search(g, pattern, budget);
}

OracleReport contains_two_block(const OrientedGraph& g, const TwoBlockSpec& spec,
                                const SearchBudget& budget) {
  spec.validate();
  return run_search(g, spec.to_pattern(), budget);
}

std::vector<PathPattern> OrientationSurvey::missing_non_antidirected() const {
  std::vector<PathPattern> out;
  for (const auto& p : missing) {
    if (!p.is_antidirected()) out.push_back(p);
  }
  return out;
}

OrientationSurvey contains_all_orientations(const OrientedGraph& g, int k,
                                            const SearchBudget& budget) {
  if (k < 1 || k > 30) {
    throw Error(Errc::SpecOutOfRange, "orientation survey supports 1 <= k <= 30");
  }
  std::set<std::string> reps;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::string dirs(static_cast<std::size_t>(k), 'B');
    for (int q = 0; q < k; ++q) {
      if (mask >> q & 1) dirs[static_cast<std::size_t>(q)] = 'F';
    }
    reps.insert(PathPattern(dirs).canonical());
  }

  OrientationSurvey survey;
  survey.k = k;
  for (const auto& rep : reps) {
    PathPattern pattern(rep);
    OracleReport report = run_search(g, pattern, budget);
    survey.nodes_explored += report.nodes_explored;
    if (!report.found) {
      if (report.exhausted) {
        survey.inconclusive.push_back(pattern);
      } else {
        survey.missing.push_back(pattern);
      }
    }
    survey.classes.push_back(std::move(report));
  }
  return survey;
}

}  // namespace twoblock
