#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twoblock/oracle.hpp"
#include "twoblock/path_model.hpp"
#include "twoblock/search.hpp"
#include "twoblock/threshold.hpp"

namespace twoblock {

// Plan for a verification sweep: for every (k, ell) pair and instance index,
// generate a random oriented graph with min semidegree at least the ceiled
// threshold, embed the two-block path in both orientations, verify, and
// cross-check a configured fraction of rows against the exhaustive oracle.
// Everything downstream is a pure function of this config, so two runs with
// the same config agree byte-for-byte except for timing columns.
struct SweepConfig {
  int k_min = 4;
  int k_max = 10;
  // Explicit (k, ell) pairs; empty means every ell in [ceil(k/2), k-1] for
  // every k in [k_min, k_max].
  std::vector<std::pair<int, int>> pairs;
  int instances_per_pair = 100;
  // Host order is drawn uniformly from [2*ceil(threshold)+1, min(3k, lo+n_span-1)].
  int n_span = 8;
  std::uint64_t seed = 1;
  double oracle_fraction_small = 1.0;  // applied when n <= oracle_n_cutoff
  double oracle_fraction_large = 0.1;
  int oracle_n_cutoff = 12;
  SearchBudget budget;
  int jobs = 1;
  std::string csv_path;      // optional; the CLI writes here when set
  std::string summary_path;  // optional
};

SweepConfig sweep_config_from_json(const std::string& text);
std::string sweep_config_to_json(const SweepConfig& config);

// One embed attempt. Timing fields are last so byte comparison of everything
// before them is meaningful across reruns.
struct SweepRow {
  std::string graph_id;
  int n = 0;
  int delta0 = 0;
  std::string threshold;  // exact rational, e.g. "15/2"
  int k = 0;
  int ell = 0;
  Orientation orientation = Orientation::BackFirst;
  std::string outcome;       // ok | theorem-violation | error:<code>
  std::string case_fired;    // final dispatch label when outcome == ok
  int restarts = 0;
  std::string verify;        // ok | fail | - (not applicable)
  std::string trace_check;   // ok | fail | -
  std::string oracle_check;  // confirmed | mismatch | inconclusive | skipped | -
  std::int64_t embed_micros = 0;
  std::int64_t oracle_micros = 0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;  // generation order: (k, ell, instance, orientation)
  std::map<std::string, std::uint64_t> histogram;  // case label -> count
  std::uint64_t ok = 0;
  std::uint64_t violations = 0;
  std::uint64_t errors = 0;
  std::uint64_t verify_failures = 0;
  std::uint64_t trace_failures = 0;
  std::uint64_t oracle_confirmed = 0;
  std::uint64_t oracle_mismatches = 0;
  std::uint64_t oracle_inconclusive = 0;

  bool clean() const {
    return violations == 0 && errors == 0 && verify_failures == 0 && trace_failures == 0 &&
           oracle_mismatches == 0;
  }
};

SweepResult run_sweep(const SweepConfig& config);

std::string sweep_csv(const SweepResult& result);

// Counters, the case histogram, and the threshold table for every (k, ell)
// in the sweep. Timing-free by design.
std::string sweep_summary_json(const SweepResult& result);

// Boundary checks for even k. The rotational tournament on k+1 vertices is
// surveyed for every k-arc orientation (two-block completeness is reported
// separately); a (k+1)-arc path needs k+2 distinct vertices, so its absence
// there is a counting fact, not a search result. The triangle blowup with
// parts of size k/2 has min semidegree exactly k/2 yet hosts no antidirected
// k-arc path, which pins the non-antidirected restriction.
struct TightnessReport {
  int k = 0;
  int tournament_n = 0;
  OrientationSurvey tournament_survey;
  bool tournament_two_block_complete = false;  // every (ell, orientation) present
  bool longer_impossible_by_order = false;     // k+2 > tournament_n
  int blowup_delta0 = 0;
  std::vector<PathPattern> blowup_antidirected_found;  // expected empty
  bool blowup_inconclusive = false;
  std::uint64_t nodes_explored = 0;

  bool blowup_all_antidirected_absent() const {
    return blowup_antidirected_found.empty() && !blowup_inconclusive;
  }
};

TightnessReport tightness_report(int k, const SearchBudget& budget = {});
std::string tightness_json(const TightnessReport& report);

}  // namespace twoblock
