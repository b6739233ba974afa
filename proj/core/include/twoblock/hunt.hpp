#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twoblock/oracle.hpp"
#include "twoblock/search.hpp"

namespace twoblock {

// Degree rule a candidate graph must satisfy, decided in integers:
//   Conjecture : 2*delta0 >  k   (all orientations should embed)
//   Question   : 2*delta0 >= k   (all but antidirected should embed)
//   Explicit   :   delta0 >= d
struct HuntRule {
  enum class Kind { Conjecture, Question, Explicit };
  Kind kind = Kind::Conjecture;
  int d = 0;  // Explicit only

  bool satisfied(int delta0, int k) const;
  // Smallest min semidegree any qualifying graph can have; sound for pruning.
  int min_degree(int k) const;
  std::string name() const;
};

struct HuntConfig {
  int k = 3;
  HuntRule rule;
  SearchBudget budget;
  // Exhaustive mode walks every labeled oriented graph on 1..n_max vertices.
  // 3^(n choose 2) leaves before pruning caps this at n_max <= 6.
  int n_max = 5;
  // Randomized mode instead samples `samples` graphs on exactly `n` vertices.
  bool randomized = false;
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
};

struct HuntCounterexample {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;
  int delta0 = 0;
  std::vector<std::string> missing;  // orientation strings certified absent
};

struct HuntPerN {
  int n = 0;
  std::uint64_t enumerated = 0;    // leaves visited (post-pruning) or samples drawn
  std::uint64_t meeting_rule = 0;  // graphs whose delta0 satisfies the rule
  std::uint64_t checked = 0;       // graphs run through the orientation survey
  std::uint64_t inconclusive = 0;  // surveys cut short by the budget
  std::int64_t elapsed_micros = 0;
};

struct HuntReport {
  HuntConfig config;
  std::vector<HuntPerN> per_n;
  // A graph missing any orientation class lands in conjecture_candidates; if
  // one of the missing classes is not antidirected it also lands in
  // question_candidates. Budget-cut surveys are only counted inconclusive.
  std::vector<HuntCounterexample> conjecture_candidates;
  std::vector<HuntCounterexample> question_candidates;
  std::uint64_t inconclusive = 0;

  bool clean() const {
    return conjecture_candidates.empty() && question_candidates.empty() && inconclusive == 0;
  }
};

HuntReport run_hunt(const HuntConfig& config);

// One row per n, timing last.
std::string hunt_csv(const HuntReport& report);
std::string hunt_summary_json(const HuntReport& report);

}  // namespace twoblock
