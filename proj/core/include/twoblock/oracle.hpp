#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twoblock/oriented_graph.hpp"
#include "twoblock/path_model.hpp"
#include "twoblock/search.hpp"

namespace twoblock {

// Result of one exhaustive pattern search. found=false certifies absence
// only when exhausted=false; a budget cut is surfaced, never treated as a
// non-containment proof.
struct OracleReport {
  PathPattern pattern;
  bool found = false;
  std::optional<Embedding> embedding;
  std::uint64_t nodes_explored = 0;
  bool exhausted = false;
};

// Complete backtracking over position-by-position assignments: F-steps take
// out-neighbours, B-steps in-neighbours, visited vertices pruned. Placement
// order is deterministic (starts by descending relevant degree, stable ties
// by label; extensions by ascending label), so results are reproducible.
OracleReport find_pattern_embedding(const OrientedGraph& g, const PathPattern& pattern,
                                    const SearchBudget& budget = {});

OracleReport contains_two_block(const OrientedGraph& g, const TwoBlockSpec& spec,
                                const SearchBudget& budget = {});

// Coverage of every orientation of the k-arc path, one search per canonical
// class (a pattern and its end-for-end reading embed in the same graphs).
struct OrientationSurvey {
  int k = 0;
  std::vector<OracleReport> classes;     // per canonical representative, ascending
  std::vector<PathPattern> missing;      // certified absent
  std::vector<PathPattern> inconclusive; // budget ran out before certification
  std::uint64_t nodes_explored = 0;

  bool all_present() const { return missing.empty() && inconclusive.empty(); }

  // Certified-absent classes that are not antidirected.
  std::vector<PathPattern> missing_non_antidirected() const;
};

OrientationSurvey contains_all_orientations(const OrientedGraph& g, int k,
                                            const SearchBudget& budget = {});

}  // namespace twoblock
