#pragma once

#include <cstdint>
#include <vector>

#include "twoblock/oriented_graph.hpp"

namespace twoblock {

// Exhaustion caps for the exact searches. Exceeding either aborts the search
// with the best result so far flagged non-certified; never a silent cut.
// Zero disables a cap.
struct SearchBudget {
  std::uint64_t node_limit = 50'000'000;
  double time_limit_seconds = 0.0;
};

struct PathSearchResult {
  std::vector<int> vertices;  // v_0..v_t of the best path found
  bool certified = false;     // search space exhausted, result is a true maximum
  std::uint64_t nodes = 0;    // DFS states visited

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Longest directed path, exact branch-and-bound. Bitset-based, so the graph
// is capped at 64 vertices (TooManyVertices beyond). Deterministic: start
// vertices by descending out-degree (ties by label), neighbours ascending,
// result replaced only on strict improvement. On n == 0 returns an empty
// path with length -1.
PathSearchResult longest_directed_path(const OrientedGraph& g, const SearchBudget& budget = {});

// Same search restricted to G[allowed], rooted at start (start must be in
// allowed). Used for the detour paths that leave a host path.
PathSearchResult longest_path_from(const OrientedGraph& g, int start,
                                   const std::vector<int>& allowed,
                                   const SearchBudget& budget = {});

// Greedy completion: prepend smallest-label fresh in-neighbours of the front
// and append smallest-label fresh out-neighbours of the back until both ends
// are stuck. The result is maximal but not necessarily maximum. Throws
// NotAPath when the seed is not a directed path.
std::vector<int> maximal_extension(const OrientedGraph& g, std::vector<int> path);

}  // namespace twoblock
