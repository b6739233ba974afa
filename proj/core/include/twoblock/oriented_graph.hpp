#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace twoblock {

using Arc = std::pair<int, int>;  // (from, to)

// Simple digraph with no loops and no 2-cycles, vertices 0..n-1.
// Immutable after construction; adjacency lists are kept sorted so that
// neighbour scans and arc lookups are deterministic.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  // Validates and builds. Throws Error with code VertexOutOfRange, LoopArc,
  // DuplicateArc or TwoCycle. Arc order in the input does not matter.
  static OrientedGraph from_arcs(int n, const std::vector<Arc>& arcs);

  int vertex_count() const { return n_; }
  std::size_t arc_count() const { return arc_count_; }

  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

  bool has_arc(int u, int v) const;

  // All arcs sorted by (from, to).
  std::vector<Arc> arcs() const;

  // Same vertices, every arc flipped.
  OrientedGraph reversed() const;

  // Equality is on (vertex count, arc set); adjacency layout never differs
  // for equal arc sets because lists are sorted.
  bool operator==(const OrientedGraph& other) const;

 private:
  int n_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

struct DegreeSummary {
  std::vector<int> out_degree;
  std::vector<int> in_degree;
  int min_out = 0;       // delta^+
  int min_in = 0;        // delta^-
  int min_semidegree = 0;  // delta^0 = min(delta^+, delta^-); 0 when n == 0
};

DegreeSummary degree_summary(const OrientedGraph& g);

// Convenience for the common query.
int min_semidegree(const OrientedGraph& g);

struct InducedSubgraph {
  OrientedGraph graph;
  std::vector<int> old_to_new;  // size = original n, -1 for dropped vertices
  std::vector<int> new_to_old;  // size = |vertices|
};

// Subgraph induced by `vertices` (any order, no duplicates); new labels are
// assigned in increasing order of the old ones.
InducedSubgraph induced_subgraph(const OrientedGraph& g, const std::vector<int>& vertices);

}  // namespace twoblock
