#include "twoblock/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "twoblock/errors.hpp"
#include "twoblock/path_model.hpp"

namespace twoblock {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

struct Searcher {
  const OrientedGraph& g;
  const SearchBudget& budget;
  std::vector<std::uint64_t> out_mask;
  std::uint64_t allowed = 0;
  int max_vertices = 0;  // popcount(allowed)

  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  bool done = false;  // best cannot be improved, stop everything
  Clock::time_point deadline{};
  bool has_deadline = false;

  std::vector<int> current;
  std::vector<int> best;

  Searcher(const OrientedGraph& graph, const SearchBudget& b, std::uint64_t allowed_mask)
      : g(graph), budget(b), allowed(allowed_mask) {
    const int n = g.vertex_count();
    if (n > 64) {
      throw Error(Errc::TooManyVertices,
                  "path search supports at most 64 vertices, got " + std::to_string(n));
    }
    out_mask.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      for (int u : g.out_neighbors(v)) out_mask[v] |= bit(u);
    }
    max_vertices = std::popcount(allowed);
    if (budget.time_limit_seconds > 0.0) {
      has_deadline = true;
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(budget.time_limit_seconds));
    }
  }

  // Vertices reachable from v inside mask, v included.
  int reach_count(int v, std::uint64_t mask) const {
    std::uint64_t seen = bit(v);
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f != 0) {
        const int u = std::countr_zero(f);
        f &= f - 1;
        next |= out_mask[u];
      }
      next &= mask & ~seen;
      seen |= next;
      frontier = next;
    }
    return std::popcount(seen);
  }

  bool spend_node() {
    ++nodes;
    if (budget.node_limit > 0 && nodes > budget.node_limit) {
      out_of_budget = true;
      return false;
    }
    if (has_deadline && (nodes & 0x1fff) == 0 && Clock::now() > deadline) {
      out_of_budget = true;
      return false;
    }
    return true;
  }

  void dfs(int v, std::uint64_t visited) {
    if (!spend_node()) return;
    if (static_cast<int>(current.size()) > static_cast<int>(best.size())) {
      best = current;
      if (static_cast<int>(best.size()) == max_vertices) {
        done = true;  // spans every allowed vertex, nothing can beat it
        return;
      }
    }
    const std::uint64_t free = allowed & ~visited;
    for (int u : g.out_neighbors(v)) {
      if ((free & bit(u)) == 0) continue;
      // Even the full reachable set from u cannot beat best: prune.
      const int potential = static_cast<int>(current.size()) + reach_count(u, free);
      if (potential <= static_cast<int>(best.size())) continue;
      current.push_back(u);
      dfs(u, visited | bit(u));
      current.pop_back();
      if (out_of_budget || done) return;
    }
  }

  void run_from(int start) {
    current.assign(1, start);
    dfs(start, bit(start));
    current.clear();
  }
};

}  // namespace

PathSearchResult longest_directed_path(const OrientedGraph& g, const SearchBudget& budget) {
  PathSearchResult result;
  const int n = g.vertex_count();
  if (n == 0) {
    result.certified = true;
    return result;
  }
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (bit(n) - 1);
  Searcher s(g, budget, all);

  std::vector<int> starts(n);
  for (int v = 0; v < n; ++v) starts[v] = v;
  std::stable_sort(starts.begin(), starts.end(),
                   [&](int a, int b) { return g.out_degree(a) > g.out_degree(b); });

  for (int start : starts) {
    if (s.reach_count(start, all) <= static_cast<int>(s.best.size())) continue;
    s.run_from(start);
    if (s.out_of_budget || s.done) break;
  }
  result.vertices = std::move(s.best);
  result.nodes = s.nodes;
  result.certified = !s.out_of_budget;
  return result;
}

PathSearchResult longest_path_from(const OrientedGraph& g, int start,
                                   const std::vector<int>& allowed,
                                   const SearchBudget& budget) {
  const int n = g.vertex_count();
  if (start < 0 || start >= n) {
    throw Error(Errc::VertexOutOfRange, "start vertex " + std::to_string(start));
  }
  std::uint64_t mask = 0;
  for (int v : allowed) {
    if (v < 0 || v >= n) {
      throw Error(Errc::VertexOutOfRange, "allowed vertex " + std::to_string(v));
    }
    if (n > 64) break;  // TooManyVertices raised by Searcher below
    mask |= bit(v);
  }
  Searcher s(g, budget, mask);
  if ((mask & bit(start)) == 0) {
    throw Error(Errc::VertexOutOfRange, "start vertex not in allowed set");
  }
  s.run_from(start);

  PathSearchResult result;
  result.vertices = std::move(s.best);
  result.nodes = s.nodes;
  result.certified = !s.out_of_budget;
  return result;
}

std::vector<int> maximal_extension(const OrientedGraph& g, std::vector<int> path) {
  if (!is_directed_path(g, path)) {
    throw Error(Errc::NotAPath, "seed is not a directed path");
  }
  std::vector<char> used(g.vertex_count(), 0);
  for (int v : path) used[v] = 1;

  bool grew = true;
  while (grew) {
    grew = false;
    for (int u : g.out_neighbors(path.back())) {
      if (!used[u]) {
        path.push_back(u);
        used[u] = 1;
        grew = true;
        break;
      }
    }
  }
  grew = true;
  while (grew) {
    grew = false;
    for (int u : g.in_neighbors(path.front())) {
      if (!used[u]) {
        path.insert(path.begin(), u);
        used[u] = 1;
        grew = true;
        break;
      }
    }
  }
  return path;
}

}  // namespace twoblock
