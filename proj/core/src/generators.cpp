#include "twoblock/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "twoblock/errors.hpp"
#include "twoblock/rng.hpp"

namespace twoblock {

namespace {

OrientedGraph relabel(const OrientedGraph& g, const std::vector<int>& perm) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const auto& [u, v] : g.arcs()) arcs.emplace_back(perm[u], perm[v]);
  return OrientedGraph::from_arcs(g.vertex_count(), arcs);
}

// Tournament with all semidegrees >= floor((n-1)/2) for even n: rotational
// arcs for jumps 1..n/2-1 plus one arc per antipodal pair.
OrientedGraph near_regular_tournament(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= n / 2 - 1; ++j) arcs.emplace_back(i, (i + j) % n);
  }
  for (int i = 0; i < n / 2; ++i) arcs.emplace_back(i, i + n / 2);
  return OrientedGraph::from_arcs(n, arcs);
}

}  // namespace

OrientedGraph circulant(int n, const std::vector<int>& jumps) {
  if (n < 1) throw Error(Errc::SpecOutOfRange, "circulant needs n >= 1");
  std::vector<char> taken(n, 0);
  for (int j : jumps) {
    if (j < 1 || j > n - 1) {
      throw Error(Errc::BadJumpSet, "jump " + std::to_string(j) + " outside 1..n-1");
    }
    if (taken[j]) throw Error(Errc::BadJumpSet, "jump " + std::to_string(j) + " repeated");
    if (taken[n - j] || 2 * j == n) {
      throw Error(Errc::BadJumpSet,
                  "jumps " + std::to_string(j) + " and " + std::to_string(n - j) +
                      " would form 2-cycles");
    }
    taken[j] = 1;
  }
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * jumps.size());
  for (int i = 0; i < n; ++i) {
    for (int j : jumps) arcs.emplace_back(i, (i + j) % n);
  }
  return OrientedGraph::from_arcs(n, arcs);
}

OrientedGraph regular_tournament(int n) {
  if (n % 2 == 0) throw Error(Errc::EvenOrder, "regular tournament needs odd n");
  if (n < 3) throw Error(Errc::SpecOutOfRange, "regular tournament needs n >= 3");
  std::vector<int> jumps(n / 2);
  std::iota(jumps.begin(), jumps.end(), 1);
  return circulant(n, jumps);
}

OrientedGraph directed_triangle() { return circulant(3, {1}); }

OrientedGraph blowup(const OrientedGraph& base, int m) {
  if (m < 1) throw Error(Errc::SpecOutOfRange, "blowup factor must be >= 1");
  std::vector<Arc> arcs;
  arcs.reserve(base.arc_count() * static_cast<std::size_t>(m) * m);
  for (const auto& [u, v] : base.arcs()) {
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) arcs.emplace_back(u * m + a, v * m + b);
    }
  }
  return OrientedGraph::from_arcs(base.vertex_count() * m, arcs);
}

OrientedGraph random_oriented_graph(int n, double arc_prob, std::uint64_t seed) {
  if (n < 0) throw Error(Errc::SpecOutOfRange, "n must be non-negative");
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!rng.bernoulli(arc_prob)) continue;
      if (rng.uniform_int(0, 1) == 0) {
        arcs.emplace_back(u, v);
      } else {
        arcs.emplace_back(v, u);
      }
    }
  }
  return OrientedGraph::from_arcs(n, arcs);
}

OrientedGraph random_tournament(int n, std::uint64_t seed) {
  return random_oriented_graph(n, 1.0, seed);
}

OrientedGraph random_with_min_semidegree(int n, int d, std::uint64_t seed, int max_attempts) {
  if (n < 1 || d < 0) throw Error(Errc::SpecOutOfRange, "need n >= 1 and d >= 0");
  if (2 * d > n - 1) {
    throw Error(Errc::Unsatisfiable,
                "min semidegree " + std::to_string(d) + " impossible on " +
                    std::to_string(n) + " vertices");
  }

  OrientedGraph base;
  bool have_base = false;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    OrientedGraph t = random_tournament(n, derive_seed(seed, 1, attempt));
    if (min_semidegree(t) >= d) {
      base = std::move(t);
      have_base = true;
      break;
    }
  }
  if (!have_base) {
    // Deterministic rescue: a relabeled rotational tournament always has
    // min semidegree floor((n-1)/2) >= d.
    OrientedGraph t = (n % 2 == 1 && n >= 3) ? regular_tournament(n)
                     : (n % 2 == 0)          ? near_regular_tournament(n)
                                             : OrientedGraph::from_arcs(n, {});
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rng prng(derive_seed(seed, 2));
    prng.shuffle(perm);
    base = relabel(t, perm);
  }

  // Mutable adjacency for flips and pruning.
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<int> out_deg(n, 0), in_deg(n, 0);
  for (const auto& [u, v] : base.arcs()) {
    adj[u][v] = 1;
    ++out_deg[u];
    ++in_deg[v];
  }

  Rng rng(derive_seed(seed, 3));
  // Degree-safe orientation flips for variety beyond rotational structure.
  for (int step = 0; step < n * n; ++step) {
    const int u = rng.uniform_int(0, n - 1);
    const int v = rng.uniform_int(0, n - 1);
    if (u == v || !adj[u][v]) continue;
    if (out_deg[u] > d && in_deg[v] > d) {
      adj[u][v] = 0;
      adj[v][u] = 1;
      --out_deg[u];
      ++in_deg[u];
      ++out_deg[v];
      --in_deg[v];
    }
  }
  // Prune density while no semidegree drops below d.
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (adj[u][v]) arcs.emplace_back(u, v);
    }
  }
  rng.shuffle(arcs);
  for (const auto& [u, v] : arcs) {
    if (out_deg[u] > d && in_deg[v] > d && rng.bernoulli(0.5)) {
      adj[u][v] = 0;
      --out_deg[u];
      --in_deg[v];
    }
  }
  std::vector<Arc> kept;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (adj[u][v]) kept.emplace_back(u, v);
    }
  }
  return OrientedGraph::from_arcs(n, kept);
}

}  // namespace twoblock
