#pragma once

#include <cstdint>
#include <vector>

#include "twoblock/oriented_graph.hpp"

namespace twoblock {

// Circulant digraph on n vertices: arc (i, i+j mod n) for every jump j.
// Jumps must be distinct in 1..n-1 and must not contain a pair {j, n-j}
// (that would create a 2-cycle), so n/2 is rejected for even n.
OrientedGraph circulant(int n, const std::vector<int>& jumps);

// Rotational tournament on odd n >= 3: every vertex beats the next (n-1)/2
// vertices mod n. All semidegrees equal (n-1)/2. Throws EvenOrder otherwise.
OrientedGraph regular_tournament(int n);

// Directed 3-cycle 0 -> 1 -> 2 -> 0.
OrientedGraph directed_triangle();

// Replace each vertex by m independent copies; copy j of v is v*m + j.
// Every arc (u, v) becomes all m*m arcs between the copy groups, so minimum
// semidegree multiplies by m.
OrientedGraph blowup(const OrientedGraph& base, int m);

// Each unordered pair independently: keep with probability arc_prob, then
// orient by a fair coin. Same seed, same graph.
OrientedGraph random_oriented_graph(int n, double arc_prob, std::uint64_t seed);

// arc_prob == 1 special case: every pair oriented one way.
OrientedGraph random_tournament(int n, std::uint64_t seed);

// Random oriented graph with min semidegree >= d. Requires 2d <= n-1
// (Unsatisfiable otherwise). Rejection-samples tournaments for max_attempts
// tries, falling back to a randomly relabeled rotational tournament (which
// always qualifies), then randomizes by degree-safe arc flips and prunes
// arcs downward while every semidegree stays >= d. Succeeds for every seed.
OrientedGraph random_with_min_semidegree(int n, int d, std::uint64_t seed,
                                         int max_attempts = 32);

}  // namespace twoblock
