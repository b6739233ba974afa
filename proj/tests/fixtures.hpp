#pragma once

// Hand-built dispatch fixtures shared by the embedder unit tests and the
// acceptance gate. Every fixture pins one case label. Unless marked
// heuristic, the host path below is a maximum directed path of its graph
// (checked in the unit tests), so feeding it with
// path_is_certified_maximum = true is honest. The guard fixture needs a
// beatable host to force a restart, and a usable short-detour return implies
// a beatable host as well, so those two run in heuristic mode.

#include <string>
#include <vector>

#include "twoblock/embedder.hpp"
#include "twoblock/oriented_graph.hpp"

namespace twoblock::fixtures {

struct EmbedFixture {
  std::string name;
  OrientedGraph graph;
  std::vector<int> path;  // host path handed to embed_on_path
  int k = 0;
  int ell = 0;
  bool heuristic = false;         // run with restarts instead of certified mode
  std::string expected_case;      // trace_case_name of the final case
  std::string expected_restart;   // label of the forced restart, if any
};

inline std::vector<int> iota_path(int count) {
  std::vector<int> p(count);
  for (int i = 0; i < count; ++i) p[i] = i;
  return p;
}

// Chain 0 -> 1 -> ... -> (chain_len - 1) inside a graph on n vertices, plus
// extra arcs.
inline OrientedGraph chain_plus(int n, int chain_len, std::vector<Arc> extra) {
  for (int i = 0; i + 1 < chain_len; ++i) extra.emplace_back(i, i + 1);
  return OrientedGraph::from_arcs(n, extra);
}

// In-neighbour of the start inside the middle window.
inline EmbedFixture prop1_front() {
  return {"prop1-front", chain_plus(9, 9, {{4, 0}}), iota_path(9), 4, 2,
          false, "PropI-front", ""};
}

// Out-neighbour of the end inside the middle window, start re-entered from
// the tail window.
inline EmbedFixture prop1_back() {
  return {"prop1-back", chain_plus(9, 9, {{8, 4}, {7, 0}}), iota_path(9), 4, 2,
          false, "PropI-back", ""};
}

// Closing arc makes the host path a Hamilton cycle; the chord (6, 1) is the
// middle-window candidate after one rotation.
inline EmbedFixture prop3() {
  return {"prop3", chain_plus(9, 9, {{8, 0}, {6, 1}}), iota_path(9), 4, 2,
          false, "PropIII", ""};
}

// No middle-window exit at all; (0, 6) and (5, 0) stitch a spanning cycle
// through the anchor arc (6, 1), and the chord (2, 6) feeds the rotation scan.
inline EmbedFixture hamilton_s() {
  return {"hamilton-s", chain_plus(7, 7, {{6, 1}, {0, 6}, {5, 0}, {2, 6}}),
          iota_path(7), 4, 2, false, "Thm-small-ell-hamilton-S", ""};
}

// Anchor predecessor exits into the far part of the middle window.
inline EmbedFixture y_far() {
  return {"y-far", chain_plus(7, 7, {{6, 1}, {0, 4}}), iota_path(7), 4, 2,
          false, "Thm-small-ell-Y-far", ""};
}

// Near exit (0, 2) plus the early tail jump (5, 0).
inline EmbedFixture y_near() {
  return {"y-near", chain_plus(7, 7, {{6, 1}, {0, 2}, {5, 0}}), iota_path(7), 4, 2,
          false, "Thm-small-ell-Y-near", ""};
}

// Detour 13 -> 14 -> 15 -> 16 off the host path reaches k - ell - 1 arcs.
inline EmbedFixture prop2_long() {
  return {"prop2-long",
          chain_plus(17, 13, {{12, 2}, {1, 13}, {13, 14}, {14, 15}, {15, 16}}),
          iota_path(13), 8, 4, false, "PropII-long-Pprime", ""};
}

// Short detour 19..23 returns into the head prefix through (23, 1). That
// same return arc lets a path start inside the detour and skip vertex 0, so
// the chain is not a maximum; the case is only reachable on heuristic hosts.
inline EmbedFixture prop2_short() {
  return {"prop2-short",
          chain_plus(24, 19,
                     {{18, 3}, {2, 19}, {19, 20}, {20, 21}, {21, 22}, {22, 23}, {23, 1}}),
          iota_path(19), 12, 6, true, "PropII-short-Pprime", ""};
}

// The detour re-enters the tail cycle: (0, 7), (7, 3) beat the 7-vertex host
// path, the guard restarts, and (5, 0) lets the longer path finish as front.
inline EmbedFixture prop2_guard_restart() {
  return {"prop2-guard-restart",
          chain_plus(8, 7, {{6, 1}, {0, 7}, {7, 3}, {5, 0}}), iota_path(7), 4, 2,
          true, "PropI-front", "PropII-cycle-extension-contradiction-guard"};
}

// Large branch (3*ell > 2*k), jump landing in the front window only.
inline EmbedFixture large_q() {
  return {"large-q", chain_plus(7, 7, {{2, 0}}), iota_path(7), 4, 3,
          false, "Thm-large-ell-Q", ""};
}

// Large branch, jump landing in the back window only.
inline EmbedFixture large_r() {
  return {"large-r", chain_plus(7, 7, {{4, 0}}), iota_path(7), 4, 3,
          false, "Thm-large-ell-R", ""};
}

inline std::vector<EmbedFixture> all_embed_fixtures() {
  return {prop1_front(), prop1_back(),  prop3(),      hamilton_s(),
          y_far(),       y_near(),      prop2_long(), prop2_short(),
          prop2_guard_restart(), large_q(), large_r()};
}

}  // namespace twoblock::fixtures
