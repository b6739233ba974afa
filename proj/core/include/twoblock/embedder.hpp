#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twoblock/oriented_graph.hpp"
#include "twoblock/path_model.hpp"
#include "twoblock/search.hpp"

namespace twoblock {

// Case labels for the embedding case analysis. The strings returned by
// trace_case_name are part of the trace wire format.
enum class TraceCase {
  PropIFront,
  PropIBack,
  PropIILongPPrime,
  PropIICycleExtensionGuard,
  PropIIShortPPrime,
  PropIII,
  ThmSmallEllHamiltonS,
  ThmSmallEllYFar,
  ThmSmallEllYNear,
  ThmLargeEllQ,
  ThmLargeEllR,
};

const char* trace_case_name(TraceCase c);

enum class ThresholdBranch { SmallEll, LargeEll };

// Inclusive index range into a host path; empty when hi < lo.
struct IndexWindow {
  int lo = 0;
  int hi = -1;

  int size() const { return hi < lo ? 0 : hi - lo + 1; }
  bool contains(int i) const { return i >= lo && i <= hi; }
};

// Heuristic-mode event: a stage discovered a strictly longer path than the
// working one, forcing a recomputation. label is a case name when a proof
// case produced the witness ("PropII-cycle-extension-contradiction-guard"),
// else the stage name ("end-extension", "hamilton-outside-neighbor").
struct RestartEvent {
  std::string label;
  std::vector<int> longer_path;
};

// Everything needed to replay and check one successful embedding.
// All vertex labels refer to the dispatch graph (the reversed input when
// graph_reversed is set); indices i, j, i_star, j_star, p, m index `path`.
struct ProofTrace {
  int k = 0;
  int ell = 0;
  bool graph_reversed = false;
  bool spec_swapped = false;
  ThresholdBranch branch = ThresholdBranch::SmallEll;
  std::vector<int> path;  // v_0..v_t
  int t = 0;
  TraceCase case_fired = TraceCase::PropIFront;
  IndexWindow X, Y, Z;  // small branch windows
  IndexWindow Q, R;     // large branch windows

  int i = -1;
  int j = -1;
  int i_star = -1;
  int j_star = -1;
  int p = -1;
  int m = -1;
  int r = -1;                   // path position re-entered from the detour
  int rotation = -1;            // Hamilton relabeling offset used
  bool iii_used_in_neighbor = false;
  std::vector<int> p1, p2;      // building paths, shared start vertex
  std::vector<int> cycle;       // Hamilton cycle when one drove the case
  std::vector<int> p_prime;     // detour path of the PropII cases
  std::vector<int> s_set;       // candidate indices behind the hamilton-S pick
  std::vector<RestartEvent> restarts;
  std::uint64_t search_nodes = 0;
};

std::string trace_to_json(const ProofTrace& trace);

// Recomputes every membership and length claim the trace makes against the
// dispatch graph. Returns nullopt when everything holds, else a description
// of the first broken assertion.
std::optional<std::string> validate_trace(const OrientedGraph& dispatch_graph,
                                          const ProofTrace& trace);

// Request normalization. Blocks of a two-block pattern can be swapped by
// reading the walk from its other end, so ell < k/2 becomes k - ell with
// `swapped` set. ForwardFirst requests embed into the reversed graph
// (`reversed` set) and reuse the BackFirst machinery.
struct NormalizedSpec {
  int k = 0;
  int ell = 0;  // k/2 <= ell <= k-1 afterwards
  bool swapped = false;
  bool reversed = false;
};

NormalizedSpec normalize_spec(const TwoBlockSpec& spec);

// Two directed paths with a common start and no other shared vertex; gluing
// them tail-to-tail realizes B^len(p1) F^len(p2).
struct CasePaths {
  std::vector<int> p1;
  std::vector<int> p2;
};

// --- individual proof cases, exposed for direct testing ---------------------

// Case: some in-neighbour of v_0 or out-neighbour of v_t lands in the middle
// window Y. condition_held reports whether the case applies at all; paths is
// empty when the back variant applies but no in-neighbour of v_0 sits in Z
// (impossible once min semidegree >= k - ell).
struct CaseIResult {
  bool condition_held = false;
  std::optional<CasePaths> paths;
  TraceCase label = TraceCase::PropIFront;
  int i = -1;
  int j = -1;
};

CaseIResult prop32_case_i(const OrientedGraph& g, const std::vector<int>& path,
                          int k, int ell);

// Case: v_i is an out-neighbour of v_t inside the head window and v_{i-1}
// has an out-neighbour w_0 off the path. Explores the longest detour from
// w_0 outside the path. Status NotApplicable: no off-path neighbour.
// Status LongerPath: the detour re-enters the tail cycle, so prefix + detour
// + full cycle beats the host path; longer_path carries the witness so
// heuristic callers can restart (exact callers treat it as a search bug).
// Status Exhausted: the detour ends with no arc back into the head segment;
// impossible for a maximum host path once the degree threshold holds.
struct CaseIIResult {
  enum class Status { NotApplicable, Found, LongerPath, Exhausted };
  Status status = Status::NotApplicable;
  std::optional<CasePaths> paths;
  TraceCase label = TraceCase::PropIILongPPrime;
  std::vector<int> longer_path;
  std::vector<int> p_prime;
  int i = -1;
  int m = -1;
  int r = -1;
  int j = -1;
};

CaseIIResult prop32_case_ii(const OrientedGraph& g, const std::vector<int>& path,
                            int k, int ell, int i, const SearchBudget& budget = {});

// Case: G[V(path)] has a Hamilton cycle. Tries every rotation of the given
// cycle as a relabeled host path and picks the first middle-window neighbour
// of the new start that yields two long enough paths. found == false only
// when every rotation lacks a usable candidate (possible only at minimum
// semidegree exactly k - ell).
struct CaseIIIResult {
  bool found = false;
  CasePaths paths;
  int rotation = -1;
  int i = -1;
  bool used_in_neighbor = false;
  std::vector<int> relabeled_path;
};

CaseIIIResult prop32_case_iii(const OrientedGraph& g, const std::vector<int>& path,
                              int k, int ell, const std::vector<int>& hamilton_cycle);

// --- full pipeline -----------------------------------------------------------

struct EmbedOptions {
  // Replace the exact longest-path search by greedy maximal extension plus
  // restart-on-longer-path. Faster, but dead ends become errors instead of
  // impossibilities.
  bool heuristic = false;
};

struct EmbedResult {
  Embedding embedding;  // realizes spec.to_pattern() in the input graph
  ProofTrace trace;
};

// Case analysis on a caller-supplied host path of the dispatch graph.
// The embedding realizes B^ell F^(k-ell); path_is_certified_maximum selects
// between theorem-violation reports and heuristic restarts when a stage
// uncovers a longer path. Exposed for tests and fixtures.
EmbedResult embed_on_path(const OrientedGraph& g, std::vector<int> path, int k, int ell,
                          const SearchBudget& budget, bool path_is_certified_maximum);

// End-to-end embedding of spec into g. Throws Error(ThresholdNotMet) when
// the minimum semidegree is below two_block_threshold(k, ell) after
// normalization, Error(BudgetExhausted) when the path search cannot certify
// within budget, TheoremViolation when the case analysis dead-ends.
EmbedResult embed_two_block(const OrientedGraph& g, const TwoBlockSpec& spec,
                            const SearchBudget& budget = {}, const EmbedOptions& opts = {});

}  // namespace twoblock
