#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twoblock/oriented_graph.hpp"

namespace twoblock {

// Orientation sequence of a path on k arcs, one char per arc position:
// 'F' means the arc runs with the traversal, 'B' against it. A host walk
// realizing pattern d on vertices w_0..w_k has arc (w_i, w_i+1) when
// d[i] == 'F' and arc (w_i+1, w_i) when d[i] == 'B'.
class PathPattern {
 public:
  PathPattern() = default;
  explicit PathPattern(std::string dirs);  // throws SpecOutOfRange on bad chars or empty

  int arc_count() const { return static_cast<int>(dirs_.size()); }
  const std::string& dirs() const { return dirs_; }
  char at(int i) const { return dirs_[i]; }

  // Maximal runs of equal direction, in traversal order.
  std::vector<int> blocks() const;

  // Pattern seen when the same walk is read from its other end: reverse the
  // string and swap F <-> B. Involution.
  PathPattern reversed() const;

  // Lexicographic min of dirs() and reversed().dirs(); two patterns embed in
  // exactly the same graphs iff they share a canonical form.
  std::string canonical() const;

  bool is_antidirected() const;  // every block has size 1

  bool operator==(const PathPattern& other) const { return dirs_ == other.dirs_; }

 private:
  std::string dirs_;
};

enum class Orientation { BackFirst, ForwardFirst };

const char* orientation_name(Orientation o);

// Two-block path request: k arcs total, first block of ell arcs, second of
// k-ell. BackFirst asks for B^ell F^(k-ell), ForwardFirst for F^ell B^(k-ell).
struct TwoBlockSpec {
  int k = 0;
  int ell = 0;
  Orientation orientation = Orientation::BackFirst;

  // Throws SpecOutOfRange unless 1 <= ell <= k-1 (two genuine blocks).
  void validate() const;
  PathPattern to_pattern() const;
};

// The request whose pattern is the end-for-end reading of spec's: same k,
// blocks swapped, same orientation flag. Involution; a graph hosts spec iff
// it hosts the mirrored spec.
TwoBlockSpec pattern_reverse_symmetry(const TwoBlockSpec& spec);

// Map of pattern positions 0..k to host vertices.
struct Embedding {
  std::vector<int> vertices;
};

struct VerifyFailure {
  enum class Kind { WrongLength, VertexOutOfRange, NotInjective, ArcMissing };
  Kind kind;
  int position;  // pattern arc position for ArcMissing, vertex index otherwise
};

// Checks emb realizes pattern in g. Returns the first violation, or nullopt
// when the embedding is sound.
std::optional<VerifyFailure> verify_embedding(const OrientedGraph& g,
                                              const PathPattern& pattern,
                                              const Embedding& emb);

bool is_directed_path(const OrientedGraph& g, const std::vector<int>& verts);

// A walk whose vertex sequence realizes `pattern`.
struct OrientedWalk {
  PathPattern pattern;
  std::vector<int> vertices;
};

// Glue two directed paths that start at the same vertex and are otherwise
// disjoint into the walk last(P1)..start..last(P2), which realizes
// B^len(P1) F^len(P2). Throws DifferentStart / SharedInterior.
OrientedWalk concat_reverse(const std::vector<int>& p1, const std::vector<int>& p2);

// Cut the window of spec.ell backward arcs nearest the turn plus the
// spec.k - spec.ell forward arcs after it out of a B^a F^b walk. Requires
// a >= ell and b >= k - ell; otherwise throws InsufficientBlocks.
// Only BackFirst targets make sense here; the caller handles orientation.
Embedding extract_two_block(const OrientedWalk& walk, const TwoBlockSpec& spec);

}  // namespace twoblock
