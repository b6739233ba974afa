#include "twoblock/path_model.hpp"

#include <algorithm>
#include <unordered_set>

#include "twoblock/errors.hpp"

namespace twoblock {

PathPattern::PathPattern(std::string dirs) : dirs_(std::move(dirs)) {
  if (dirs_.empty()) throw Error(Errc::SpecOutOfRange, "pattern needs at least one arc");
  for (char c : dirs_) {
    if (c != 'F' && c != 'B') {
      throw Error(Errc::SpecOutOfRange, std::string("pattern char '") + c + "' is not F or B");
    }
  }
}

std::vector<int> PathPattern::blocks() const {
  std::vector<int> result;
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    if (i == 0 || dirs_[i] != dirs_[i - 1]) result.push_back(0);
    ++result.back();
  }
  return result;
}

PathPattern PathPattern::reversed() const {
  std::string out(dirs_.rbegin(), dirs_.rend());
  for (char& c : out) c = (c == 'F') ? 'B' : 'F';
  return PathPattern(std::move(out));
}

std::string PathPattern::canonical() const {
  return std::min(dirs_, reversed().dirs());
}

bool PathPattern::is_antidirected() const {
  for (std::size_t i = 1; i < dirs_.size(); ++i) {
    if (dirs_[i] == dirs_[i - 1]) return false;
  }
  return true;
}

const char* orientation_name(Orientation o) {
  return o == Orientation::BackFirst ? "back-first" : "forward-first";
}

void TwoBlockSpec::validate() const {
  if (k < 2 || ell < 1 || ell >= k) {
    throw Error(Errc::SpecOutOfRange,
                "two-block spec needs 1 <= ell <= k-1, got k=" + std::to_string(k) +
                    " ell=" + std::to_string(ell));
  }
}

PathPattern TwoBlockSpec::to_pattern() const {
  validate();
  const char first = orientation == Orientation::BackFirst ? 'B' : 'F';
  const char second = first == 'B' ? 'F' : 'B';
  std::string dirs(static_cast<std::size_t>(k), second);
  std::fill_n(dirs.begin(), ell, first);
  return PathPattern(std::move(dirs));
}

TwoBlockSpec pattern_reverse_symmetry(const TwoBlockSpec& spec) {
  spec.validate();
  return TwoBlockSpec{spec.k, spec.k - spec.ell, spec.orientation};
}

std::optional<VerifyFailure> verify_embedding(const OrientedGraph& g,
                                              const PathPattern& pattern,
                                              const Embedding& emb) {
  const int k = pattern.arc_count();
  if (static_cast<int>(emb.vertices.size()) != k + 1) {
    return VerifyFailure{VerifyFailure::Kind::WrongLength, 0};
  }
  std::unordered_set<int> seen;
  for (int i = 0; i <= k; ++i) {
    const int v = emb.vertices[i];
    if (v < 0 || v >= g.vertex_count()) {
      return VerifyFailure{VerifyFailure::Kind::VertexOutOfRange, i};
    }
    if (!seen.insert(v).second) {
      return VerifyFailure{VerifyFailure::Kind::NotInjective, i};
    }
  }
  for (int i = 0; i < k; ++i) {
    const int a = emb.vertices[i];
    const int b = emb.vertices[i + 1];
    const bool ok = pattern.at(i) == 'F' ? g.has_arc(a, b) : g.has_arc(b, a);
    if (!ok) return VerifyFailure{VerifyFailure::Kind::ArcMissing, i};
  }
  return std::nullopt;
}

bool is_directed_path(const OrientedGraph& g, const std::vector<int>& verts) {
  if (verts.empty()) return false;
  std::unordered_set<int> seen;
  for (int v : verts) {
    if (v < 0 || v >= g.vertex_count() || !seen.insert(v).second) return false;
  }
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    if (!g.has_arc(verts[i], verts[i + 1])) return false;
  }
  return true;
}

OrientedWalk concat_reverse(const std::vector<int>& p1, const std::vector<int>& p2) {
  if (p1.empty() || p2.empty() || p1.front() != p2.front()) {
    throw Error(Errc::DifferentStart, "paths must share their start vertex");
  }
  std::unordered_set<int> in_p1(p1.begin(), p1.end());
  for (std::size_t i = 1; i < p2.size(); ++i) {
    if (in_p1.count(p2[i])) {
      throw Error(Errc::SharedInterior,
                  "vertex " + std::to_string(p2[i]) + " appears in both paths");
    }
  }
  const int a = static_cast<int>(p1.size()) - 1;
  const int b = static_cast<int>(p2.size()) - 1;
  if (a == 0 || b == 0) {
    throw Error(Errc::InsufficientBlocks, "both paths need at least one arc");
  }
  OrientedWalk walk;
  walk.vertices.assign(p1.rbegin(), p1.rend());
  walk.vertices.insert(walk.vertices.end(), p2.begin() + 1, p2.end());
  std::string dirs(static_cast<std::size_t>(a + b), 'F');
  std::fill_n(dirs.begin(), a, 'B');
  walk.pattern = PathPattern(std::move(dirs));
  return walk;
}

Embedding extract_two_block(const OrientedWalk& walk, const TwoBlockSpec& spec) {
  spec.validate();
  const auto blocks = walk.pattern.blocks();
  if (blocks.size() != 2 || walk.pattern.at(0) != 'B') {
    throw Error(Errc::InsufficientBlocks, "walk is not of shape B^a F^b");
  }
  const int a = blocks[0];
  const int b = blocks[1];
  if (a < spec.ell || b < spec.k - spec.ell) {
    throw Error(Errc::InsufficientBlocks,
                "walk blocks (" + std::to_string(a) + "," + std::to_string(b) +
                    ") cannot host ell=" + std::to_string(spec.ell) +
                    " k-ell=" + std::to_string(spec.k - spec.ell));
  }
  // Turn sits at index a; keep ell arcs before it and k-ell after.
  Embedding emb;
  const int lo = a - spec.ell;
  emb.vertices.assign(walk.vertices.begin() + lo, walk.vertices.begin() + lo + spec.k + 1);
  return emb;
}

}  // namespace twoblock
