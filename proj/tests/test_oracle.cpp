#include <doctest.h>

#include <optional>

#include <string>
#include <vector>

#include "twoblock/errors.hpp"
#include "twoblock/generators.hpp"
#include "twoblock/oracle.hpp"
#include "twoblock/oriented_graph.hpp"
#include "twoblock/path_model.hpp"

using namespace twoblock;

namespace {

// Reference oracle: try every injective vertex tuple. Independent of the
// pruned backtracker under test; usable only for tiny n and k.
bool brute_step(const OrientedGraph& g, const PathPattern& pattern, std::vector<int>& tuple,
                std::vector<char>& used) {
  const int pos = static_cast<int>(tuple.size());
  if (pos == pattern.arc_count() + 1) return true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (used[v]) continue;
    if (pos > 0) {
      const int prev = tuple.back();
      const bool ok = pattern.at(pos - 1) == 'F' ? g.has_arc(prev, v) : g.has_arc(v, prev);
      if (!ok) continue;
    }
    used[v] = 1;
    tuple.push_back(v);
    if (brute_step(g, pattern, tuple, used)) return true;
    tuple.pop_back();
    used[v] = 0;
  }
  return false;
}

bool brute_contains(const OrientedGraph& g, const PathPattern& pattern) {
  std::vector<int> tuple;
  std::vector<char> used(g.vertex_count(), 0);
  return brute_step(g, pattern, tuple, used);
}

std::string flipped(const std::string& dirs) {
  std::string out = dirs;
  for (char& c : out) c = c == 'F' ? 'B' : 'F';
  return out;
}

template <typename F>
std::optional<Errc> thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("triangle pattern membership") {
  const OrientedGraph t = directed_triangle();

  const OracleReport ff = find_pattern_embedding(t, PathPattern("FF"));
  CHECK(ff.found);
  REQUIRE(ff.embedding.has_value());
  CHECK_FALSE(verify_embedding(t, ff.pattern, *ff.embedding).has_value());

  const OracleReport bb = find_pattern_embedding(t, PathPattern("BB"));
  CHECK(bb.found);

  const OracleReport fb = find_pattern_embedding(t, PathPattern("FB"));
  CHECK_FALSE(fb.found);
  CHECK_FALSE(fb.exhausted);  // certified absent
  CHECK_FALSE(fb.embedding.has_value());
  CHECK(fb.nodes_explored > 0);
}

TEST_CASE("agrees with tuple enumeration on small random graphs") {
  const std::vector<std::string> patterns{"F", "BB", "FB", "FFB", "BFB", "FFFF", "BBFF", "FBFB"};
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    for (double p : {0.3, 0.7}) {
      const OrientedGraph g = random_oriented_graph(n, p, seed * 97 + static_cast<int>(10 * p));
      for (const std::string& s : patterns) {
        const PathPattern pattern(s);
        const OracleReport r = find_pattern_embedding(g, pattern);
        REQUIRE_FALSE(r.exhausted);
        CHECK(r.found == brute_contains(g, pattern));
        if (r.found) {
          REQUIRE(r.embedding.has_value());
          CHECK_FALSE(verify_embedding(g, pattern, *r.embedding).has_value());
        }
      }
    }
  }
}

TEST_CASE("graph reversal flips every direction") {
  for (std::uint64_t seed = 2; seed <= 8; ++seed) {
    const OrientedGraph g = random_oriented_graph(7, 0.5, seed);
    for (const char* s : {"FFB", "BFB", "BBFF"}) {
      const PathPattern pattern(s);
      const OracleReport direct = find_pattern_embedding(g, pattern);
      const OracleReport rev = find_pattern_embedding(g.reversed(), PathPattern(flipped(s)));
      CHECK(direct.found == rev.found);
      // Reading the walk from its other end embeds in the same graphs.
      const OracleReport mirror = find_pattern_embedding(g, pattern.reversed());
      CHECK(direct.found == mirror.found);
    }
  }
}

TEST_CASE("two-block wrapper matches the raw pattern search") {
  const OrientedGraph t = regular_tournament(7);
  const TwoBlockSpec spec{4, 2, Orientation::BackFirst};
  const OracleReport a = contains_two_block(t, spec);
  const OracleReport b = find_pattern_embedding(t, spec.to_pattern());
  CHECK(a.found == b.found);
  CHECK(a.pattern == b.pattern);
  CHECK(a.found);
}

TEST_CASE("triangle blowup keeps two-block paths but loses antidirected ones") {
  const OrientedGraph b = blowup(directed_triangle(), 2);
  const OracleReport two_block = find_pattern_embedding(b, PathPattern("BBFF"));
  CHECK(two_block.found);
  const OracleReport anti = find_pattern_embedding(b, PathPattern("FBFB"));
  CHECK_FALSE(anti.found);
  CHECK_FALSE(anti.exhausted);
  const OracleReport anti2 = find_pattern_embedding(b, PathPattern("BFBF"));
  CHECK_FALSE(anti2.found);
  CHECK_FALSE(anti2.exhausted);
}

TEST_CASE("tiny hosts certify absence") {
  const OrientedGraph empty = OrientedGraph::from_arcs(0, {});
  const OracleReport r0 = find_pattern_embedding(empty, PathPattern("F"));
  CHECK_FALSE(r0.found);
  CHECK_FALSE(r0.exhausted);

  const OrientedGraph one = OrientedGraph::from_arcs(1, {});
  const OracleReport r1 = find_pattern_embedding(one, PathPattern("F"));
  CHECK_FALSE(r1.found);
  CHECK_FALSE(r1.exhausted);
}

TEST_CASE("budget cuts are flagged as inconclusive") {
  // Antidirected 6-arc path is absent from the triangle blowup; certifying
  // that takes more than one node.
  const OrientedGraph b = blowup(directed_triangle(), 3);
  const OracleReport r = find_pattern_embedding(b, PathPattern("FBFBFB"), SearchBudget{1, 0.0});
  CHECK_FALSE(r.found);
  CHECK(r.exhausted);
}

TEST_CASE("orientation survey collapses reversal classes") {
  const OrientedGraph t = directed_triangle();
  const OrientationSurvey s2 = contains_all_orientations(t, 2);
  CHECK(s2.k == 2);
  CHECK(s2.classes.size() == 3);  // BB, BF, FB
  REQUIRE(s2.missing.size() == 2);
  CHECK(s2.missing[0].dirs() == "BF");
  CHECK(s2.missing[1].dirs() == "FB");
  CHECK(s2.missing_non_antidirected().empty());
  CHECK(s2.inconclusive.empty());
  CHECK_FALSE(s2.all_present());

  // Representatives are lexicographic minima, listed in ascending order.
  std::string prev;
  for (const OracleReport& r : s2.classes) {
    CHECK(r.pattern.dirs() == r.pattern.canonical());
    CHECK(prev < r.pattern.dirs());
    prev = r.pattern.dirs();
  }
}

TEST_CASE("survey class counts match the reversal involution") {
  const OrientedGraph t = regular_tournament(5);
  const OrientationSurvey s3 = contains_all_orientations(t, 3);
  CHECK(s3.classes.size() == 4);
  const OrientationSurvey s4 = contains_all_orientations(t, 4);
  CHECK(s4.classes.size() == 10);
}

TEST_CASE("rotational tournament on five misses only antidirected classes") {
  const OrientationSurvey s = contains_all_orientations(regular_tournament(5), 4);
  CHECK(s.inconclusive.empty());
  CHECK_FALSE(s.missing.empty());
  CHECK(s.missing_non_antidirected().empty());
  for (const PathPattern& p : s.missing) CHECK(p.is_antidirected());
  CHECK(s.nodes_explored > 0);
}

TEST_CASE("spec bounds") {
  const OrientedGraph t = directed_triangle();
  CHECK(thrown_code([&] { contains_all_orientations(t, 0); }) == Errc::SpecOutOfRange);
  CHECK(thrown_code([&] { contains_all_orientations(t, 31); }) == Errc::SpecOutOfRange);
  CHECK(thrown_code([&] { find_pattern_embedding(t, PathPattern("")); }) ==
        Errc::SpecOutOfRange);
}

}  // TEST_SUITE
