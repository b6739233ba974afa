#include <doctest.h>

#include <optional>

#include <cstddef>

#include "twoblock/errors.hpp"
#include "twoblock/generators.hpp"
#include "twoblock/oriented_graph.hpp"

using namespace twoblock;

namespace {

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

TEST_SUITE("generators") {

TEST_CASE("circulant arcs follow the jumps") {
  const OrientedGraph g = circulant(5, {1, 2});
  CHECK(g.vertex_count() == 5);
  CHECK(g.arc_count() == 10);
  CHECK(g.has_arc(0, 1));
  CHECK(g.has_arc(0, 2));
  CHECK(g.has_arc(4, 0));
  CHECK(g.has_arc(4, 1));
  CHECK_FALSE(g.has_arc(0, 3));
  CHECK(g == regular_tournament(5));
}

TEST_CASE("circulant rejects bad jump sets") {
  CHECK(thrown_code([] { circulant(5, {0}); }) == Errc::BadJumpSet);
  CHECK(thrown_code([] { circulant(5, {5}); }) == Errc::BadJumpSet);
  CHECK(thrown_code([] { circulant(5, {1, 1}); }) == Errc::BadJumpSet);
  CHECK(thrown_code([] { circulant(5, {1, 4}); }) == Errc::BadJumpSet);  // 1 + 4 = n
  CHECK(thrown_code([] { circulant(6, {3}); }) == Errc::BadJumpSet);     // n/2
  CHECK(thrown_code([] { circulant(0, {1}); }) == Errc::SpecOutOfRange);
}

TEST_CASE("regular tournament is rotationally regular") {
  for (int n : {3, 5, 7, 11}) {
    const OrientedGraph t = regular_tournament(n);
    CHECK(t.arc_count() == static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int v = 0; v < n; ++v) {
      CHECK(t.out_degree(v) == (n - 1) / 2);
      CHECK(t.in_degree(v) == (n - 1) / 2);
    }
    CHECK(min_semidegree(t) == (n - 1) / 2);
  }
  CHECK(thrown_code([] { regular_tournament(6); }) == Errc::EvenOrder);
  CHECK(thrown_code([] { regular_tournament(1); }) == Errc::SpecOutOfRange);
}

TEST_CASE("directed triangle") {
  const OrientedGraph t = directed_triangle();
  CHECK(t.vertex_count() == 3);
  CHECK(t.has_arc(0, 1));
  CHECK(t.has_arc(1, 2));
  CHECK(t.has_arc(2, 0));
  CHECK(t.arc_count() == 3);
}

TEST_CASE("blowup copies cross arcs and keeps groups independent") {
  const OrientedGraph b = blowup(directed_triangle(), 2);
  CHECK(b.vertex_count() == 6);
  CHECK(b.arc_count() == 12);
  // Copies of base vertex 0 are {0, 1}; of 1 are {2, 3}.
  CHECK(b.has_arc(0, 2));
  CHECK(b.has_arc(1, 3));
  CHECK_FALSE(b.has_arc(0, 1));
  CHECK_FALSE(b.has_arc(2, 3));
  CHECK(min_semidegree(b) == 2);

  const OrientedGraph b3 = blowup(directed_triangle(), 3);
  CHECK(b3.vertex_count() == 9);
  CHECK(min_semidegree(b3) == 3);
  CHECK(thrown_code([] { blowup(directed_triangle(), 0); }) == Errc::SpecOutOfRange);
}

TEST_CASE("random generators are deterministic in the seed") {
  CHECK(random_oriented_graph(9, 0.5, 42) == random_oriented_graph(9, 0.5, 42));
  CHECK_FALSE(random_oriented_graph(9, 0.5, 42) == random_oriented_graph(9, 0.5, 43));
  CHECK(random_tournament(8, 7) == random_tournament(8, 7));
  CHECK(random_with_min_semidegree(9, 3, 11) == random_with_min_semidegree(9, 3, 11));
}

TEST_CASE("random_oriented_graph respects the density extremes") {
  CHECK(random_oriented_graph(7, 0.0, 1).arc_count() == 0);
  CHECK(random_oriented_graph(7, 1.0, 1).arc_count() == 21);
  CHECK(random_tournament(7, 3).arc_count() == 21);
}

TEST_CASE("random_with_min_semidegree meets its floor for every seed") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    CHECK(min_semidegree(random_with_min_semidegree(7, 3, seed)) >= 3);
    CHECK(min_semidegree(random_with_min_semidegree(9, 3, seed)) >= 3);
    CHECK(min_semidegree(random_with_min_semidegree(12, 4, seed)) >= 4);
    CHECK(min_semidegree(random_with_min_semidegree(5, 2, seed)) >= 2);
  }
  CHECK(thrown_code([] { random_with_min_semidegree(5, 3, 1); }) == Errc::Unsatisfiable);
  CHECK(thrown_code([] { random_with_min_semidegree(0, 0, 1); }) == Errc::SpecOutOfRange);
}

}  // TEST_SUITE
