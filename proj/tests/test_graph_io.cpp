#include <doctest.h>

#include <optional>

#include <string>

#include "twoblock/errors.hpp"
#include "twoblock/graph_io.hpp"
#include "twoblock/oriented_graph.hpp"
#include "twoblock/path_model.hpp"

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

TEST_SUITE("graph_io") {

TEST_CASE("json round trip preserves the graph") {
  const OrientedGraph g = OrientedGraph::from_arcs(5, {{4, 0}, {0, 1}, {1, 2}, {2, 3}});
  const OrientedGraph back = graph_from_json(graph_to_json(g));
  CHECK(back == g);
}

TEST_CASE("serialization is canonical: arcs sorted, compact keys") {
  const OrientedGraph g = OrientedGraph::from_arcs(3, {{1, 2}, {0, 1}});
  CHECK(graph_to_json(g) == R"({"arcs":[[0,1],[1,2]],"n":3})");
  const OrientedGraph bare = OrientedGraph::from_arcs(2, {});
  CHECK(graph_to_json(bare) == R"({"arcs":[],"n":2})");
}

TEST_CASE("parsing accepts any arc order and whitespace") {
  const OrientedGraph g = graph_from_json(R"( { "arcs": [[2,0], [0,1], [1,2]], "n": 3 } )");
  CHECK(g.vertex_count() == 3);
  CHECK(g.has_arc(2, 0));
}

TEST_CASE("parse errors carry machine codes") {
  CHECK(thrown_code([] { graph_from_json("not json"); }) == Errc::ParseError);
  CHECK(thrown_code([] { graph_from_json(R"({"n": 3})") ; }) == Errc::ParseError);
  CHECK(thrown_code([] { graph_from_json(R"({"n": "3", "arcs": []})"); }) == Errc::ParseError);
  CHECK(thrown_code([] { graph_from_json(R"({"n": 3, "arcs": [[0]]})"); }) == Errc::ParseError);
  CHECK(thrown_code([] { graph_from_json(R"({"n": 3, "arcs": [[0,0]]})"); }) == Errc::LoopArc);
  CHECK(thrown_code([] { graph_from_json(R"({"n": 3, "arcs": [[0,1],[1,0]]})"); }) ==
        Errc::TwoCycle);
  CHECK(thrown_code([] { graph_from_json(R"({"n": 2, "arcs": [[0,5]]})"); }) ==
        Errc::VertexOutOfRange);
}

TEST_CASE("dot export lists isolated vertices then sorted arcs") {
  const OrientedGraph g = OrientedGraph::from_arcs(4, {{2, 0}, {0, 1}});
  CHECK(graph_to_dot(g) ==
        "digraph {\n"
        "  3;\n"
        "  0 -> 1;\n"
        "  2 -> 0;\n"
        "}\n");
}

TEST_CASE("embedding wire format") {
  const PathPattern pattern("BBF");
  const Embedding emb{{4, 2, 0, 3}};
  CHECK(embedding_to_json(pattern, emb) == R"({"pattern":"BBF","vertices":[4,2,0,3]})");
}

}  // TEST_SUITE
