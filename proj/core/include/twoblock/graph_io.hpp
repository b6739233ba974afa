#pragma once

#include <string>

#include "twoblock/oriented_graph.hpp"
#include "twoblock/path_model.hpp"

namespace twoblock {

// Wire format: {"n": <int>, "arcs": [[u, v], ...]}. Arc order in the input is
// irrelevant; serialization always emits arcs sorted by (from, to).
// Parsing validates like OrientedGraph::from_arcs and throws Error with a
// machine-readable code (ParseError for malformed JSON / wrong shapes).
OrientedGraph graph_from_json(const std::string& text);
std::string graph_to_json(const OrientedGraph& g);

// Graphviz export: one "u -> v;" line per arc, sorted by (from, to), plus a
// bare "v;" line for each isolated vertex so the order of the graph survives.
std::string graph_to_dot(const OrientedGraph& g);

// Wire format: {"pattern": "<FB string>", "vertices": [v0, ..., vk]}.
std::string embedding_to_json(const PathPattern& pattern, const Embedding& emb);

}  // namespace twoblock
