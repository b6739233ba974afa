#include "twoblock/graph_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "twoblock/errors.hpp"

namespace twoblock {

using nlohmann::json;

OrientedGraph graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("arcs")) {
    throw Error(Errc::ParseError, "expected object with \"n\" and \"arcs\"");
  }
  if (!doc["n"].is_number_integer()) {
    throw Error(Errc::ParseError, "\"n\" must be an integer");
  }
  if (!doc["arcs"].is_array()) {
    throw Error(Errc::ParseError, "\"arcs\" must be an array of [u, v] pairs");
  }
  const int n = doc["n"].get<int>();
  std::vector<Arc> arcs;
  arcs.reserve(doc["arcs"].size());
  for (const auto& item : doc["arcs"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw Error(Errc::ParseError, "each arc must be a [u, v] integer pair");
    }
    arcs.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return OrientedGraph::from_arcs(n, arcs);
}

std::string graph_to_json(const OrientedGraph& g) {
  json doc;
  doc["n"] = g.vertex_count();
  json arcs = json::array();
  for (const auto& [u, v] : g.arcs()) arcs.push_back({u, v});
  doc["arcs"] = std::move(arcs);
  return doc.dump();
}

std::string embedding_to_json(const PathPattern& pattern, const Embedding& emb) {
  json doc;
  doc["pattern"] = pattern.dirs();
  doc["vertices"] = emb.vertices;
  return doc.dump();
}

std::string graph_to_dot(const OrientedGraph& g) {
  std::ostringstream out;
  out << "digraph {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) == 0 && g.in_degree(v) == 0) out << "  " << v << ";\n";
  }
  for (const auto& [u, v] : g.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace twoblock
