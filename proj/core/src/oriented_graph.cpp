#include "twoblock/oriented_graph.hpp"

#include <algorithm>
#include <string>

#include "twoblock/errors.hpp"

namespace twoblock {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::LoopArc: return "LoopArc";
    case Errc::TwoCycle: return "TwoCycle";
    case Errc::DuplicateArc: return "DuplicateArc";
    case Errc::NotAPath: return "NotAPath";
    case Errc::SpecOutOfRange: return "SpecOutOfRange";
    case Errc::DifferentStart: return "DifferentStart";
    case Errc::SharedInterior: return "SharedInterior";
    case Errc::InsufficientBlocks: return "InsufficientBlocks";
    case Errc::EvenOrder: return "EvenOrder";
    case Errc::BadJumpSet: return "BadJumpSet";
    case Errc::Unsatisfiable: return "Unsatisfiable";
    case Errc::AttemptsExhausted: return "AttemptsExhausted";
    case Errc::TooManyVertices: return "TooManyVertices";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::ThresholdNotMet: return "ThresholdNotMet";
    case Errc::RestartLimit: return "RestartLimit";
    case Errc::CaseAnalysisExhausted: return "CaseAnalysisExhausted";
  }
  return "UnknownError";
}

OrientedGraph OrientedGraph::from_arcs(int n, const std::vector<Arc>& arcs) {
  if (n < 0) throw Error(Errc::VertexOutOfRange, "vertex count must be non-negative");
  OrientedGraph g;
  g.n_ = n;
  g.out_.resize(n);
  g.in_.resize(n);
  for (const auto& [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(Errc::VertexOutOfRange,
                  "arc (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw Error(Errc::LoopArc, "loop arc at vertex " + std::to_string(u));
    }
    g.out_[u].push_back(v);
    g.in_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(g.out_[v].begin(), g.out_[v].end());
    std::sort(g.in_[v].begin(), g.in_[v].end());
    if (std::adjacent_find(g.out_[v].begin(), g.out_[v].end()) != g.out_[v].end()) {
      throw Error(Errc::DuplicateArc, "duplicate arc out of vertex " + std::to_string(v));
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v : g.out_[u]) {
      if (u < v && g.has_arc(v, u)) {
        throw Error(Errc::TwoCycle, "2-cycle between " + std::to_string(u) +
                                        " and " + std::to_string(v));
      }
    }
    g.arc_count_ += g.out_[u].size();
  }
  return g;
}

bool OrientedGraph::has_arc(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : out_[u]) result.emplace_back(u, v);
  }
  return result;
}

OrientedGraph OrientedGraph::reversed() const {
  OrientedGraph g;
  g.n_ = n_;
  g.arc_count_ = arc_count_;
  g.out_ = in_;
  g.in_ = out_;
  return g;
}

bool OrientedGraph::operator==(const OrientedGraph& other) const {
  return n_ == other.n_ && out_ == other.out_;
}

DegreeSummary degree_summary(const OrientedGraph& g) {
  DegreeSummary s;
  const int n = g.vertex_count();
  s.out_degree.resize(n);
  s.in_degree.resize(n);
  for (int v = 0; v < n; ++v) {
    s.out_degree[v] = g.out_degree(v);
    s.in_degree[v] = g.in_degree(v);
  }
  if (n == 0) return s;  // minima stay 0 for the empty graph
  s.min_out = *std::min_element(s.out_degree.begin(), s.out_degree.end());
  s.min_in = *std::min_element(s.in_degree.begin(), s.in_degree.end());
  s.min_semidegree = std::min(s.min_out, s.min_in);
  return s;
}

int min_semidegree(const OrientedGraph& g) {
  return degree_summary(g).min_semidegree;
}

InducedSubgraph induced_subgraph(const OrientedGraph& g, const std::vector<int>& vertices) {
  InducedSubgraph result;
  const int n = g.vertex_count();
  result.old_to_new.assign(n, -1);
  result.new_to_old = vertices;
  std::sort(result.new_to_old.begin(), result.new_to_old.end());
  for (std::size_t i = 0; i < result.new_to_old.size(); ++i) {
    const int old = result.new_to_old[i];
    if (old < 0 || old >= n) {
      throw Error(Errc::VertexOutOfRange, "induced vertex " + std::to_string(old) + " out of range");
    }
    if (result.old_to_new[old] != -1) {
      throw Error(Errc::DuplicateArc, "vertex " + std::to_string(old) + " listed twice");
    }
    result.old_to_new[old] = static_cast<int>(i);
  }
  std::vector<Arc> arcs;
  for (int old_u : result.new_to_old) {
    for (int old_v : g.out_neighbors(old_u)) {
      const int new_v = result.old_to_new[old_v];
      if (new_v != -1) arcs.emplace_back(result.old_to_new[old_u], new_v);
    }
  }
  result.graph = OrientedGraph::from_arcs(static_cast<int>(result.new_to_old.size()), arcs);
  return result;
}

}  // namespace twoblock
