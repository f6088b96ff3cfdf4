#include "resiclose/transform.hpp"

#include <string>
#include <vector>

#include "resiclose/error.hpp"

namespace resiclose {
namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " not in [0, " +
                                                std::to_string(g.vertex_count()) + ")");
  }
}

// Pairs of edge ids sharing an endpoint. In a simple graph two distinct edges
// share at most one endpoint, so each pair is produced exactly once.
std::vector<Edge> adjacent_edge_pairs(const Graph& g, const std::vector<Edge>& edges,
                                      Vertex offset) {
  std::vector<std::vector<Vertex>> incident(g.vertex_count());
  for (std::size_t id = 0; id < edges.size(); ++id) {
    incident[edges[id].a].push_back(static_cast<Vertex>(id));
    incident[edges[id].b].push_back(static_cast<Vertex>(id));
  }
  std::vector<Edge> out;
  for (const auto& ids : incident) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        out.push_back({offset + ids[i], offset + ids[j]});
      }
    }
  }
  return out;
}

}  // namespace

Graph middle_graph(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  const std::vector<Edge> base = g.edges();

  std::vector<VertexKind> kinds;
  kinds.reserve(n + base.size());
  for (Vertex v = 0; v < n; ++v) kinds.emplace_back(OriginalVertex{v});
  for (const Edge& e : base) kinds.emplace_back(EdgeVertex{e.a, e.b});

  std::vector<Edge> edges = adjacent_edge_pairs(g, base, n);
  for (std::size_t id = 0; id < base.size(); ++id) {
    const Vertex ev = n + static_cast<Vertex>(id);
    edges.push_back({base[id].a, ev});
    edges.push_back({base[id].b, ev});
  }
  return Graph::from_edges(n + base.size(), edges, std::move(kinds));
}

Graph line_graph(const Graph& g) {
  const std::vector<Edge> base = g.edges();
  std::vector<VertexKind> kinds;
  kinds.reserve(base.size());
  for (const Edge& e : base) kinds.emplace_back(EdgeVertex{e.a, e.b});
  return Graph::from_edges(base.size(), adjacent_edge_pairs(g, base, 0), std::move(kinds));
}

Graph remove_vertex(const Graph& g, Vertex k) {
  check_vertex(g, k);
  auto shift = [k](Vertex v) { return v > k ? v - 1 : v; };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.a != k && e.b != k) edges.push_back({shift(e.a), shift(e.b)});
  }
  std::vector<VertexKind> kinds;
  if (g.has_kinds()) {
    kinds = g.kinds();
    kinds.erase(kinds.begin() + k);
  }
  return Graph::from_edges(g.vertex_count() - 1, edges, std::move(kinds));
}

Graph isolate_vertex(const Graph& g, Vertex k) {
  check_vertex(g, k);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.a != k && e.b != k) edges.push_back(e);
  }
  return Graph::from_edges(g.vertex_count(), edges, g.kinds());
}

Graph remove_edge(const Graph& g, Vertex a, Vertex b) {
  check_vertex(g, a);
  check_vertex(g, b);
  if (a == b || !g.has_edge(a, b)) {
    throw Error(ErrorKind::NoSuchEdge, "no edge " + std::to_string(a) + "-" + std::to_string(b));
  }
  const Edge target{std::min(a, b), std::max(a, b)};
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e != target) edges.push_back(e);
  }
  return Graph::from_edges(g.vertex_count(), edges, g.kinds());
}

}  // namespace resiclose
