#include "resiclose/graph.hpp"

#include <algorithm>
#include <queue>

#include "resiclose/error.hpp"

namespace resiclose {

std::string to_string(const VertexKind& kind) {
  if (const auto* e = std::get_if<EdgeVertex>(&kind)) {
    return "edge:" + std::to_string(e->a) + "-" + std::to_string(e->b);
  }
  return "original:" + std::to_string(std::get<OriginalVertex>(kind).index);
}

Graph::Graph(std::size_t n) : offsets_(n + 1, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<VertexKind> kinds) {
  if (!kinds.empty() && kinds.size() != n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "kinds has " + std::to_string(kinds.size()) + " entries for " +
                    std::to_string(n) + " vertices");
  }

  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges) {
    if (e.a >= n || e.b >= n) {
      throw Error(ErrorKind::IndexOutOfRange, "edge " + std::to_string(e.a) + "-" +
                                                  std::to_string(e.b) + " outside [0, " +
                                                  std::to_string(n) + ")");
    }
    if (e.a == e.b) {
      throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.a));
    }
    ++degree[e.a];
    ++degree[e.b];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[n]);

  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.targets_[cursor[e.a]++] = e.b;
    g.targets_[cursor[e.b]++] = e.a;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      Vertex lo = std::min<Vertex>(static_cast<Vertex>(v), *dup);
      Vertex hi = std::max<Vertex>(static_cast<Vertex>(v), *dup);
      throw Error(ErrorKind::DuplicateEdge,
                  "edge " + std::to_string(lo) + "-" + std::to_string(hi) + " listed twice");
    }
  }
  g.kinds_ = std::move(kinds);
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= vertex_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v));
  }
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  auto nb = neighbors(a);
  if (b >= vertex_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(b));
  }
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (Vertex u : neighbors(v)) {
      if (v < u) out.push_back({v, u});
    }
  }
  return out;
}

std::optional<VertexKind> Graph::kind(Vertex v) const {
  if (kinds_.empty()) return std::nullopt;
  if (v >= kinds_.size()) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v));
  return kinds_[v];
}

std::optional<std::string> find_invariant_violation(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    degree_sum += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex u = nb[i];
      if (u >= n) return "neighbor " + std::to_string(u) + " of " + std::to_string(v) + " out of range";
      if (u == v) return "self-loop at " + std::to_string(v);
      if (i > 0 && nb[i - 1] >= u) {
        return "adjacency of " + std::to_string(v) + " not strictly increasing";
      }
      auto back = g.neighbors(u);
      if (!std::binary_search(back.begin(), back.end(), v)) {
        return "asymmetric edge " + std::to_string(v) + "->" + std::to_string(u);
      }
    }
  }
  if (degree_sum != 2 * g.edge_count()) return "edge count does not match degree sum";
  if (g.has_kinds() && g.kinds().size() != n) return "kinds size mismatch";
  return std::nullopt;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "connectivity of a graph with no vertices");
  std::vector<bool> seen(n, false);
  std::queue<Vertex> frontier;
  seen[0] = true;
  frontier.push(0);
  std::size_t reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == n;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const std::size_t r = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != r) return std::nullopt;
  }
  return r;
}

}  // namespace resiclose
