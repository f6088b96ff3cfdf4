#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "resiclose/graph.hpp"

namespace resiclose::testing {

inline Graph graph_of(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b});
  return Graph::from_edges(n, edges);
}

// Same vertex count and edge set, ignoring vertex kinds.
inline bool same_structure(const Graph& g, const Graph& h) {
  return g.vertex_count() == h.vertex_count() && g.edges() == h.edges();
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  auto edges = g.edges();
  const auto shift = static_cast<Vertex>(g.vertex_count());
  for (const Edge& e : h.edges()) edges.push_back({e.a + shift, e.b + shift});
  return Graph::from_edges(g.vertex_count() + h.vertex_count(), edges);
}

inline Graph with_edge(const Graph& g, Vertex a, Vertex b) {
  auto edges = g.edges();
  edges.push_back({a, b});
  return Graph::from_edges(g.vertex_count(), edges);
}

// 3-dimensional cube: vertices are 3-bit words, adjacent when one bit differs.
inline Graph cube_graph() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 8; ++v) {
    for (Vertex bit = 1; bit < 8; bit <<= 1) {
      if (v < (v ^ bit)) edges.push_back({v, v ^ bit});
    }
  }
  return Graph::from_edges(8, edges);
}

// Tree with a centre and one path ("leg") per entry of legs.
inline Graph spider(std::initializer_list<std::size_t> legs) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t len : legs) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Graph::from_edges(next, edges);
}

// Small arbitrary graphs for property tests; independent of the library's
// seeded generators.
class GraphSampler {
 public:
  explicit GraphSampler(std::uint64_t seed) : rng_(seed) {}

  Graph next(std::size_t max_n = 9) {
    const std::size_t n = 1 + rng_() % max_n;
    const double p = static_cast<double>(rng_() % 100) / 100.0;
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (static_cast<double>(rng_() % 1000) / 1000.0 < p) edges.push_back({a, b});
      }
    }
    return Graph::from_edges(n, edges);
  }

  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace resiclose::testing
