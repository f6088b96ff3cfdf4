#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace resiclose {

using Vertex = std::uint32_t;

// Undirected edge, normalized so that a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Provenance of a vertex in a derived graph (middle graph, line graph).
struct OriginalVertex {
  Vertex index = 0;
  friend bool operator==(const OriginalVertex&, const OriginalVertex&) = default;
};

struct EdgeVertex {
  Vertex a = 0;  // a < b
  Vertex b = 0;
  friend bool operator==(const EdgeVertex&, const EdgeVertex&) = default;
};

using VertexKind = std::variant<OriginalVertex, EdgeVertex>;

inline bool is_edge_vertex(const VertexKind& kind) noexcept {
  return std::holds_alternative<EdgeVertex>(kind);
}

std::string to_string(const VertexKind& kind);

// Simple undirected graph in compressed adjacency form. Immutable once built;
// every "modification" in this library returns a new Graph.
//
// Invariants (established by from_edges):
//   - no self-loops, no parallel edges
//   - symmetric adjacency, each neighbor list sorted ascending
//   - neighbor indices in [0, n)
//   - kinds is either empty or has exactly n entries
class Graph {
 public:
  Graph() = default;

  // n isolated vertices.
  explicit Graph(std::size_t n);

  // Throws Error{SelfLoop, DuplicateEdge, IndexOutOfRange}. Edge endpoints
  // may be given in either order.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<VertexKind> kinds = {});

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;

  // All edges with a < b, in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_kinds() const noexcept { return !kinds_.empty(); }
  const std::vector<VertexKind>& kinds() const noexcept { return kinds_; }
  std::optional<VertexKind> kind(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<VertexKind> kinds_;
};

// Re-checks the structural invariants from scratch. Returns a description of
// the first violation, or nullopt if the graph is well formed.
std::optional<std::string> find_invariant_violation(const Graph& g);

// True iff a traversal from vertex 0 reaches every vertex.
// Throws Error{EmptyGraph} for n = 0.
bool is_connected(const Graph& g);

bool is_tree(const Graph& g);

// nullopt unless every vertex has the same degree.
std::optional<std::size_t> regular_degree(const Graph& g);

}  // namespace resiclose
