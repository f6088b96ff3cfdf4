#pragma once

#include "resiclose/graph.hpp"

namespace resiclose {

// Middle graph M(G). Vertices 0..n-1 are the original vertices
// (OriginalVertex tags), vertices n..n+m-1 are the edges of G in
// lexicographic order (EdgeVertex tags). An edge-vertex is adjacent to its two
// endpoints and to every edge sharing an endpoint with it; original vertices
// are pairwise non-adjacent.
Graph middle_graph(const Graph& g);

// Line graph L(G): one vertex per edge of G in lexicographic order (EdgeVertex
// tags), adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

// Drops vertex k; vertices above k shift down by one. Tags are carried over.
// Throws Error{IndexOutOfRange}.
Graph remove_vertex(const Graph& g, Vertex k);

// Same vertex set with every edge at k dropped (k becomes isolated).
Graph isolate_vertex(const Graph& g, Vertex k);

// Throws Error{IndexOutOfRange, NoSuchEdge}.
Graph remove_edge(const Graph& g, Vertex a, Vertex b);

}  // namespace resiclose
