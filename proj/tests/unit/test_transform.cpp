#include <doctest.h>

#include <variant>

#include "graphs.hpp"
#include "oracle.hpp"
#include "resiclose/error.hpp"
#include "resiclose/generators.hpp"
#include "resiclose/transform.hpp"

using namespace resiclose;
using resiclose::testing::graph_of;
using resiclose::testing::isomorphic;
using resiclose::testing::same_structure;

namespace {

// Subgraph induced on the vertices [first, first + count), reindexed from 0.
Graph induced_range(const Graph& g, Vertex first, std::size_t count) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.a >= first && e.b >= first && e.a < first + count && e.b < first + count) {
      edges.push_back({e.a - first, e.b - first});
    }
  }
  return Graph::from_edges(count, edges);
}

std::vector<Graph> sample_graphs() {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= 7; ++n) {
    out.push_back(path_graph(n));
    out.push_back(star_graph(n));
    out.push_back(complete_graph(n));
  }
  for (std::size_t n = 3; n <= 7; ++n) {
    out.push_back(cycle_graph(n));
    out.push_back(wheel_graph(n));
  }
  out.push_back(complete_bipartite_graph(2, 3));
  out.push_back(Graph(4));
  resiclose::testing::GraphSampler sampler(11);
  for (int i = 0; i < 60; ++i) out.push_back(sampler.next(9));
  return out;
}

}  // namespace

TEST_CASE("middle_graph: documented examples") {
  CHECK(isomorphic(middle_graph(path_graph(2)), path_graph(3)));

  const Graph m = middle_graph(path_graph(3));
  CHECK(m.vertex_count() == 5);
  CHECK(m.edge_count() == 5);
  // 3 = e01, 4 = e12
  for (auto [a, b] : {std::pair<Vertex, Vertex>{0, 3}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}) {
    CHECK(m.has_edge(a, b));
  }
  CHECK(m.kind(0) == VertexKind{OriginalVertex{0}});
  CHECK(m.kind(3) == VertexKind{EdgeVertex{0, 1}});
  CHECK(m.kind(4) == VertexKind{EdgeVertex{1, 2}});

  const Graph mk3 = middle_graph(complete_graph(3));
  CHECK(mk3.vertex_count() == 6);
  CHECK(mk3.edge_count() == 9);
}

TEST_CASE("line_graph: documented examples") {
  CHECK(same_structure(line_graph(path_graph(4)), path_graph(3)));
  CHECK(same_structure(line_graph(star_graph(4)), complete_graph(4)));
  CHECK(isomorphic(line_graph(cycle_graph(5)), cycle_graph(5)));
  CHECK(line_graph(Graph(3)).vertex_count() == 0);
}

TEST_CASE("middle and line graph structural invariants") {
  for (const Graph& g : sample_graphs()) {
    const Graph m = middle_graph(g);
    const Graph l = line_graph(g);
    const std::size_t n = g.vertex_count();
    const std::size_t e = g.edge_count();
    CHECK_FALSE(find_invariant_violation(m));
    CHECK(m.vertex_count() == n + e);
    CHECK(m.edge_count() == 2 * e + l.edge_count());
    CHECK(l.vertex_count() == e);
    CHECK(same_structure(induced_range(m, static_cast<Vertex>(n), e), l));
    CHECK(induced_range(m, 0, n).edge_count() == 0);

    std::size_t originals = 0;
    std::vector<Edge> seen;
    for (const VertexKind& kind : m.kinds()) {
      if (const auto* ev = std::get_if<EdgeVertex>(&kind)) {
        CHECK(ev->a < ev->b);
        seen.push_back({ev->a, ev->b});
      } else {
        ++originals;
      }
    }
    CHECK(originals == n);
    CHECK(seen == g.edges());
  }
}

TEST_CASE("middle graph of a star contains K_n on its edge-vertices") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const Graph m = middle_graph(star_graph(n));
    CHECK(same_structure(induced_range(m, static_cast<Vertex>(n + 1), n), complete_graph(n)));
  }
}

TEST_CASE("line graph of K_n is (2n-4)-regular") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const Graph l = line_graph(complete_graph(n));
    CHECK(l.vertex_count() == n * (n - 1) / 2);
    CHECK(regular_degree(l) == 2 * n - 4);
  }
}

TEST_CASE("remove_vertex") {
  CHECK(remove_vertex(path_graph(3), 1) == Graph(2));
  CHECK(remove_vertex(cycle_graph(4), 0) == path_graph(3));

  const Graph mc3 = middle_graph(cycle_graph(3));
  const Graph mp3 = middle_graph(path_graph(3));
  for (Vertex k = 3; k < 6; ++k) {
    const Graph r = remove_vertex(mc3, k);
    CHECK(r.vertex_count() == 5);
    CHECK(isomorphic(r, mp3));
    CHECK(r.kinds().size() == 5);
  }
  // Kinds shift down with their vertices.
  const Graph r = remove_vertex(mc3, 0);
  CHECK(r.kind(2) == VertexKind{EdgeVertex{0, 1}});

  CHECK_THROWS_AS(remove_vertex(path_graph(3), 3), Error);
}

TEST_CASE("isolate_vertex keeps the index and drops incident edges") {
  const Graph g = isolate_vertex(wheel_graph(5), 0);
  CHECK(g.vertex_count() == 6);
  CHECK(g.degree(0) == 0);
  CHECK(g.edge_count() == 5);
}

TEST_CASE("remove_edge") {
  CHECK(remove_edge(cycle_graph(4), 0, 3) == path_graph(4));
  CHECK(isomorphic(remove_edge(cycle_graph(4), 0, 1), path_graph(4)));
  CHECK(remove_edge(complete_graph(3), 0, 1) == graph_of(3, {{0, 2}, {1, 2}}));
  CHECK(remove_edge(path_graph(2), 1, 0) == Graph(2));

  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  CHECK(kind_of([] { remove_edge(path_graph(3), 0, 2); }) == ErrorKind::NoSuchEdge);
  CHECK(kind_of([] { remove_edge(path_graph(3), 0, 7); }) == ErrorKind::IndexOutOfRange);
}
