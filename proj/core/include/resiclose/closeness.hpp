#pragma once

#include <cstddef>
#include <vector>

#include "resiclose/distance.hpp"
#include "resiclose/graph.hpp"
#include "resiclose/parallel.hpp"

namespace resiclose {

// Dangalchev closeness: C(v) = sum over u != v of 2^-d(u, v), where
// unreachable pairs contribute nothing. total = C(G) = sum of C(v), i.e. every
// ordered pair is counted.
struct ClosenessProfile {
  std::vector<double> per_vertex;
  double total = 0.0;
};

// ck[k] = C(G - v_k); r_value = min ck (the vertex residual closeness R);
// argmin lists every k attaining r_value, ascending.
struct RemovalProfile {
  std::vector<double> ck;
  double r_value = 0.0;
  std::vector<Vertex> argmin;
};

// How C_k is obtained.
//   Delete:  drop vertex k and re-run all-pairs BFS on the n-1 survivors.
//   Isolate: zero k's row and column of the adjacency, re-run Floyd-Warshall
//            on all n vertices; k is isolated and contributes 0.
enum class RemovalMode { Delete, Isolate };

struct ResidualOptions {
  RemovalMode mode = RemovalMode::Delete;
  ExecutionOptions execution{};
};

// Terms are grouped by hop count and added from the largest distance down.
// The result depends only on the distance multiset, so it is identical for
// isomorphic graphs and for any vertex labelling.
ClosenessProfile closeness_profile(const DistanceMatrix& d);
ClosenessProfile closeness_profile(const Graph& g);

double total_closeness(const DistanceMatrix& d);
double total_closeness(const Graph& g);

// Throws Error{IndexOutOfRange}.
double closeness_after_removal(const Graph& g, Vertex k, RemovalMode mode = RemovalMode::Delete);

// Sweeps every removal, recomputing all-pairs distances each time.
// Throws Error{GraphTooSmall} for n < 2. The profile does not depend on the
// thread count.
RemovalProfile residual_closeness(const Graph& g, const ResidualOptions& options = {});

}  // namespace resiclose
