#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "resiclose/graph.hpp"
#include "resiclose/parallel.hpp"

namespace resiclose {

using Hops = std::uint32_t;

// Marks a pair in different components. Never participates in arithmetic.
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  // All off-diagonal entries start Unreachable.
  explicit DistanceMatrix(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  Hops at(Vertex i, Vertex j) const { return d_[index(i, j)]; }
  Hops& at(Vertex i, Vertex j) { return d_[index(i, j)]; }
  bool reachable(Vertex i, Vertex j) const { return at(i, j) != kUnreachable; }

  std::span<const Hops> row(Vertex i) const { return {d_.data() + std::size_t{i} * n_, n_}; }
  std::span<Hops> row(Vertex i) { return {d_.data() + std::size_t{i} * n_, n_}; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(Vertex i, Vertex j) const { return std::size_t{i} * n_ + j; }

  std::size_t n_ = 0;
  std::vector<Hops> d_;
};

// Hop distances from s; kUnreachable outside s's component.
// Throws Error{IndexOutOfRange}.
std::vector<Hops> bfs_from(const Graph& g, Vertex s);

// One BFS per source over adjacency lists. Rows may be filled in parallel; the
// result does not depend on the thread count.
DistanceMatrix all_pairs_bfs(const Graph& g, const ExecutionOptions& options = {.threads = 1});

// Floyd-Warshall with unit weights, relaxing only through reachable pairs.
DistanceMatrix floyd_warshall(const Graph& g);

// Eccentricities and the derived diameter/radius. Only defined for connected
// graphs with at least one vertex; returns nullopt otherwise.
struct DistanceStats {
  std::vector<Hops> eccentricity;
  Hops diameter = 0;
  Hops radius = 0;
};
std::optional<DistanceStats> distance_stats(const DistanceMatrix& d);

// Checks zero diagonal, symmetry, the triangle inequality over reachable
// triples, and that distance 1 coincides with adjacency in g.
std::optional<std::string> find_invariant_violation(const DistanceMatrix& d, const Graph& g);

}  // namespace resiclose
