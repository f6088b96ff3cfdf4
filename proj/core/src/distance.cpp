#include "resiclose/distance.hpp"

#include <algorithm>
#include <string>

#include "resiclose/error.hpp"

namespace resiclose {

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {
  for (std::size_t i = 0; i < n; ++i) d_[i * n + i] = 0;
}

namespace {

void bfs_into(const Graph& g, Vertex s, std::span<Hops> dist, std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreachable);
  queue.clear();
  dist[s] = 0;
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    const Hops next = dist[v] + 1;
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] == kUnreachable) {
        dist[u] = next;
        queue.push_back(u);
      }
    }
  }
}

}  // namespace

std::vector<Hops> bfs_from(const Graph& g, Vertex s) {
  if (s >= g.vertex_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "BFS source " + std::to_string(s));
  }
  std::vector<Hops> dist(g.vertex_count());
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  bfs_into(g, s, dist, queue);
  return dist;
}

DistanceMatrix all_pairs_bfs(const Graph& g, const ExecutionOptions& options) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  parallel_for(n, options, [&](std::size_t s) {
    thread_local std::vector<Vertex> queue;
    bfs_into(g, static_cast<Vertex>(s), d.row(static_cast<Vertex>(s)), queue);
  });
  return d;
}

DistanceMatrix floyd_warshall(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  DistanceMatrix d(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j : g.neighbors(i)) d.at(i, j) = 1;
  }
  for (Vertex k = 0; k < n; ++k) {
    auto through = d.row(k);
    for (Vertex i = 0; i < n; ++i) {
      const Hops dik = d.at(i, k);
      if (dik == kUnreachable) continue;
      auto row = d.row(i);
      for (Vertex j = 0; j < n; ++j) {
        const Hops dkj = through[j];
        if (dkj == kUnreachable) continue;
        if (dik + dkj < row[j]) row[j] = dik + dkj;
      }
    }
  }
  return d;
}

std::optional<DistanceStats> distance_stats(const DistanceMatrix& d) {
  const auto n = static_cast<Vertex>(d.size());
  if (n == 0) return std::nullopt;
  DistanceStats stats;
  stats.eccentricity.resize(n);
  for (Vertex i = 0; i < n; ++i) {
    auto row = d.row(i);
    if (std::find(row.begin(), row.end(), kUnreachable) != row.end()) return std::nullopt;
    stats.eccentricity[i] = *std::max_element(row.begin(), row.end());
  }
  stats.diameter = *std::max_element(stats.eccentricity.begin(), stats.eccentricity.end());
  stats.radius = *std::min_element(stats.eccentricity.begin(), stats.eccentricity.end());
  return stats;
}

std::optional<std::string> find_invariant_violation(const DistanceMatrix& d, const Graph& g) {
  const auto n = static_cast<Vertex>(d.size());
  if (n != g.vertex_count()) return "matrix size does not match graph";
  auto pair = [](Vertex i, Vertex j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (Vertex i = 0; i < n; ++i) {
    if (d.at(i, i) != 0) return "non-zero diagonal at " + std::to_string(i);
    for (Vertex j = 0; j < n; ++j) {
      if (d.at(i, j) != d.at(j, i)) return "asymmetric entry " + pair(i, j);
      if (i != j && (d.at(i, j) == 1) != g.has_edge(i, j)) {
        return "distance 1 disagrees with adjacency at " + pair(i, j);
      }
    }
  }
  for (Vertex k = 0; k < n; ++k) {
    for (Vertex i = 0; i < n; ++i) {
      if (!d.reachable(i, k)) continue;
      for (Vertex j = 0; j < n; ++j) {
        if (!d.reachable(k, j)) continue;
        if (!d.reachable(i, j)) return "reachability not transitive at " + pair(i, j);
        if (d.at(i, j) > d.at(i, k) + d.at(k, j)) return "triangle inequality fails at " + pair(i, j);
      }
    }
  }
  return std::nullopt;
}

}  // namespace resiclose
