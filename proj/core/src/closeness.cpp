#include "resiclose/closeness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "resiclose/error.hpp"
#include "resiclose/transform.hpp"

namespace resiclose {
namespace {

void count_row(std::span<const Hops> row, Vertex self, std::vector<std::size_t>& counts) {
  for (Vertex j = 0; j < row.size(); ++j) {
    const Hops h = row[j];
    if (j == self || h == kUnreachable) continue;
    if (h >= counts.size()) counts.resize(std::size_t{h} + 1, 0);
    ++counts[h];
  }
}

double weigh(const std::vector<std::size_t>& counts) {
  double sum = 0.0;
  for (std::size_t h = counts.size(); h-- > 1;) {
    if (counts[h] != 0) sum += std::ldexp(static_cast<double>(counts[h]), -static_cast<int>(h));
  }
  return sum;
}

}  // namespace

ClosenessProfile closeness_profile(const DistanceMatrix& d) {
  const auto n = static_cast<Vertex>(d.size());
  ClosenessProfile profile;
  profile.per_vertex.resize(n, 0.0);
  std::vector<std::size_t> all;
  std::vector<std::size_t> mine;
  for (Vertex i = 0; i < n; ++i) {
    mine.assign(mine.size(), 0);
    count_row(d.row(i), i, mine);
    profile.per_vertex[i] = weigh(mine);
    if (all.size() < mine.size()) all.resize(mine.size(), 0);
    for (std::size_t h = 0; h < mine.size(); ++h) all[h] += mine[h];
  }
  profile.total = weigh(all);
  return profile;
}

ClosenessProfile closeness_profile(const Graph& g) { return closeness_profile(all_pairs_bfs(g)); }

double total_closeness(const DistanceMatrix& d) {
  std::vector<std::size_t> all;
  for (Vertex i = 0; i < d.size(); ++i) count_row(d.row(i), i, all);
  return weigh(all);
}

double total_closeness(const Graph& g) { return total_closeness(all_pairs_bfs(g)); }

double closeness_after_removal(const Graph& g, Vertex k, RemovalMode mode) {
  switch (mode) {
    case RemovalMode::Delete:
      return total_closeness(all_pairs_bfs(remove_vertex(g, k)));
    case RemovalMode::Isolate:
      return total_closeness(floyd_warshall(isolate_vertex(g, k)));
  }
  return 0.0;
}

RemovalProfile residual_closeness(const Graph& g, const ResidualOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n < 2) {
    throw Error(ErrorKind::GraphTooSmall,
                "residual closeness needs at least 2 vertices, got " + std::to_string(n));
  }
  RemovalProfile profile;
  profile.ck.resize(n);
  parallel_for(n, options.execution, [&](std::size_t k) {
    profile.ck[k] = closeness_after_removal(g, static_cast<Vertex>(k), options.mode);
  });
  profile.r_value = *std::min_element(profile.ck.begin(), profile.ck.end());
  for (std::size_t k = 0; k < n; ++k) {
    if (profile.ck[k] == profile.r_value) profile.argmin.push_back(static_cast<Vertex>(k));
  }
  return profile;
}

}  // namespace resiclose
