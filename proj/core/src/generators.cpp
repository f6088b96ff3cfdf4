#include "resiclose/generators.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <set>

#include "resiclose/error.hpp"

namespace resiclose {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kFamilyNames{{
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Star, "star"},
    {Family::Complete, "complete"},
    {Family::Wheel, "wheel"},
    {Family::CompleteBipartite, "complete-bipartite"},
    {Family::RandomTree, "random-tree"},
    {Family::RandomRegular, "random-regular"},
    {Family::ErdosRenyi, "erdos-renyi"},
}};

// mt19937_64 output is fixed by the standard; the distributions are not, so
// bounded draws are done by hand to keep corpora identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

[[noreturn]] void invalid(const FamilySpec& spec, const std::string& why) {
  throw Error(ErrorKind::InvalidFamilyParams, spec.describe() + ": " + why);
}

Vertex vx(std::size_t i) { return static_cast<Vertex>(i); }

// Configuration model; rejects draws with loops or parallel edges.
std::optional<std::vector<Edge>> try_pairing(std::size_t n, std::size_t r, Rng& rng) {
  std::vector<Vertex> stubs;
  stubs.reserve(n * r);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < r; ++k) stubs.push_back(vx(v));
  }
  rng.shuffle(stubs);
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    Vertex a = std::min(stubs[i], stubs[i + 1]);
    Vertex b = std::max(stubs[i], stubs[i + 1]);
    if (a == b || !seen.insert({a, b}).second) return std::nullopt;
    edges.push_back({a, b});
  }
  return edges;
}

}  // namespace

std::string_view family_name(Family family) noexcept {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, known] : kFamilyNames) {
    if (known == name) return f;
  }
  return std::nullopt;
}

std::string FamilySpec::describe() const {
  std::string out(family_name(family));
  out += "(" + std::to_string(n);
  switch (family) {
    case Family::CompleteBipartite:
      out += "," + std::to_string(m);
      break;
    case Family::RandomRegular:
      out += "," + std::to_string(degree);
      break;
    case Family::ErdosRenyi:
      out += "," + std::to_string(p_num) + "/" + std::to_string(p_den);
      break;
    default:
      break;
  }
  if (is_random()) out += ",seed=" + std::to_string(seed);
  return out + ")";
}

Graph path_graph(std::size_t n) { return generate(FamilySpec::path(n)); }
Graph cycle_graph(std::size_t n) { return generate(FamilySpec::cycle(n)); }
Graph star_graph(std::size_t leaves) { return generate(FamilySpec::star(leaves)); }
Graph complete_graph(std::size_t n) { return generate(FamilySpec::complete(n)); }
Graph wheel_graph(std::size_t rim) { return generate(FamilySpec::wheel(rim)); }
Graph complete_bipartite_graph(std::size_t n, std::size_t m) {
  return generate(FamilySpec::complete_bipartite(n, m));
}
Graph random_tree(std::size_t n, std::uint64_t seed) {
  return generate(FamilySpec::random_tree(n, seed));
}
Graph random_regular_graph(std::size_t n, std::size_t r, std::uint64_t seed) {
  return generate(FamilySpec::random_regular(n, r, seed));
}
Graph erdos_renyi_graph(std::size_t n, std::uint64_t p_num, std::uint64_t p_den,
                        std::uint64_t seed) {
  return generate(FamilySpec::erdos_renyi(n, p_num, p_den, seed));
}

Graph generate(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  std::vector<Edge> edges;

  switch (spec.family) {
    case Family::Path:
      if (n < 1) invalid(spec, "path needs n >= 1");
      for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({vx(i), vx(i + 1)});
      return Graph::from_edges(n, edges);

    case Family::Cycle:
      if (n < 3) invalid(spec, "cycle needs n >= 3");
      for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({vx(i), vx(i + 1)});
      edges.push_back({0, vx(n - 1)});
      return Graph::from_edges(n, edges);

    case Family::Star:
      if (n < 1) invalid(spec, "star needs at least one leaf");
      for (std::size_t i = 1; i <= n; ++i) edges.push_back({0, vx(i)});
      return Graph::from_edges(n + 1, edges);

    case Family::Complete:
      if (n < 1) invalid(spec, "complete graph needs n >= 1");
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({vx(i), vx(j)});
      }
      return Graph::from_edges(n, edges);

    case Family::Wheel:
      if (n < 3) invalid(spec, "wheel needs at least 3 rim vertices");
      for (std::size_t i = 1; i <= n; ++i) edges.push_back({0, vx(i)});
      for (std::size_t i = 1; i < n; ++i) edges.push_back({vx(i), vx(i + 1)});
      edges.push_back({1, vx(n)});
      return Graph::from_edges(n + 1, edges);

    case Family::CompleteBipartite:
      if (n < 1 || spec.m < 1) invalid(spec, "both parts need at least one vertex");
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < spec.m; ++j) edges.push_back({vx(i), vx(n + j)});
      }
      return Graph::from_edges(n + spec.m, edges);

    case Family::RandomTree: {
      if (n < 1) invalid(spec, "tree needs n >= 1");
      if (n <= 2) return path_graph(n);
      // Pruefer decoding: repeatedly attach the smallest current leaf.
      Rng rng(spec.seed);
      std::vector<Vertex> code(n - 2);
      for (auto& c : code) c = vx(rng.below(n));
      std::vector<std::size_t> remaining(n, 1);
      for (Vertex c : code) ++remaining[c];
      std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
      for (std::size_t v = 0; v < n; ++v) {
        if (remaining[v] == 1) leaves.push(vx(v));
      }
      for (Vertex c : code) {
        Vertex leaf = leaves.top();
        leaves.pop();
        edges.push_back({std::min(leaf, c), std::max(leaf, c)});
        if (--remaining[c] == 1) leaves.push(c);
      }
      Vertex u = leaves.top();
      leaves.pop();
      Vertex w = leaves.top();
      edges.push_back({std::min(u, w), std::max(u, w)});
      return Graph::from_edges(n, edges);
    }

    case Family::RandomRegular: {
      const std::size_t r = spec.degree;
      if (n < 1) invalid(spec, "regular graph needs n >= 1");
      if (r >= n) invalid(spec, "degree must be below n");
      if ((n * r) % 2 != 0) invalid(spec, "n * r must be even");
      // Dense requests are drawn as the complement of a sparse one; pairing
      // rejection rates explode as r approaches n.
      const bool complement = 2 * r > n - 1;
      const std::size_t draw = complement ? n - 1 - r : r;
      Rng rng(spec.seed);
      constexpr int kMaxAttempts = 100000;
      std::optional<std::vector<Edge>> picked;
      for (int attempt = 0; attempt < kMaxAttempts && !picked; ++attempt) {
        picked = try_pairing(n, draw, rng);
      }
      if (!picked) invalid(spec, "pairing model did not produce a simple graph");
      if (!complement) return Graph::from_edges(n, *picked);
      std::set<Edge> drawn(picked->begin(), picked->end());
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!drawn.contains({vx(i), vx(j)})) edges.push_back({vx(i), vx(j)});
        }
      }
      return Graph::from_edges(n, edges);
    }

    case Family::ErdosRenyi: {
      if (n < 1) invalid(spec, "graph needs n >= 1");
      if (spec.p_den == 0 || spec.p_num > spec.p_den) invalid(spec, "p must lie in [0, 1]");
      Rng rng(spec.seed);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (rng.below(spec.p_den) < spec.p_num) edges.push_back({vx(i), vx(j)});
        }
      }
      return Graph::from_edges(n, edges);
    }
  }
  invalid(spec, "unknown family");
}

Graph connected_erdos_renyi_graph(std::size_t n, std::uint64_t p_num, std::uint64_t p_den,
                                  std::uint64_t seed, std::uint64_t* used_seed) {
  constexpr std::uint64_t kMaxDraws = 10000;
  for (std::uint64_t k = 0; k < kMaxDraws; ++k) {
    Graph g = erdos_renyi_graph(n, p_num, p_den, seed + k);
    if (is_connected(g)) {
      if (used_seed) *used_seed = seed + k;
      return g;
    }
  }
  throw Error(ErrorKind::InvalidFamilyParams,
              "no connected draw of erdos-renyi(" + std::to_string(n) + ") within " +
                  std::to_string(kMaxDraws) + " seeds");
}

}  // namespace resiclose
