#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "resiclose/graph.hpp"

namespace resiclose {

enum class Family {
  Path,
  Cycle,
  Star,
  Complete,
  Wheel,
  CompleteBipartite,
  RandomTree,
  RandomRegular,
  ErdosRenyi,
};

std::string_view family_name(Family family) noexcept;
std::optional<Family> parse_family(std::string_view name);

// Parameters for one member of a graph family. Only the fields the family
// uses are read:
//   Path, Cycle, Complete, RandomTree  n = vertex count
//   Star, Wheel                        n = leaves / rim vertices (n + 1 vertices)
//   CompleteBipartite                  n, m = part sizes
//   RandomRegular                      n, degree
//   ErdosRenyi                         n, edge probability p_num / p_den
struct FamilySpec {
  Family family = Family::Path;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t degree = 0;
  std::uint64_t p_num = 0;
  std::uint64_t p_den = 1;
  std::uint64_t seed = 0;

  static FamilySpec path(std::size_t n) { return {Family::Path, n}; }
  static FamilySpec cycle(std::size_t n) { return {Family::Cycle, n}; }
  static FamilySpec star(std::size_t leaves) { return {Family::Star, leaves}; }
  static FamilySpec complete(std::size_t n) { return {Family::Complete, n}; }
  static FamilySpec wheel(std::size_t rim) { return {Family::Wheel, rim}; }
  static FamilySpec complete_bipartite(std::size_t n, std::size_t m) {
    return {Family::CompleteBipartite, n, m};
  }
  static FamilySpec random_tree(std::size_t n, std::uint64_t seed) {
    return {Family::RandomTree, n, 0, 0, 0, 1, seed};
  }
  static FamilySpec random_regular(std::size_t n, std::size_t r, std::uint64_t seed) {
    return {Family::RandomRegular, n, 0, r, 0, 1, seed};
  }
  static FamilySpec erdos_renyi(std::size_t n, std::uint64_t p_num, std::uint64_t p_den,
                                std::uint64_t seed) {
    return {Family::ErdosRenyi, n, 0, 0, p_num, p_den, seed};
  }

  bool is_random() const noexcept {
    return family == Family::RandomTree || family == Family::RandomRegular ||
           family == Family::ErdosRenyi;
  }

  // e.g. "wheel(5)", "complete-bipartite(2,3)", "erdos-renyi(8,1/2,seed=7)"
  std::string describe() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Canonical labelled member of the family. Random families are a pure
// function of the seed. Throws Error{InvalidFamilyParams}.
Graph generate(const FamilySpec& spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_graph(std::size_t n);
Graph wheel_graph(std::size_t rim);
Graph complete_bipartite_graph(std::size_t n, std::size_t m);
Graph random_tree(std::size_t n, std::uint64_t seed);
Graph random_regular_graph(std::size_t n, std::size_t r, std::uint64_t seed);
Graph erdos_renyi_graph(std::size_t n, std::uint64_t p_num, std::uint64_t p_den,
                        std::uint64_t seed);

// Draws ErdosRenyi graphs with seeds seed, seed+1, ... until one is connected.
Graph connected_erdos_renyi_graph(std::size_t n, std::uint64_t p_num, std::uint64_t p_den,
                                  std::uint64_t seed, std::uint64_t* used_seed = nullptr);

}  // namespace resiclose
