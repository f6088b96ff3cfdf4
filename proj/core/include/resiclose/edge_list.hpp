#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "resiclose/graph.hpp"

namespace resiclose {

// Edge-list text format:
//   optional header "n m", then one "a b" line per edge (0-based indices).
//   Lines starting with '#' and blank lines are ignored; LF or CRLF accepted.
//
// The first data line is taken as the header when it reads "n m" with n >= 1
// and exactly m data lines follow; edge indices must then be below n.
// Otherwise all lines are edges and n = 1 + the largest index.
//
// Throws ParseError with kind ParseError, DuplicateEdge, SelfLoop or
// IndexOutOfRange.
Graph read_edge_list(std::string_view text);
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& path);

// Header "n m" and then the edges "a b" (a < b) in lexicographic order, LF
// line endings. Vertex provenance tags are not part of the format.
std::string write_edge_list(const Graph& g);
void write_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

}  // namespace resiclose
