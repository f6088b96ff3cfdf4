#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "graphs.hpp"
#include "resiclose/edge_list.hpp"
#include "resiclose/error.hpp"
#include "resiclose/generators.hpp"

using namespace resiclose;

namespace {

// Returns (kind, line) of the ParseError/Error raised by reading text.
std::pair<ErrorKind, std::size_t> failure_of(std::string_view text) {
  try {
    read_edge_list(text);
  } catch (const ParseError& e) {
    return {e.kind(), e.line()};
  } catch (const Error& e) {
    return {e.kind(), 0};
  }
  FAIL("expected a parse failure for: " << text);
  return {ErrorKind::ParseError, 0};
}

}  // namespace

TEST_CASE("read_edge_list: documented examples") {
  CHECK(read_edge_list("3 2\n0 1\n1 2\n") == generate(FamilySpec::path(3)));
  CHECK(failure_of("0 0\n").first == ErrorKind::SelfLoop);
  const auto [kind, line] = failure_of("2 1\n0 1\n0 1\n");
  CHECK(kind == ErrorKind::DuplicateEdge);
  CHECK(line == 3);
}

TEST_CASE("write_edge_list: documented examples") {
  CHECK(write_edge_list(generate(FamilySpec::path(2))) == "2 1\n0 1\n");
  CHECK(write_edge_list(Graph(1)) == "1 0\n");
  CHECK(write_edge_list(generate(FamilySpec::cycle(3))) == "3 3\n0 1\n0 2\n1 2\n");
}

TEST_CASE("comments, blank lines, CRLF and tabs are accepted") {
  const std::string text = "# a path\r\n\r\n3 2\r\n0\t1\r\n  # trailing note\n1 2";
  CHECK(read_edge_list(text) == generate(FamilySpec::path(3)));
}

TEST_CASE("header detection") {
  // No header: n is one past the largest index.
  const Graph g = read_edge_list("0 1\n1 2\n2 3\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  // A declared count larger than the indices keeps isolated vertices.
  const Graph h = read_edge_list("6 1\n0 1\n");
  CHECK(h.vertex_count() == 6);
  CHECK(h.edge_count() == 1);
  // Header with zero edges.
  CHECK(read_edge_list("4 0\n").vertex_count() == 4);
  // Empty input is the empty graph.
  CHECK(read_edge_list("# nothing\n").vertex_count() == 0);
}

TEST_CASE("malformed input reports the offending line") {
  CHECK(failure_of("3 2\n0 1\nx 2\n") == std::pair{ErrorKind::ParseError, std::size_t{3}});
  CHECK(failure_of("0 1 2\n").second == 1);
  CHECK(failure_of("0 -1\n").first == ErrorKind::ParseError);
  CHECK(failure_of("0\n").first == ErrorKind::ParseError);
  CHECK(failure_of("2 1\n0 5\n").first == ErrorKind::IndexOutOfRange);
}

TEST_CASE("round trip over generated graphs") {
  resiclose::testing::GraphSampler sampler(7);
  for (int i = 0; i < 200; ++i) {
    const Graph g = sampler.next(12);
    CHECK(read_edge_list(write_edge_list(g)) == g);
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph t = generate(FamilySpec::random_tree(9, seed));
    std::stringstream buffer;
    write_edge_list(t, buffer);
    CHECK(read_edge_list(buffer) == t);
  }
}

TEST_CASE("files round trip and missing files raise") {
  const auto path = std::filesystem::temp_directory_path() / "resiclose_unit_edge_list.el";
  const Graph w = generate(FamilySpec::wheel(6));
  save_edge_list(w, path);
  CHECK(load_edge_list(path) == w);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_edge_list(path), Error);
}
