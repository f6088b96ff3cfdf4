#include "resiclose/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "resiclose/error.hpp"

namespace resiclose {
namespace {

struct DataLine {
  std::size_t line_no;
  std::uint64_t first;
  std::uint64_t second;
};

std::uint64_t parse_index(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(ErrorKind::ParseError, line_no,
                     "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<DataLine> tokenize(std::string_view text) {
  std::vector<DataLine> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError(ErrorKind::ParseError, line_no,
                       "expected two integers, found " + std::to_string(tokens.size()) +
                           " fields");
    }
    lines.push_back({line_no, parse_index(tokens[0], line_no), parse_index(tokens[1], line_no)});
  }
  return lines;
}

bool looks_like_header(const std::vector<DataLine>& lines) {
  if (lines.empty()) return false;
  const DataLine& head = lines.front();
  return head.first >= 1 && head.second == lines.size() - 1;
}

}  // namespace

Graph read_edge_list(std::string_view text) {
  const std::vector<DataLine> lines = tokenize(text);
  const bool header = looks_like_header(lines);
  const std::size_t first_edge = header ? 1 : 0;

  constexpr std::uint64_t kMaxIndex = std::numeric_limits<Vertex>::max() - 1;
  std::uint64_t n = header ? lines.front().first : 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = first_edge; i < lines.size(); ++i) {
    const DataLine& l = lines[i];
    if (l.first > kMaxIndex || l.second > kMaxIndex) {
      throw ParseError(ErrorKind::IndexOutOfRange, l.line_no, "vertex index too large");
    }
    if (l.first == l.second) {
      throw ParseError(ErrorKind::SelfLoop, l.line_no,
                       "self-loop at vertex " + std::to_string(l.first));
    }
    Edge e{static_cast<Vertex>(std::min(l.first, l.second)),
           static_cast<Vertex>(std::max(l.first, l.second))};
    if (!seen.insert(e).second) {
      throw ParseError(ErrorKind::DuplicateEdge, l.line_no,
                       "edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                           " listed twice");
    }
    if (header && e.b >= n) {
      throw ParseError(ErrorKind::IndexOutOfRange, l.line_no,
                       "vertex " + std::to_string(e.b) + " outside declared count " +
                           std::to_string(n));
    }
    edges.push_back(e);
    if (!header) n = std::max<std::uint64_t>(n, e.b + 1);
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return read_edge_list(std::string_view(text));
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(ErrorKind::ParseError, 0, "cannot open " + path.string());
  }
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.a << ' ' << e.b << '\n';
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(ErrorKind::ParseError, 0, "cannot write " + path.string());
  write_edge_list(g, out);
}

}  // namespace resiclose
