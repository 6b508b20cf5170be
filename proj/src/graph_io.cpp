#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "kplex/errors.hpp"
#include "kplex/graph.hpp"

namespace kplex {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

std::int64_t to_int(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(where(line_no) + "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

int to_vertex_count(std::string_view token, std::size_t line_no) {
  const auto n = to_int(token, line_no);
  if (n < 0 || n > std::numeric_limits<int>::max()) {
    throw RangeError(where(line_no) + "vertex count out of range");
  }
  return static_cast<int>(n);
}

Vertex to_vertex(std::string_view token, int n, std::size_t line_no) {
  const auto id = to_int(token, line_no);
  if (id < 1 || id > n) {
    throw RangeError(where(line_no) + "vertex " + std::to_string(id) + " outside [1, " +
                     std::to_string(n) + "]");
  }
  return static_cast<Vertex>(id - 1);
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
  int n = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const auto tag = tokens[0];
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw FormatError(where(line_no) + "duplicate problem line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw FormatError(where(line_no) + "expected 'p edge <n> <m>'");
      }
      n = to_vertex_count(tokens[2], line_no);
      const auto m = to_int(tokens[3], line_no);
      if (m > 0) edges.reserve(static_cast<std::size_t>(m));
    } else if (tag == "e") {
      if (n < 0) throw FormatError(where(line_no) + "edge before problem line");
      if (tokens.size() != 3) throw FormatError(where(line_no) + "expected 'e <u> <v>'");
      edges.emplace_back(to_vertex(tokens[1], n, line_no), to_vertex(tokens[2], n, line_no));
    } else {
      throw FormatError(where(line_no) + "unexpected line tag '" + std::string(tag) + "'");
    }
  }
  if (n < 0) throw FormatError("missing problem line");
  return Graph(n, edges);
}

Graph parse_edge_list(std::istream& in) {
  int n = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].starts_with('#') || tokens[0].starts_with('%')) continue;
    if (tokens.size() != 2) throw FormatError(where(line_no) + "expected two integers");
    if (n < 0) {
      n = to_vertex_count(tokens[0], line_no);
      const auto m = to_int(tokens[1], line_no);
      if (m > 0) edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    edges.emplace_back(to_vertex(tokens[0], n, line_no), to_vertex(tokens[1], n, line_no));
  }
  if (n < 0) throw FormatError("missing '<n> <m>' header");
  return Graph(n, edges);
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphInputError("cannot open " + path.string());
  const auto ext = path.extension();
  if (ext == ".clq" || ext == ".dimacs") return parse_dimacs(in);
  return parse_edge_list(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace kplex
