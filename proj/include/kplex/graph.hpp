#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace kplex {

using Vertex = int;

// Undirected simple graph in CSR form over vertex ids 0..n-1.
//
// Peeling marks vertices dead and drops them from every adjacency list, but
// never renumbers: ids stay valid for all per-vertex arrays sized to the
// original n. After construction the only mutation is peel().
class Graph {
 public:
  Graph() = default;

  // Edges may contain duplicates and self-loops; both are dropped.
  // Endpoints must lie in [0, n).
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }
  int live_count() const { return static_cast<int>(live_.size()); }

  bool alive(Vertex v) const { return alive_[v] != 0; }
  int degree(Vertex v) const { return static_cast<int>(end_[v] - begin_[v]); }

  // Sorted live neighbors of v (empty for dead v).
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + begin_[v], adjacency_.data() + end_[v]};
  }

  bool adjacent(Vertex u, Vertex v) const;

  // Live vertex ids in increasing order.
  std::span<const Vertex> live_vertices() const { return live_; }

  // Deletes, to a fixed point, every live vertex whose live degree is below
  // lb - k + 1. Any k-plex with more than lb vertices survives. O(n + m).
  // Returns the number of vertices removed.
  int peel(int k, int lb);

  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  void rebuild_live();

  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> begin_;
  std::vector<std::int64_t> end_;
  std::vector<Vertex> adjacency_;
  std::vector<char> alive_;
  std::vector<Vertex> live_;
};

// Value-returning peel; leaves g untouched.
Graph peel(Graph g, int k, int lb);

// DIMACS clique format: `c` comments, one `p edge|col <n> <m>` line, then
// `e <u> <v>` lines with 1-based ids.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(std::string_view text);

// Plain edge list: first line `<n> <m>`, then `<u> <v>` per line, 1-based.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// Chooses the parser by extension: .clq and .dimacs are DIMACS, anything
// else is an edge list. Throws GraphInputError if the file can't be read.
Graph load_graph(const std::filesystem::path& path);

// Live edges only, as DIMACS.
void write_dimacs(std::ostream& out, const Graph& g);

}  // namespace kplex
