#pragma once

#include <cstdint>
#include <vector>

#include "kplex/graph.hpp"

namespace kplex {

inline constexpr int kOracleMaxVertices = 24;

struct OracleResult {
  int opt_size = 0;
  std::vector<Vertex> witness;  // sorted
  std::int64_t count = 0;       // number of maximum k-plexes
};

// Exhaustive maximum k-plex over the live vertices. k-plexes are hereditary,
// so the DFS only extends feasible sets (in increasing vertex order).
// Throws SizeError when the graph has more than kOracleMaxVertices vertices.
OracleResult exact_max_kplex(const Graph& g, int k);

}  // namespace kplex
