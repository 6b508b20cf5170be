#include "kplex/oracle.hpp"

#include <bit>
#include <string>

#include "kplex/errors.hpp"

namespace kplex {
namespace {

class Enumerator {
 public:
  Enumerator(const Graph& g, int k) : k_(k) {
    for (Vertex v : g.live_vertices()) order_.push_back(v);
    adj_.assign(g.vertex_count(), 0);
    for (Vertex v : order_) {
      for (Vertex u : g.neighbors(v)) adj_[v] |= 1u << u;
    }
  }

  OracleResult run() {
    visit(0, 0, 0);
    OracleResult r;
    r.opt_size = best_;
    r.count = count_;
    for (Vertex v = 0; v < static_cast<Vertex>(adj_.size()); ++v) {
      if (witness_ >> v & 1u) r.witness.push_back(v);
    }
    return r;
  }

 private:
  bool feasible(std::uint32_t set, int size) const {
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (std::popcount(adj_[w] & set) < size - k_) return false;
    }
    return true;
  }

  void visit(std::uint32_t set, int size, std::size_t next) {
    if (size > best_) {
      best_ = size;
      witness_ = set;
      count_ = 1;
    } else if (size == best_) {
      ++count_;
    }
    if (size + static_cast<int>(order_.size() - next) < best_) return;
    for (std::size_t i = next; i < order_.size(); ++i) {
      const std::uint32_t grown = set | 1u << order_[i];
      if (feasible(grown, size + 1)) visit(grown, size + 1, i + 1);
    }
  }

  int k_;
  std::vector<Vertex> order_;
  std::vector<std::uint32_t> adj_;
  int best_ = -1;
  std::uint32_t witness_ = 0;
  std::int64_t count_ = 0;
};

}  // namespace

OracleResult exact_max_kplex(const Graph& g, int k) {
  if (g.vertex_count() > kOracleMaxVertices) {
    throw SizeError("exact solver is limited to " + std::to_string(kOracleMaxVertices) +
                    " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  if (k < 1) throw ContractViolation("k must be positive");
  return Enumerator(g, k).run();
}

}  // namespace kplex
