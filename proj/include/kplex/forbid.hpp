#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kplex/graph.hpp"
#include "kplex/solution.hpp"

namespace kplex {

enum class ForbidStrategy : std::uint8_t { Dtcc, Scc, None };

// Configuration-checking state behind one interface.
//
// Dtcc: integer confChange and per-vertex threshold; v may enter S only when
//       confChange(v) >= threshold(v). Every insertion of v bumps its
//       threshold, so frequently moved vertices get forbidden harder.
// Scc:  boolean confChange; v may enter S only after a neighbor was added
//       since v's last removal.
// None: everything allowed.
//
// Neighbor quality nq(v) = (#neighbor insertions) - (#neighbor removals) is
// tracked under every strategy since the add/swap heuristics read it.
//
// The configuration arrays reset in O(1) via an epoch stamp so per-restart
// resets stay cheap on graphs with millions of vertices.
class ForbidTracker {
 public:
  ForbidTracker(ForbidStrategy strategy, int n);

  ForbidStrategy strategy() const { return strategy_; }

  // Fresh state: confChange = threshold = 1 and nq = 0 everywhere.
  void reset();
  // Resets confChange/threshold only; nq persists.
  void reset_configuration();

  // `removed` is what CandidateSolution::apply returned for `a`.
  void notify(const Action& a, std::span<const Vertex> removed, const Graph& g);

  bool allowed(Vertex v) const;

  int conf_change(Vertex v) const { return fresh(v) ? 1 : conf_change_[v]; }
  int threshold(Vertex v) const { return fresh(v) ? 1 : threshold_[v]; }
  std::int64_t nq(Vertex v) const { return nq_[v]; }
  std::span<const std::int64_t> nq() const { return nq_; }

 private:
  bool fresh(Vertex v) const { return epoch_of_[v] != epoch_; }
  void touch(Vertex v);
  void on_inserted(Vertex v, const Graph& g);
  void on_removed(Vertex v, const Graph& g);

  ForbidStrategy strategy_;
  std::vector<int> conf_change_;
  std::vector<int> threshold_;
  std::vector<std::uint32_t> epoch_of_;
  std::uint32_t epoch_ = 1;
  std::vector<std::int64_t> nq_;
};

}  // namespace kplex
