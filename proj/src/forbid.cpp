#include "kplex/forbid.hpp"

#include <algorithm>

namespace kplex {

ForbidTracker::ForbidTracker(ForbidStrategy strategy, int n)
    : strategy_(strategy),
      conf_change_(n, 1),
      threshold_(n, 1),
      epoch_of_(n, 0),
      nq_(n, 0) {}

void ForbidTracker::reset() {
  reset_configuration();
  std::fill(nq_.begin(), nq_.end(), 0);
}

void ForbidTracker::reset_configuration() {
  if (++epoch_ == 0) {
    std::fill(epoch_of_.begin(), epoch_of_.end(), 0);
    epoch_ = 1;
  }
}

void ForbidTracker::touch(Vertex v) {
  if (fresh(v)) {
    epoch_of_[v] = epoch_;
    conf_change_[v] = 1;
    threshold_[v] = 1;
  }
}

void ForbidTracker::on_inserted(Vertex v, const Graph& g) {
  touch(v);
  switch (strategy_) {
    case ForbidStrategy::Dtcc:
      conf_change_[v] = 0;
      ++threshold_[v];
      for (Vertex u : g.neighbors(v)) {
        touch(u);
        ++conf_change_[u];
      }
      break;
    case ForbidStrategy::Scc:
      for (Vertex u : g.neighbors(v)) {
        touch(u);
        conf_change_[u] = 1;
      }
      break;
    case ForbidStrategy::None:
      break;
  }
  for (Vertex u : g.neighbors(v)) ++nq_[u];
}

void ForbidTracker::on_removed(Vertex v, const Graph& g) {
  touch(v);
  conf_change_[v] = 0;
  for (Vertex u : g.neighbors(v)) --nq_[u];
}

void ForbidTracker::notify(const Action& a, std::span<const Vertex> removed, const Graph& g) {
  // Removed vertices are never adjacent to the inserted one, so the order of
  // these updates does not matter.
  on_inserted(a.vertex, g);
  for (Vertex w : removed) on_removed(w, g);
}

bool ForbidTracker::allowed(Vertex v) const {
  switch (strategy_) {
    case ForbidStrategy::Dtcc:
      return conf_change(v) >= threshold(v);
    case ForbidStrategy::Scc:
      return conf_change(v) == 1;
    case ForbidStrategy::None:
      return true;
  }
  return true;
}

}  // namespace kplex
