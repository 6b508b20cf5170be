#include "kplex/solution.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

#include "kplex/errors.hpp"

namespace kplex {

std::string_view to_string(Op op) {
  switch (op) {
    case Op::Add:
      return "add";
    case Op::Swap:
      return "swap";
    case Op::Perturb:
      return "perturb";
  }
  return "?";
}

void IndexedSet::insert(Vertex v) {
  if (pos_[v] >= 0) return;
  pos_[v] = static_cast<int>(items_.size());
  items_.push_back(v);
}

void IndexedSet::erase(Vertex v) {
  const int p = pos_[v];
  if (p < 0) return;
  const Vertex last = items_.back();
  items_[p] = last;
  pos_[last] = p;
  items_.pop_back();
  pos_[v] = -1;
}

void IndexedSet::clear() {
  for (Vertex v : items_) pos_[v] = -1;
  items_.clear();
}

CandidateSolution::CandidateSolution(const Graph& g, int k)
    : g_(&g),
      k_(k),
      in_s_(g.vertex_count(), 0),
      member_pos_(g.vertex_count(), -1),
      in_s_degree_(g.vertex_count(), 0),
      saturated_(g.vertex_count(), 0),
      saturated_adjacent_(g.vertex_count(), 0),
      boundary_(g.vertex_count()),
      mark_(g.vertex_count(), 0) {
  if (k < 1) throw ContractViolation("k must be positive");
}

std::vector<Vertex> CandidateSolution::sorted_members() const {
  std::vector<Vertex> out(members_.begin(), members_.end());
  std::sort(out.begin(), out.end());
  return out;
}

Op CandidateSolution::classify(Vertex v) const {
  const int threshold = size() - k_;
  const int degree = in_s_degree_[v];
  const int blocking = saturated_non_neighbors(v);
  if (degree > threshold && blocking == 0) return Op::Add;
  if ((degree >= threshold && blocking == 1) || (degree == threshold && blocking == 0)) {
    return Op::Swap;
  }
  return Op::Perturb;
}

void CandidateSolution::set_saturated(Vertex v, bool on) {
  if ((saturated_[v] != 0) == on) return;
  saturated_[v] = on ? 1 : 0;
  const int delta = on ? 1 : -1;
  saturated_count_ += delta;
  for (Vertex u : g_->neighbors(v)) saturated_adjacent_[u] += delta;
}

void CandidateSolution::refresh_saturation() {
  const int threshold = size() - k_;
  for (Vertex v : members_) set_saturated(v, in_s_degree_[v] == threshold);
}

void CandidateSolution::insert(Vertex v) {
  if (in_s_[v]) return;
  in_s_[v] = 1;
  member_pos_[v] = static_cast<int>(members_.size());
  members_.push_back(v);
  boundary_.erase(v);
  for (Vertex u : g_->neighbors(v)) {
    if (++in_s_degree_[u] == 1 && !in_s_[u]) boundary_.insert(u);
  }
  refresh_saturation();
}

void CandidateSolution::erase(Vertex v) {
  if (!in_s_[v]) return;
  set_saturated(v, false);
  const int p = member_pos_[v];
  const Vertex last = members_.back();
  members_[p] = last;
  member_pos_[last] = p;
  members_.pop_back();
  member_pos_[v] = -1;
  in_s_[v] = 0;
  for (Vertex u : g_->neighbors(v)) {
    if (--in_s_degree_[u] == 0 && !in_s_[u]) boundary_.erase(u);
  }
  if (in_s_degree_[v] > 0) boundary_.insert(v);
  refresh_saturation();
}

void CandidateSolution::clear() {
  while (!members_.empty()) erase(members_.back());
}

void CandidateSolution::mark_neighbors(Vertex v) {
  if (++stamp_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    stamp_ = 1;
  }
  for (Vertex u : g_->neighbors(v)) mark_[u] = stamp_;
}

std::vector<Vertex> CandidateSolution::apply(const Action& a, std::span<const std::int64_t> nq,
                                             Rng& rng) {
  const Vertex v = a.vertex;
  if (v < 0 || v >= g_->vertex_count() || in_s_[v] || !g_->alive(v)) {
    throw ContractViolation("action object must be a live non-member");
  }
  if (in_s_degree_[v] == 0 && !open_growth()) {
    throw ContractViolation("action object is not in N(S)");
  }
  if (classify(v) != a.op) {
    throw ContractViolation(std::string(to_string(a.op)) + " is not legal for vertex " +
                            std::to_string(v));
  }

  std::vector<Vertex> removed;
  switch (a.op) {
    case Op::Add:
      break;
    case Op::Swap: {
      mark_neighbors(v);
      if (saturated_non_neighbors(v) == 1) {
        for (Vertex u : members_) {
          if (saturated_[u] && !marked(u)) {
            removed.push_back(u);
            break;
          }
        }
      } else {
        // v itself would be saturated-short: drop the weakest non-neighbor.
        Vertex pick = -1;
        auto best = std::numeric_limits<std::int64_t>::max();
        TieBreaker ties;
        for (Vertex u : members_) {
          if (marked(u)) continue;
          if (nq[u] < best) {
            best = nq[u];
            pick = u;
            ties.reset();
            ties.offer(rng);
          } else if (nq[u] == best && ties.offer(rng)) {
            pick = u;
          }
        }
        removed.push_back(pick);
      }
      break;
    }
    case Op::Perturb: {
      mark_neighbors(v);
      for (Vertex u : members_) {
        if (saturated_[u] && !marked(u)) removed.push_back(u);
      }
      for (Vertex u : removed) erase(u);
      // Repair: drop random non-neighbors until v fits.
      std::vector<Vertex> pool;
      for (Vertex u : members_) {
        if (!marked(u)) pool.push_back(u);
      }
      while (in_s_degree_[v] < size() + 1 - k_) {
        assert(!pool.empty());
        const auto i = uniform_index(rng, pool.size());
        const Vertex u = pool[i];
        pool[i] = pool.back();
        pool.pop_back();
        erase(u);
        removed.push_back(u);
      }
      insert(v);
      assert(is_kplex(members_, *g_, k_));
      return removed;
    }
  }
  for (Vertex u : removed) erase(u);
  insert(v);
  assert(is_kplex(members_, *g_, k_));
  return removed;
}

MoveSets classify(const CandidateSolution& sol) {
  MoveSets sets;
  const Graph& g = sol.graph();
  for (Vertex v : sol.boundary()) {
    switch (sol.classify(v)) {
      case Op::Add:
        sets.add.push_back(v);
        break;
      case Op::Swap: {
        Vertex forced = -1;
        if (sol.saturated_non_neighbors(v) == 1) {
          for (Vertex u : sol.members()) {
            if (sol.saturated(u) && !g.adjacent(u, v)) forced = u;
          }
        }
        sets.swap.push_back({v, forced});
        break;
      }
      case Op::Perturb:
        sets.perturb.push_back(v);
        break;
    }
  }
  std::sort(sets.add.begin(), sets.add.end());
  std::sort(sets.swap.begin(), sets.swap.end(),
            [](const SwapMove& a, const SwapMove& b) { return a.vertex < b.vertex; });
  std::sort(sets.perturb.begin(), sets.perturb.end());
  return sets;
}

bool is_kplex(std::span<const Vertex> members, const Graph& g, int k) {
  const auto size = static_cast<int>(members.size());
  if (size <= k) return true;
  for (Vertex v : members) {
    int inside = 0;
    for (Vertex u : members) {
      if (u != v && g.adjacent(u, v)) ++inside;
    }
    if (inside < size - k) return false;
  }
  return true;
}

}  // namespace kplex
