#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "kplex/graph.hpp"
#include "kplex/rng.hpp"

namespace kplex {

enum class Op : std::uint8_t { Add, Swap, Perturb };

std::string_view to_string(Op op);

struct Action {
  Op op;
  Vertex vertex;

  friend bool operator==(const Action&, const Action&) = default;
};

struct SwapMove {
  Vertex vertex;
  // The unique saturated non-neighbor when one exists, otherwise -1 (the
  // removal is then chosen at apply time among S \ N(v)).
  Vertex forced_removal;

  friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

// Partition of the boundary N(S) by which operator can insert each vertex.
struct MoveSets {
  std::vector<Vertex> add;
  std::vector<SwapMove> swap;
  std::vector<Vertex> perturb;
};

// Set of vertex ids with O(1) insert, erase and membership.
class IndexedSet {
 public:
  explicit IndexedSet(int capacity = 0) : pos_(capacity, -1) {}

  bool contains(Vertex v) const { return pos_[v] >= 0; }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::span<const Vertex> items() const { return items_; }

 private:
  std::vector<Vertex> items_;
  std::vector<int> pos_;
};

// A feasible k-plex S with incremental counters:
//   in_s_degree(v) = |N(v) ∩ S| for every vertex,
//   the saturated set C[S] = {v in S : in_s_degree(v) = |S| - k},
//   saturated_non_neighbors(v) = |C[S] \ N(v)| for v outside S,
//   the boundary N(S) of live non-members with a neighbor in S.
//
// Holds a reference to the graph; peeling that graph is only legal while the
// solution is empty.
class CandidateSolution {
 public:
  CandidateSolution(const Graph& g, int k);

  const Graph& graph() const { return *g_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(Vertex v) const { return in_s_[v] != 0; }
  std::span<const Vertex> members() const { return members_; }
  std::vector<Vertex> sorted_members() const;

  int in_s_degree(Vertex v) const { return in_s_degree_[v]; }
  bool saturated(Vertex v) const { return saturated_[v] != 0; }
  int saturated_count() const { return saturated_count_; }
  int saturated_non_neighbors(Vertex v) const {
    return saturated_count_ - saturated_adjacent_[v] - (saturated_[v] ? 1 : 0);
  }
  std::span<const Vertex> boundary() const { return boundary_.items(); }

  // While |S| < k every live non-member is addable, neighbor or not; the
  // move universe widens from N(S) to V \ S in that regime.
  bool open_growth() const { return size() < k_; }

  // Operator that can insert v (v must be a live non-member).
  Op classify(Vertex v) const;

  // Unconditional membership edits. Callers own feasibility.
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  // Applies a legal action and returns the vertices removed from S.
  // `nq` is consulted to choose the removal of an unforced swap.
  // Throws ContractViolation if the action's operator does not match
  // classify(a.vertex).
  std::vector<Vertex> apply(const Action& a, std::span<const std::int64_t> nq, Rng& rng);

 private:
  void refresh_saturation();
  void set_saturated(Vertex v, bool on);
  void mark_neighbors(Vertex v);
  bool marked(Vertex u) const { return mark_[u] == stamp_; }

  const Graph* g_;
  int k_;
  std::vector<char> in_s_;
  std::vector<Vertex> members_;
  std::vector<int> member_pos_;
  std::vector<int> in_s_degree_;
  std::vector<char> saturated_;
  std::vector<int> saturated_adjacent_;
  int saturated_count_ = 0;
  IndexedSet boundary_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
};

// Classifies every vertex of N(S) (strictly the graph boundary, as defined
// for the three operators) and resolves forced swap removals.
MoveSets classify(const CandidateSolution& sol);

bool is_kplex(std::span<const Vertex> members, const Graph& g, int k);

}  // namespace kplex
