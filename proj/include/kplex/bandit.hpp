#pragma once

#include <span>
#include <vector>

#include "kplex/rng.hpp"
#include "kplex/solution.hpp"

namespace kplex {

// Bandit-learned perturbation. Every vertex is an arm with value q(v).
// Actions since the last break-through point form the current walk; when a
// break-through happens each Perturb object in the walk receives reward
// 1 / (number of Perturb actions in the walk), blended in with stepsize
// alpha: q <- (1 - alpha) q + alpha r.
class BanditState {
 public:
  BanditState(int n, double alpha, double epsilon);

  double alpha() const { return alpha_; }
  double epsilon() const { return epsilon_; }
  double q(Vertex v) const { return q_[v]; }
  std::span<const double> q() const { return q_; }
  void set_q(Vertex v, double value) { q_[v] = value; }
  std::span<const Action> walk() const { return walk_; }

  void record(const Action& a) { walk_.push_back(a); }

  // Rewards the walk's Perturb objects (one update per occurrence), clears
  // the walk, and returns the rewarded vertices in walk order.
  std::vector<Vertex> reward_episode();

  // Drops the open episode without rewarding it.
  void discard_walk() { walk_.clear(); }

  // Epsilon-greedy: uniform pick with probability epsilon, otherwise an
  // argmax of q with ties broken uniformly. Throws ContractViolation on an
  // empty candidate list.
  Vertex select_perturb(std::span<const Vertex> candidates, Rng& rng) const;

 private:
  double alpha_;
  double epsilon_;
  std::vector<double> q_;
  std::vector<Action> walk_;
};

}  // namespace kplex
