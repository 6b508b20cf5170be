#include "kplex/bandit.hpp"

#include <algorithm>

#include "kplex/errors.hpp"

namespace kplex {

BanditState::BanditState(int n, double alpha, double epsilon)
    : alpha_(alpha), epsilon_(epsilon), q_(n, 0.0) {}

std::vector<Vertex> BanditState::reward_episode() {
  std::vector<Vertex> rewarded;
  for (const Action& a : walk_) {
    if (a.op == Op::Perturb) rewarded.push_back(a.vertex);
  }
  if (!rewarded.empty()) {
    const double reward = 1.0 / static_cast<double>(rewarded.size());
    for (Vertex v : rewarded) q_[v] = (1.0 - alpha_) * q_[v] + alpha_ * reward;
  }
  walk_.clear();
  return rewarded;
}

Vertex BanditState::select_perturb(std::span<const Vertex> candidates, Rng& rng) const {
  if (candidates.empty()) throw ContractViolation("select_perturb needs candidates");
  if (uniform_unit(rng) < epsilon_) return candidates[uniform_index(rng, candidates.size())];
  Vertex pick = candidates.front();
  double best = q_[pick];
  TieBreaker ties;
  ties.offer(rng);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const Vertex v = candidates[i];
    if (q_[v] > best) {
      best = q_[v];
      pick = v;
      ties.reset();
      ties.offer(rng);
    } else if (q_[v] == best && ties.offer(rng)) {
      pick = v;
    }
  }
  return pick;
}

}  // namespace kplex
