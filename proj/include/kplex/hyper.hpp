#pragma once

#include <array>

#include "kplex/graph.hpp"
#include "kplex/rng.hpp"
#include "kplex/search.hpp"

namespace kplex {

inline constexpr std::array<AddSwapHeuristic, 3> kHeuristics{
    AddSwapHeuristic::MaxNQ, AddSwapHeuristic::MaxQ, AddSwapHeuristic::Random};

// Simulated-annealing heuristic selector. Heuristic i is drawn with
// probability exp(best_i / T) / sum_j exp(best_j / T), where best_i is the
// largest S_lbest found under heuristic i. T is multiplied by gamma after
// every restart while it is above the floor.
class HyperState {
 public:
  explicit HyperState(double temperature = 1000.0, double gamma = 0.99, double floor = 0.01);

  double temperature() const { return temperature_; }
  double gamma() const { return gamma_; }
  double floor() const { return floor_; }
  const std::array<int, 3>& best() const { return best_; }
  int best(AddSwapHeuristic h) const { return best_[index(h)]; }

  // Boltzmann probabilities in kHeuristics order, computed with the max
  // subtracted so large best/T ratios do not overflow.
  std::array<double, 3> probabilities() const;

  AddSwapHeuristic select(Rng& rng) const;
  void observe(AddSwapHeuristic h, int lbest_size);
  void cool();

  static std::size_t index(AddSwapHeuristic h) { return static_cast<std::size_t>(h); }

 private:
  std::array<int, 3> best_{0, 0, 0};
  double temperature_;
  double gamma_;
  double floor_;
};

// Boltzmann distribution over arbitrary scores at temperature T.
std::array<double, 3> boltzmann(const std::array<double, 3>& scores, double temperature);

// BDCC with the add/swap heuristic re-selected before every restart.
SolveReport solve_bdcch(const Graph& g, const SearchConfig& config);

}  // namespace kplex
