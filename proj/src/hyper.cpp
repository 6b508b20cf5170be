#include "kplex/hyper.hpp"

#include <algorithm>
#include <cmath>

#include "kplex/errors.hpp"

namespace kplex {

std::array<double, 3> boltzmann(const std::array<double, 3>& scores, double temperature) {
  if (!(temperature > 0.0)) throw ContractViolation("temperature must be positive");
  const double top = *std::max_element(scores.begin(), scores.end());
  std::array<double, 3> p{};
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::exp((scores[i] - top) / temperature);
    total += p[i];
  }
  for (double& x : p) x /= total;
  return p;
}

HyperState::HyperState(double temperature, double gamma, double floor)
    : temperature_(temperature), gamma_(gamma), floor_(floor) {}

std::array<double, 3> HyperState::probabilities() const {
  return boltzmann({static_cast<double>(best_[0]), static_cast<double>(best_[1]),
                    static_cast<double>(best_[2])},
                   temperature_);
}

AddSwapHeuristic HyperState::select(Rng& rng) const {
  const auto p = probabilities();
  const double u = uniform_unit(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    acc += p[i];
    if (u < acc) return kHeuristics[i];
  }
  return kHeuristics.back();
}

void HyperState::observe(AddSwapHeuristic h, int lbest_size) {
  auto& slot = best_[index(h)];
  slot = std::max(slot, lbest_size);
}

void HyperState::cool() {
  if (temperature_ > floor_) temperature_ *= gamma_;
}

SolveReport solve_bdcch(const Graph& g, const SearchConfig& config) {
  config.validate();
  HyperState hyper(config.temp0, config.gamma);
  return detail::drive(g, config, &hyper);
}

}  // namespace kplex
