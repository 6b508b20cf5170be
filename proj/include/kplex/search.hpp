#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kplex/bandit.hpp"
#include "kplex/forbid.hpp"
#include "kplex/graph.hpp"
#include "kplex/rng.hpp"
#include "kplex/solution.hpp"

namespace kplex {

// How Add and Swap candidates are ranked. BDCC always uses MaxNQ; the
// hyperheuristic switches among all three.
enum class AddSwapHeuristic : std::uint8_t { MaxNQ, MaxQ, Random };

std::string_view to_string(AddSwapHeuristic h);

struct SearchConfig {
  int k = 2;
  int depth = 1000;  // iteration limit of one Search call
  double alpha = 0.5;
  double epsilon = 0.2;
  double cutoff = 1000.0;  // seconds
  std::uint64_t seed = 1;
  ForbidStrategy strategy = ForbidStrategy::Dtcc;
  AddSwapHeuristic heuristic = AddSwapHeuristic::MaxNQ;
  // Stops after this many Search calls; 0 means bounded by cutoff only.
  // A restart budget makes a run independent of machine speed.
  std::int64_t max_restarts = 0;

  // Hyperheuristic only.
  double temp0 = 1000.0;
  double gamma = 0.99;
  std::optional<AddSwapHeuristic> forced_heuristic;  // test hook

  // Throws ConfigError.
  void validate() const;
};

struct TrajectoryPoint {
  double seconds;
  int size;
};

struct SolveReport {
  std::vector<Vertex> best;  // sorted
  int best_size = 0;
  std::int64_t iterations = 0;
  std::int64_t restarts = 0;
  double time_to_best = 0.0;
  double total_time = 0.0;
  std::vector<TrajectoryPoint> size_trajectory;
  bool proven_optimal = false;
  std::vector<AddSwapHeuristic> heuristic_history;
};

// opTimes(v): how often v was the object of an applied action. Never reset.
using OpTimes = std::vector<std::int64_t>;

// State that outlives a single Search call.
struct SolverState {
  SolverState(int n, const SearchConfig& config);

  ForbidTracker forbid;
  BanditState bandit;
  OpTimes op_times;
  Rng rng;
};

struct SearchParams {
  int depth = 1000;
  AddSwapHeuristic heuristic = AddSwapHeuristic::MaxNQ;
  // Polled every 4096 iterations.
  std::function<bool()> should_stop;
  // Called after every applied action.
  std::function<void(const CandidateSolution&, const Action&, std::span<const Vertex> removed)>
      on_step;
};

struct SearchResult {
  std::vector<Vertex> best;  // sorted S_lbest
  std::int64_t iterations = 0;
};

// Rebuilds `sol` from scratch: the least-operated vertex of a random sample
// of up to 100 live vertices seeds S, then the least-operated AddSet vertex
// is added until AddSet is empty. Ties break uniformly at random.
void construct_init(CandidateSolution& sol, std::span<const std::int64_t> op_times, Rng& rng);

// One Search call starting from `sol`. Resets the forbidding configuration,
// then runs up to params.depth iterations of filtered Add > Swap > Perturb
// moves, rewarding the walk at every break-through point. Returns the best
// k-plex seen; `sol` is left at the final trajectory state.
SearchResult search(CandidateSolution& sol, SolverState& state, const SearchParams& params);

// Restart loop with peeling; returns when the cutoff or restart budget runs
// out, or when peeling leaves no more live vertices than |S*|.
SolveReport solve_bdcc(const Graph& g, const SearchConfig& config);

class HyperState;

namespace detail {
SolveReport drive(const Graph& g, const SearchConfig& config, HyperState* hyper);
}

}  // namespace kplex
