#include "kplex/search.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <limits>
#include <string>

#include "kplex/errors.hpp"
#include "kplex/hyper.hpp"

namespace kplex {

std::string_view to_string(AddSwapHeuristic h) {
  switch (h) {
    case AddSwapHeuristic::MaxNQ:
      return "max-nq";
    case AddSwapHeuristic::MaxQ:
      return "max-q";
    case AddSwapHeuristic::Random:
      return "random";
  }
  return "?";
}

void SearchConfig::validate() const {
  if (k < 1) throw ConfigError("k must be >= 1");
  if (depth < 1) throw ConfigError("depth must be >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw ConfigError("epsilon must lie in [0, 1]");
  if (!(cutoff > 0.0)) throw ConfigError("cutoff must be positive");
  if (max_restarts < 0) throw ConfigError("max_restarts must be >= 0");
  if (!(temp0 > 0.0)) throw ConfigError("initial temperature must be positive");
  if (!(gamma > 0.0 && gamma < 1.0)) throw ConfigError("gamma must lie in (0, 1)");
}

SolverState::SolverState(int n, const SearchConfig& config)
    : forbid(config.strategy, n),
      bandit(n, config.alpha, config.epsilon),
      op_times(n, 0),
      rng(config.seed) {}

namespace {

constexpr std::size_t kInitSample = 100;

// Floyd's algorithm: `count` distinct positions of [0, n).
std::vector<std::size_t> sample_positions(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<std::size_t> chosen;
  chosen.reserve(count);
  for (std::size_t j = n - count; j < n; ++j) {
    const std::size_t t = uniform_index(rng, j + 1);
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
      chosen.push_back(t);
    } else {
      chosen.push_back(j);
    }
  }
  return chosen;
}

// Calls fn(v) for each vertex the operators may insert: N(S), widened to
// every live non-member while |S| < k.
template <typename Fn>
void for_each_candidate(const CandidateSolution& sol, Fn&& fn) {
  if (sol.open_growth()) {
    for (Vertex v : sol.graph().live_vertices()) {
      if (!sol.contains(v)) fn(v);
    }
  } else {
    for (Vertex v : sol.boundary()) fn(v);
  }
}

// Running argmax with uniform tie-breaking.
struct BestPick {
  Vertex vertex = -1;
  double key = -std::numeric_limits<double>::infinity();
  TieBreaker ties;

  void offer(Vertex v, double k, Rng& rng) {
    if (vertex < 0 || k > key) {
      vertex = v;
      key = k;
      ties.reset();
      ties.offer(rng);
    } else if (k == key && ties.offer(rng)) {
      vertex = v;
    }
  }
};

}  // namespace

void construct_init(CandidateSolution& sol, std::span<const std::int64_t> op_times, Rng& rng) {
  sol.clear();
  const auto live = sol.graph().live_vertices();
  if (live.empty()) throw ContractViolation("construct_init needs a live vertex");

  // Minimise opTimes, so negate for BestPick.
  BestPick seed;
  if (live.size() <= kInitSample) {
    for (Vertex v : live) seed.offer(v, -static_cast<double>(op_times[v]), rng);
  } else {
    for (std::size_t pos : sample_positions(live.size(), kInitSample, rng)) {
      seed.offer(live[pos], -static_cast<double>(op_times[live[pos]]), rng);
    }
  }
  sol.insert(seed.vertex);

  for (;;) {
    BestPick next;
    for_each_candidate(sol, [&](Vertex v) {
      if (sol.classify(v) == Op::Add) next.offer(v, -static_cast<double>(op_times[v]), rng);
    });
    if (next.vertex < 0) break;
    sol.insert(next.vertex);
  }
}

SearchResult search(CandidateSolution& sol, SolverState& state, const SearchParams& params) {
  SearchResult result;
  result.best = sol.sorted_members();
  state.bandit.discard_walk();
  state.forbid.reset_configuration();

  const auto nq = state.forbid.nq();
  const auto q = state.bandit.q();
  auto key_of = [&](Vertex v) -> double {
    switch (params.heuristic) {
      case AddSwapHeuristic::MaxNQ:
        return static_cast<double>(nq[v]);
      case AddSwapHeuristic::MaxQ:
        return q[v];
      case AddSwapHeuristic::Random:
        return 0.0;
    }
    return 0.0;
  };

  std::vector<Vertex> perturb_pool;
  for (int step = 0; step < params.depth; ++step) {
    if (step > 0 && step % 4096 == 0 && params.should_stop && params.should_stop()) break;

    BestPick add;
    BestPick swap;
    perturb_pool.clear();
    for_each_candidate(sol, [&](Vertex v) {
      if (!state.forbid.allowed(v)) return;
      switch (sol.classify(v)) {
        case Op::Add:
          add.offer(v, key_of(v), state.rng);
          break;
        case Op::Swap:
          if (add.vertex < 0) swap.offer(v, key_of(v), state.rng);
          break;
        case Op::Perturb:
          if (add.vertex < 0 && swap.vertex < 0) perturb_pool.push_back(v);
          break;
      }
    });

    Action action{};
    if (add.vertex >= 0) {
      action = {Op::Add, add.vertex};
    } else if (swap.vertex >= 0) {
      action = {Op::Swap, swap.vertex};
    } else if (!perturb_pool.empty()) {
      action = {Op::Perturb, state.bandit.select_perturb(perturb_pool, state.rng)};
    } else {
      break;
    }

    const auto removed = sol.apply(action, nq, state.rng);
    ++result.iterations;
    ++state.op_times[action.vertex];
    state.bandit.record(action);
    state.forbid.notify(action, removed, sol.graph());
    if (params.on_step) params.on_step(sol, action, removed);

    if (sol.size() > static_cast<int>(result.best.size())) {
      result.best = sol.sorted_members();
      state.bandit.reward_episode();
    }
  }
  // An episode still open here never reached a break-through.
  state.bandit.discard_walk();
  return result;
}

namespace detail {

SolveReport drive(const Graph& g, const SearchConfig& config, HyperState* hyper) {
  config.validate();
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  Graph work = g;
  SolverState state(work.vertex_count(), config);
  CandidateSolution sol(work, config.k);
  SolveReport report;

  SearchParams params;
  params.depth = config.depth;
  params.heuristic = config.heuristic;
  params.should_stop = [&] { return elapsed() >= config.cutoff; };

  auto optimal = [&] { return work.live_count() <= report.best_size; };
  report.proven_optimal = optimal();

  while (!report.proven_optimal && elapsed() < config.cutoff &&
         (config.max_restarts == 0 || report.restarts < config.max_restarts)) {
    if (hyper != nullptr) {
      params.heuristic = config.forced_heuristic.value_or(hyper->select(state.rng));
      report.heuristic_history.push_back(params.heuristic);
    }
    construct_init(sol, state.op_times, state.rng);
    auto found = search(sol, state, params);
    ++report.restarts;
    report.iterations += found.iterations;
    sol.clear();

    const int found_size = static_cast<int>(found.best.size());
    if (hyper != nullptr) hyper->observe(params.heuristic, found_size);
    if (found_size > report.best_size) {
      assert(is_kplex(found.best, g, config.k));
      report.best = std::move(found.best);
      report.best_size = found_size;
      report.time_to_best = elapsed();
      report.size_trajectory.push_back({report.time_to_best, found_size});
      work.peel(config.k, report.best_size);
    }
    if (hyper != nullptr) hyper->cool();
    report.proven_optimal = optimal();
  }
  report.total_time = elapsed();
  return report;
}

}  // namespace detail

SolveReport solve_bdcc(const Graph& g, const SearchConfig& config) {
  return detail::drive(g, config, nullptr);
}

}  // namespace kplex
