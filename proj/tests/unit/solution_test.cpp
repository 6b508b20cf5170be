#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "kplex/errors.hpp"
#include "kplex/solution.hpp"
#include "support/testing.hpp"

using namespace kplex;
namespace kt = kplex::testing;

namespace {

CandidateSolution make(const Graph& g, int k, std::initializer_list<Vertex> members) {
  CandidateSolution sol(g, k);
  for (Vertex v : members) sol.insert(v);
  return sol;
}

// Recomputes every counter from the adjacency matrix.
void check_counters(const kt::TestGraph& t, const CandidateSolution& sol) {
  const int size = sol.size();
  std::vector<char> in_s(t.n, 0);
  for (Vertex v : sol.members()) in_s[v] = 1;
  std::vector<Vertex> saturated;
  for (int v = 0; v < t.n; ++v) {
    int inside = 0;
    for (int u = 0; u < t.n; ++u) inside += in_s[u] && t.adjacent(u, v);
    REQUIRE(sol.in_s_degree(v) == inside);
    if (in_s[v]) {
      REQUIRE(inside >= size - sol.k());
      REQUIRE(sol.saturated(v) == (inside == size - sol.k()));
      if (inside == size - sol.k()) saturated.push_back(v);
    }
  }
  REQUIRE(sol.saturated_count() == static_cast<int>(saturated.size()));
  std::set<Vertex> boundary(sol.boundary().begin(), sol.boundary().end());
  for (int v = 0; v < t.n; ++v) {
    const bool expected = !in_s[v] && sol.in_s_degree(v) > 0;
    REQUIRE(boundary.contains(v) == expected);
    if (!in_s[v]) {
      int blocking = 0;
      for (Vertex u : saturated) blocking += !t.adjacent(u, v);
      REQUIRE(sol.saturated_non_neighbors(v) == blocking);
    }
  }
}

}  // namespace

TEST_CASE("classify: path with k=1 and S={a}") {
  const auto t = kt::path(3);
  const auto g = t.graph();
  const auto sol = make(g, 1, {0});
  CHECK(sol.saturated(0));
  const auto sets = classify(sol);
  CHECK(sets.add == std::vector<Vertex>{1});
  CHECK(sets.swap.empty());
  CHECK(sets.perturb.empty());
}

TEST_CASE("classify: 5-cycle with k=2 and S={1,2,3}") {
  // Vertices 1..5 map to ids 0..4.
  const auto g = kt::cycle(5).graph();
  const auto sol = make(g, 2, {0, 1, 2});
  CHECK(sol.saturated(0));
  CHECK(sol.saturated(2));
  CHECK_FALSE(sol.saturated(1));
  const auto sets = classify(sol);
  REQUIRE(sets.swap.size() == 2);
  // Vertex 4 (id 3) must drop vertex 1 (id 0).
  CHECK(sets.swap[0] == SwapMove{3, 0});
  CHECK(sets.swap[1] == SwapMove{4, 2});
}

TEST_CASE("classify: empty boundary gives empty sets") {
  const auto g = kt::from_edges(4, {{0, 1}, {2, 3}}).graph();
  const auto sol = make(g, 2, {0, 1});
  const auto sets = classify(sol);
  CHECK(sets.add.empty());
  CHECK(sets.swap.empty());
  CHECK(sets.perturb.empty());
}

TEST_CASE("apply: add, swap and perturb examples") {
  Rng rng(1);
  const std::vector<std::int64_t> nq(6, 0);

  SUBCASE("add on the path") {
    const auto g = kt::path(3).graph();
    auto sol = make(g, 1, {0});
    CHECK(sol.apply({Op::Add, 1}, nq, rng).empty());
    CHECK(sol.sorted_members() == std::vector<Vertex>{0, 1});
  }
  SUBCASE("swap on the 5-cycle removes the saturated non-neighbor") {
    const auto g = kt::cycle(5).graph();
    auto sol = make(g, 2, {0, 1, 2});
    CHECK(sol.apply({Op::Swap, 3}, nq, rng) == std::vector<Vertex>{0});
    const auto members = sol.sorted_members();
    CHECK(members == std::vector<Vertex>{1, 2, 3});
    CHECK(is_kplex(members, g, 2));
  }
  SUBCASE("perturb on the star removes both saturated leaves") {
    const auto g = kt::star(4).graph();
    auto sol = make(g, 2, {0, 1, 2});
    CHECK(sol.saturated(1));
    CHECK(sol.saturated(2));
    CHECK(sol.classify(3) == Op::Perturb);
    auto removed = sol.apply({Op::Perturb, 3}, nq, rng);
    std::sort(removed.begin(), removed.end());
    CHECK(removed == std::vector<Vertex>{1, 2});
    CHECK(sol.sorted_members() == std::vector<Vertex>{0, 3});
  }
}

TEST_CASE("unforced swap drops the minimum-NQ non-neighbor") {
  // S = {0,1,2} in K4 minus edges 0-3 and 1-3, k = 2: vertex 3 has one
  // neighbor in S (=|S|-k) and no saturated member blocks it.
  const auto t = kt::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  const auto g = t.graph();
  auto sol = make(g, 2, {0, 1, 2});
  REQUIRE(sol.saturated_count() == 0);
  REQUIRE(sol.classify(3) == Op::Swap);
  Rng rng(5);
  const std::vector<std::int64_t> nq{4, -1, 0, 0};
  CHECK(sol.apply({Op::Swap, 3}, nq, rng) == std::vector<Vertex>{1});
  CHECK(is_kplex(sol.sorted_members(), g, 2));
}

TEST_CASE("apply rejects illegal actions") {
  const auto g = kt::path(3).graph();
  auto sol = make(g, 1, {0});
  Rng rng(1);
  const std::vector<std::int64_t> nq(3, 0);
  CHECK_THROWS_AS(sol.apply({Op::Swap, 1}, nq, rng), ContractViolation);
  CHECK_THROWS_AS(sol.apply({Op::Add, 0}, nq, rng), ContractViolation);
  CHECK_THROWS_AS(sol.apply({Op::Add, 2}, nq, rng), ContractViolation);
}

TEST_CASE("is_kplex examples") {
  const auto k5 = kt::complete(5).graph();
  const auto c5 = kt::cycle(5).graph();
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  for (int k = 1; k <= 5; ++k) CHECK(is_kplex(all, k5, k));
  CHECK(is_kplex(std::vector<Vertex>{0, 2}, kt::edgeless(3).graph(), 2));
  CHECK_FALSE(is_kplex(std::vector<Vertex>{0, 1, 2, 3}, c5, 2));
  CHECK(is_kplex(std::vector<Vertex>{0, 1, 2}, c5, 2));
}

TEST_CASE("open growth admits non-neighbors while |S| < k") {
  const auto g = kt::edgeless(5).graph();
  auto sol = make(g, 2, {0});
  CHECK(sol.open_growth());
  CHECK(sol.classify(3) == Op::Add);
  Rng rng(1);
  const std::vector<std::int64_t> nq(5, 0);
  sol.apply({Op::Add, 3}, nq, rng);
  CHECK(sol.size() == 2);
  CHECK_FALSE(sol.open_growth());
  CHECK(sol.classify(1) == Op::Perturb);
}

TEST_CASE("classify agrees with the definitional classifier") {
  std::mt19937_64 gen(2024);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 19);
    const auto t = kt::random_graph(n, (gen() % 8 + 1) / 10.0, gen);
    const int k = 1 + static_cast<int>(gen() % 4);
    const auto g = t.graph();
    // Grow a random feasible S by random inserts that keep feasibility.
    CandidateSolution sol(g, k);
    std::vector<Vertex> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), gen);
    for (Vertex v : order) {
      std::vector<Vertex> trial_set(sol.members().begin(), sol.members().end());
      trial_set.push_back(v);
      if (gen() % 3 != 0 && is_kplex(trial_set, g, k)) sol.insert(v);
    }
    std::vector<char> in_s(n, 0);
    for (Vertex v : sol.members()) in_s[v] = 1;
    const auto sets = classify(sol);

    std::set<Vertex> add(sets.add.begin(), sets.add.end());
    std::set<Vertex> swap;
    for (auto s : sets.swap) swap.insert(s.vertex);
    std::set<Vertex> perturb(sets.perturb.begin(), sets.perturb.end());
    CHECK(add.size() + swap.size() + perturb.size() ==
          sets.add.size() + sets.swap.size() + sets.perturb.size());

    for (int v = 0; v < n; ++v) {
      bool in_boundary = false;
      for (int u = 0; u < n; ++u) in_boundary |= in_s[u] && t.adjacent(u, v);
      in_boundary &= !in_s[v];
      const int hits = add.contains(v) + swap.contains(v) + perturb.contains(v);
      REQUIRE(hits == (in_boundary ? 1 : 0));
      if (!in_boundary) continue;
      ++checked;
      switch (kt::definitional_kind(t, in_s, k, v)) {
        case kt::DefKind::Add:
          CHECK(add.contains(v));
          break;
        case kt::DefKind::Swap:
          CHECK(swap.contains(v));
          break;
        case kt::DefKind::Perturb:
          CHECK(perturb.contains(v));
          break;
      }
    }
    for (auto s : sets.swap) {
      if (s.forced_removal >= 0) {
        CHECK(sol.saturated(s.forced_removal));
        CHECK_FALSE(t.adjacent(s.forced_removal, s.vertex));
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("counters survive a long random action sequence") {
  std::mt19937_64 gen(99);
  Rng rng(4);
  for (int graph_no = 0; graph_no < 4; ++graph_no) {
    const auto t = kt::random_graph(20, 0.2 + 0.2 * graph_no, gen);
    const auto g = t.graph();
    const int k = 1 + graph_no;
    CandidateSolution sol(g, k);
    std::vector<std::int64_t> nq(t.n);
    for (auto& x : nq) x = static_cast<std::int64_t>(gen() % 7) - 3;
    sol.insert(0);
    for (int step = 0; step < 10000; ++step) {
      std::vector<Vertex> pool;
      for (int v = 0; v < t.n; ++v) {
        if (!sol.contains(v) && (sol.in_s_degree(v) > 0 || sol.open_growth())) pool.push_back(v);
      }
      if (pool.empty()) {
        sol.clear();
        sol.insert(static_cast<Vertex>(gen() % t.n));
        continue;
      }
      const Vertex v = pool[gen() % pool.size()];
      sol.apply({sol.classify(v), v}, nq, rng);
      REQUIRE(is_kplex(sol.sorted_members(), g, k));
      if (step % 10 == 0) check_counters(t, sol);
    }
    check_counters(t, sol);
  }
}
