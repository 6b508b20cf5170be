#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "kplex/errors.hpp"
#include "kplex/graph.hpp"
#include "support/testing.hpp"

using namespace kplex;
namespace kt = kplex::testing;

TEST_CASE("parse_dimacs reads a path") {
  const auto g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
}

TEST_CASE("parse_dimacs drops duplicates and self-loops") {
  const auto g = parse_dimacs("p edge 2 2\ne 1 2\ne 1 2");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  const auto h = parse_dimacs("c loop\np edge 2 2\ne 1 1\ne 2 1\n");
  CHECK(h.edge_count() == 1);
  CHECK(h.degree(0) == 1);
}

TEST_CASE("parse_dimacs errors") {
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3"), RangeError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 0 1"), RangeError);
  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), FormatError);
  CHECK_THROWS_AS(parse_dimacs("c nothing\n"), FormatError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\np edge 2 1\n"), FormatError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\nx 1 2\n"), FormatError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 b\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge two 1\n"), ParseError);
}

TEST_CASE("parse_dimacs accepts the 'col' problem tag and blank lines") {
  const auto g = parse_dimacs("p col 3 1\n\ne 1 3\n");
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 2));
}

TEST_CASE("edge list format") {
  const auto g = parse_edge_list("3 2\n1 2\n2 3\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 4\n"), RangeError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), FormatError);
}

TEST_CASE("load_graph picks the parser by extension") {
  const auto dir = std::filesystem::temp_directory_path() / "kplex_graph_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "a.clq") << "p edge 3 1\ne 1 2\n";
    std::ofstream(dir / "a.txt") << "3 1\n1 2\n";
  }
  CHECK(load_graph(dir / "a.clq").edge_count() == 1);
  CHECK(load_graph(dir / "a.txt").edge_count() == 1);
  CHECK_THROWS_AS(load_graph(dir / "missing.clq"), GraphInputError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("peel examples") {
  SUBCASE("path cascades to empty") {
    auto g = kt::path(3).graph();
    g.peel(1, 2);
    CHECK(g.live_count() == 0);
  }
  SUBCASE("K4 is a fixed point") {
    auto g = kt::complete(4).graph();
    CHECK(g.peel(2, 4) == 0);
    CHECK(g.live_count() == 4);
  }
  SUBCASE("star loses leaves then center") {
    const auto t = kt::star(4);
    CHECK(kt::brute_force_peel(t, 2, 3) == 0u);
    auto g = t.graph();
    g.peel(2, 3);
    CHECK(g.live_count() == 0);
    CHECK(g.edge_count() == 0);
  }
}

TEST_CASE("peeled graph keeps ids and drops dead neighbors") {
  // Triangle 0-1-2 with a pendant 3 on vertex 0.
  auto g = kt::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}).graph();
  g.peel(1, 2);  // threshold 2: only 3 dies
  CHECK_FALSE(g.alive(3));
  CHECK(g.live_count() == 3);
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.edge_count() == 3);
  CHECK_FALSE(g.adjacent(0, 3));
}

TEST_CASE("peel matches brute force and is idempotent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const double p = (rng() % 9 + 1) / 10.0;
    const auto t = kt::random_graph(n, p, rng);
    const int k = 1 + static_cast<int>(rng() % 4);
    const int lb = static_cast<int>(rng() % (n + 2));
    const auto once = peel(t.graph(), k, lb);
    std::uint32_t mask = 0;
    for (Vertex v : once.live_vertices()) mask |= 1u << v;
    CHECK(mask == kt::brute_force_peel(t, k, lb));
    const auto twice = peel(once, k, lb);
    CHECK(twice.edges() == once.edges());
    CHECK(twice.live_count() == once.live_count());
  }
}

TEST_CASE("degree equals live neighbor count after peeling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto t = kt::random_graph(20, 0.3, rng);
    auto g = t.graph();
    g.peel(2, 5);
    for (Vertex v : g.live_vertices()) {
      int live_nbrs = 0;
      for (int u = 0; u < t.n; ++u) live_nbrs += t.adjacent(u, v) && g.alive(u);
      CHECK(g.degree(v) == live_nbrs);
      for (Vertex u : g.neighbors(v)) CHECK(g.adjacent(v, u));
    }
  }
}

TEST_CASE("write_dimacs round-trips the edge set") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = kt::random_graph(1 + static_cast<int>(rng() % 30), 0.4, rng).graph();
    std::ostringstream out;
    write_dimacs(out, g);
    const auto back = parse_dimacs(out.str());
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
}
