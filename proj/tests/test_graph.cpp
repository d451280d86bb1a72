#include "doctest.h"

#include <random>

#include "gel/errors.hpp"
#include "gel/graph.hpp"
#include "gel/io.hpp"
#include "oracles.hpp"

using namespace gel;

TEST_CASE("parse_graph basics") {
  Graph g = parse_graph("e 0 1\ne 1 2");
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);

  Graph k23 = parse_graph("# K2,3\ne 0 2\ne 0 3\ne 0 4\ne 1 2\ne 1 3\ne 1 4\n");
  CHECK(k23.order() == 5);
  CHECK(k23.size() == 6);

  CHECK(parse_graph("n 7\ne 0 1").order() == 7);
}

TEST_CASE("parse_graph errors carry line numbers") {
  try {
    parse_graph("n 5\ne 0 1\ne 0 1");
    FAIL("duplicate accepted");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  try {
    parse_graph("e 0 1\ne 2 2");
    FAIL("loop accepted");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  try {
    parse_graph("e 0 1\ne 1\n");
    FAIL("malformed line accepted");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_graph("e 1 0\ne 0 1"), ParseError);
  CHECK_THROWS_AS(parse_graph("x 1 0"), ParseError);
}

TEST_CASE("graph invariants") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), GraphError);
  CHECK_THROWS_AS(g.add_edge(2, 2), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 3), GraphError);
  CHECK(EdgePair(5, 2).u == 2);
  CHECK(EdgePair(5, 2).v == 5);
}

TEST_CASE("girth") {
  CHECK(girth(cycle_graph(5)) == 5);
  CHECK(girth(complete_bipartite(2, 3)) == 4);
  CHECK(girth(petersen_graph()) == 5);
  CHECK(oracle::girth(petersen_graph()) == 5);
  CHECK_FALSE(girth(path_graph(6)).has_value());
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_graph(9, 0.3, rng);
    int o = oracle::girth(g);
    auto mine = girth(g);
    CHECK(mine.value_or(0) == o);
  }
}

TEST_CASE("subgraph") {
  Graph k23 = complete_bipartite(2, 3);
  auto s = subgraph(k23, {}, {EdgePair(0, 2)});
  CHECK(s.graph.order() == 5);
  CHECK(s.graph.size() == 5);

  auto c = subgraph(cycle_graph(5), {2}, {});
  CHECK(c.graph.order() == 4);
  CHECK(c.graph.size() == 3);
  CHECK(c.old_to_new[2] == -1);
  CHECK(c.new_to_old[2] == 3);
  CHECK(is_connected(c.graph));
  CHECK(max_degree(c.graph) == 2);

  auto id = subgraph(k23, {}, {});
  CHECK(id.graph == k23);

  CHECK_THROWS_AS(subgraph(k23, {9}, {}), GraphError);
  CHECK_THROWS_AS(subgraph(k23, {}, {EdgePair(0, 1)}), GraphError);
}

TEST_CASE("girth does not drop under deletion") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    Graph g = oracle::random_graph(8, 0.4, rng);
    if (g.size() == 0) continue;
    int before = girth(g).value_or(1000);
    std::uniform_int_distribution<int> pick(0, g.size() - 1);
    auto s = subgraph(g, {rng() % 2 ? 0 : 1}, {});
    CHECK(girth(s.graph).value_or(1000) >= before);
    Graph h = delete_edge(g, g.edge(pick(rng)));
    CHECK(girth(h).value_or(1000) >= before);
  }
}

TEST_CASE("enumerate_cycles") {
  CHECK(enumerate_cycles(cycle_graph(5)).size() == 1);
  CHECK(enumerate_cycles(complete_bipartite(2, 3)).size() == 3);
  for (const auto& c : enumerate_cycles(complete_bipartite(2, 3))) CHECK(c.size() == 4);
  CHECK(enumerate_cycles(complete_graph(4)).size() == 7);
  CHECK(oracle::count_cycles(complete_graph(4)) == 7);
  CHECK(enumerate_cycles(complete_graph(5)).size() == 37);
  CHECK(enumerate_cycles(petersen_graph()).size() == 57);
  CHECK(enumerate_cycles(complete_graph(4), 3).size() == 4);
  CHECK_THROWS_AS(enumerate_cycles(complete_graph(7), std::nullopt, 100), BudgetExceeded);
}

TEST_CASE("cycle count invariant under relabeling") {
  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    Graph g = oracle::random_graph(7, 0.45, rng);
    auto base = enumerate_cycles(g).size();
    CHECK(static_cast<long>(base) == oracle::count_cycles(g));
    Graph h = relabel(g, oracle::random_perm(g.order(), rng));
    CHECK(enumerate_cycles(h).size() == base);
  }
}

TEST_CASE("matching cuts") {
  auto p = has_matching_cut(path_graph(4));
  REQUIRE(p.has_value());
  CHECK(is_matching_cut(path_graph(4), *p));

  CHECK_FALSE(has_matching_cut(complete_bipartite(2, 3)).has_value());

  auto c4 = has_matching_cut(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK(c4->size() == 2);
  CHECK(is_matching_cut(cycle_graph(4), *c4));
  CHECK_FALSE((*c4)[0].touches((*c4)[1].u));
  CHECK_FALSE((*c4)[0].touches((*c4)[1].v));

  CHECK_FALSE(has_matching_cut(complete_graph(4)).has_value());
  // The five spokes separate the outer and inner pentagons.
  auto pet = has_matching_cut(petersen_graph());
  REQUIRE(pet.has_value());
  CHECK(is_matching_cut(petersen_graph(), *pet));
}

TEST_CASE("matching cut against brute force") {
  std::mt19937 rng(5);
  for (int i = 0; i < 80; ++i) {
    Graph g = oracle::random_graph(7, 0.5, rng);
    if (!is_connected(g)) continue;
    // Brute force over 2-colorings of the vertices.
    bool exists = false;
    const int n = g.order();
    for (int mask = 1; mask < (1 << n) - 1 && !exists; ++mask) {
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        int cross = 0;
        for (Vertex u : g.neighbors(v))
          if (((mask >> u) & 1) != ((mask >> v) & 1)) ++cross;
        ok = cross <= 1;
      }
      exists = ok;
    }
    auto cut = has_matching_cut(g);
    CHECK(cut.has_value() == exists);
    if (cut) CHECK(is_matching_cut(g, *cut));
  }
}

TEST_CASE("forbidden subgraph scan") {
  auto k4 = forbidden_subgraph_scan(complete_graph(4));
  CHECK(k4.has_c3);
  CHECK_FALSE(k4.has_k23);
  auto k23 = forbidden_subgraph_scan(complete_bipartite(2, 3));
  CHECK_FALSE(k23.has_c3);
  CHECK(k23.has_k23);
  auto c5 = forbidden_subgraph_scan(cycle_graph(5));
  CHECK_FALSE(c5.has_c3);
  CHECK_FALSE(c5.has_k23);
  CHECK(forbidden_subgraph_scan(complete_bipartite(3, 3)).has_k23);
  CHECK_FALSE(forbidden_subgraph_scan(petersen_graph()).has_k23);
}

TEST_CASE("dot export") {
  std::string dot = to_dot(cycle_graph(3));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);
}
