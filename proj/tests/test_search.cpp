#include "doctest.h"

#include <random>

#include "gel/errors.hpp"
#include "gel/search.hpp"
#include "oracles.hpp"

using namespace gel;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

std::uint64_t fact(int k) { return k <= 1 ? 1 : k * fact(k - 1); }

}  // namespace

TEST_CASE("goodness search on small graphs") {
  auto c3 = find_good_labeling(cycle_graph(3));
  CHECK(c3.kind == CertKind::BadExhausted);
  CHECK(c3.stats.orderings_covered == 6);
  CHECK_FALSE(recheck(c3).has_value());

  auto c5 = find_good_labeling(cycle_graph(5));
  REQUIRE(c5.kind == CertKind::GoodLabeling);
  CHECK(is_good_paths(cycle_graph(5), *c5.labeling).ok());
  CHECK(is_good_cycles(cycle_graph(5), *c5.labeling).ok());

  Graph k23 = complete_bipartite(2, 3);
  for (const auto& e : k23.edges()) {
    auto c = find_good_labeling(delete_edge(k23, e));
    CHECK(c.kind == CertKind::GoodLabeling);
    CHECK_FALSE(recheck(c).has_value());
  }
  auto bad = find_good_labeling(k23);
  CHECK(bad.kind == CertKind::BadExhausted);
  CHECK(bad.stats.orderings_covered == 720);
}

TEST_CASE("exhaustion counts agree with and without symmetry") {
  for (const Graph& g : {complete_graph(4), complete_bipartite(2, 3), theta_graph(3, 2)}) {
    GoodSearchOptions plain;
    plain.symmetry = false;
    auto a = find_good_labeling(g, plain);
    auto b = find_good_labeling(g);
    CHECK(a.kind == b.kind);
    if (a.kind == CertKind::BadExhausted) {
      CHECK(a.stats.orderings_covered == fact(g.size()));
      CHECK(b.stats.orderings_covered == fact(g.size()));
    }
  }
}

TEST_CASE("criticality") {
  auto k23 = is_critical(complete_bipartite(2, 3));
  CHECK(k23.kind == CertKind::Criticality);
  CHECK(k23.parts.size() == 7);
  CHECK_FALSE(recheck(k23).has_value());

  auto c3 = is_critical(cycle_graph(3));
  CHECK(c3.kind == CertKind::Criticality);
  CHECK(c3.parts.size() == 4);

  auto c4 = is_critical(cycle_graph(4));
  CHECK(c4.kind == CertKind::NotCritical);
  REQUIRE(c4.parts.size() == 1);
  CHECK(c4.parts[0].kind == CertKind::GoodLabeling);

  // K4 is bad but not critical: deleting an edge leaves a graph with a triangle.
  auto k4 = is_critical(complete_graph(4));
  CHECK(k4.kind == CertKind::NotCritical);
}

TEST_CASE("tampered certificates fail recheck") {
  auto k23 = is_critical(complete_bipartite(2, 3));
  auto t = k23;
  t.parts.pop_back();
  CHECK(recheck(t).has_value());
  auto u = k23;
  u.parts[1].labeling->begin()->second = R(1000);
  u.parts[2].labeling = u.parts[1].labeling;
  CHECK(recheck(u).has_value());
  auto v = k23;
  v.parts[0].stats.orderings_covered -= 1;
  CHECK(recheck(v).has_value());
}

TEST_CASE("cycles are good") {
  for (int n = 4; n <= 10; ++n) {
    auto c = find_good_labeling(cycle_graph(n));
    REQUIRE(c.kind == CertKind::GoodLabeling);
    CHECK(is_good_paths(cycle_graph(n), *c.labeling).ok());
    CHECK(is_good_cycles(cycle_graph(n), *c.labeling).ok());
  }
}

TEST_CASE("budget is distinct from exhaustion") {
  GoodSearchOptions opt;
  opt.budget = 5;
  CHECK_THROWS_AS(find_good_labeling(complete_bipartite(2, 3), opt), BudgetExceeded);
  PatternOptions po;
  po.budget = 3;
  CHECK_THROWS_AS(find_decent_labeling(TypedGraph(cycle_graph(6), std::vector<int>(6, 1)), po),
                  BudgetExceeded);
}

TEST_CASE("threads give the same verdicts") {
  GoodSearchOptions opt;
  opt.threads = 3;
  opt.symmetry = false;
  CHECK(find_good_labeling(complete_bipartite(2, 3), opt).kind == CertKind::BadExhausted);
  CHECK(find_good_labeling(complete_bipartite(2, 3), opt).stats.orderings_covered == 720);
  CHECK(find_good_labeling(petersen_graph(), opt).kind ==
        find_good_labeling(petersen_graph()).kind);
}

TEST_CASE("distinct-label and weak-order existence agree on small graphs") {
  auto graphs = oracle::connected_graphs_up_to(5);
  CHECK(graphs.size() == 22);  // 1 + 1 + 3 + 5 + 12
  for (const auto& g : graphs) CHECK(certify_equivalence_distinct_vs_weak(g));
  CHECK_FALSE(find_good_weak(cycle_graph(3)).has_value());
  CHECK(find_good_weak(cycle_graph(4)).has_value());
}

TEST_CASE("monotone pruning is sound") {
  std::mt19937 rng(41);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_graph(7, 0.45, rng);
    auto order = oracle::random_perm(g.size(), rng);
    Labeling full;
    for (int k = 0; k < g.size(); ++k) full[g.edge(order[k])] = R(k);
    // First prefix that is already bad.
    for (int k = 1; k <= g.size(); ++k) {
      std::vector<EdgePair> drop;
      for (int j = k; j < g.size(); ++j) drop.push_back(g.edge(order[j]));
      auto s = subgraph(g, {}, drop);
      Labeling part;
      for (int j = 0; j < k; ++j) part[g.edge(order[j])] = R(j);
      if (!is_good_paths(s.graph, part).ok()) {
        CHECK_FALSE(is_good_paths(g, full).ok());
        ++checked;
        break;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("gluable synthesis on small typed graphs") {
  TypedGraph path(path_graph(3), {1, 0, 2});
  auto c = find_gluable_labeling(path, 0);
  REQUIRE(c.kind == CertKind::GluableLabeling);
  CHECK_FALSE(recheck(c).has_value());
  // The catalog values are a solution too.
  GluQuad text{path, {{EdgePair(0, 1), R(3, 4)}, {EdgePair(1, 2), R(-1)}}, 0};
  CHECK_FALSE(verify_gluable(text).has_value());

  TypedGraph edge(path_graph(2), {0, 1});
  auto e = find_gluable_labeling(edge, 0);
  REQUIRE(e.kind == CertKind::GluableLabeling);
  GluQuad one{edge, {{EdgePair(0, 1), R(1)}}, 0};
  CHECK_FALSE(verify_gluable(one).has_value());

  // A type-2 neighbor of the root can never be gluable.
  TypedGraph adj(path_graph(2), {0, 2});
  CHECK(find_gluable_labeling(adj, 0).kind == CertKind::NoGluableLabeling);

  // Pins are honored.
  PatternOptions po;
  po.pins[EdgePair(0, 1)] = R(7, 10);
  auto p = find_gluable_labeling(path, 0, po);
  REQUIRE(p.kind == CertKind::GluableLabeling);
  CHECK(p.labeling->at(EdgePair(0, 1)) == R(7, 10));
}

TEST_CASE("pattern levels use midpoints") {
  // On y - x - w with types 1, 0, 2 the root edge must lie in (2/3, 3/4] and
  // the search instantiates open gaps by midpoints.
  TypedGraph path(path_graph(3), {1, 0, 2});
  auto c = find_gluable_labeling(path, 0);
  REQUIRE(c.labeling);
  Rational a = c.labeling->at(EdgePair(0, 1));
  CHECK((a == R(3, 4) || a == R(17, 24) || a > R(3, 4)));
}

TEST_CASE("decent search agrees with a grid search") {
  const Rational grid[] = {R(-2), R(-1), R(-1, 2), R(1, 4), R(7, 12), R(17, 24), R(1), R(2)};
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> ty(0, 2);
  int solved = 0, compared = 0;
  for (int i = 0; i < 60 && compared < 25; ++i) {
    Graph g = oracle::random_graph(5, 0.5, rng);
    if (!is_connected(g) || g.size() > 6) continue;
    std::vector<int> tau(g.order());
    for (int& t : tau) t = ty(rng);
    TypedGraph tg(g, tau);
    bool grid_found = false;
    std::vector<int> idx(g.size(), 0);
    for (;;) {
      Labeling phi;
      for (int e = 0; e < g.size(); ++e) phi[g.edge(e)] = grid[idx[e]];
      if (!verify_decent(tg, phi)) {
        grid_found = true;
        break;
      }
      int k = 0;
      while (k < g.size() && ++idx[k] == 8) idx[k++] = 0;
      if (k == g.size()) break;
    }
    auto cert = find_decent_labeling(tg);
    ++compared;
    if (grid_found) {
      ++solved;
      CHECK(cert.kind == CertKind::DecentLabeling);
    }
    if (cert.kind == CertKind::DecentLabeling) CHECK_FALSE(recheck(cert).has_value());
    CHECK(cert.stats.rejected_leaves == 0);
  }
  CHECK(solved > 0);
}
