#include "doctest.h"

#include <random>

#include "gel/errors.hpp"
#include "gel/typed.hpp"
#include "oracles.hpp"

using namespace gel;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

// Path 0..L with labels[i] on edge (i, i+1).
GluQuad path_quad(const std::vector<int>& tau, const std::vector<Rational>& labels) {
  Graph g = path_graph(static_cast<int>(tau.size()));
  Labeling phi;
  for (std::size_t i = 0; i < labels.size(); ++i)
    phi[EdgePair(static_cast<int>(i), static_cast<int>(i + 1))] = labels[i];
  return GluQuad{TypedGraph(g, tau), phi, 0};
}

// Strictly increasing map fixing 0, 1/2, 2/3 and 3/4.
Rational warp(const Rational& x) {
  const Rational c[] = {R(0), R(1, 2), R(2, 3), R(3, 4)};
  if (x < c[0]) return x * 5 - 1;
  if (x > c[3]) return c[3] + (x - c[3]) * 3;
  for (int i = 0; i < 3; ++i)
    if (c[i] < x && x < c[i + 1]) return c[i] + (x - c[i]) * (x - c[i]) / (c[i + 1] - c[i]);
  return x;
}

}  // namespace

TEST_CASE("typed graph validation") {
  CHECK_THROWS_AS(TypedGraph(path_graph(3), {0, 1}), PreconditionError);
  CHECK_THROWS_AS(TypedGraph(path_graph(2), {0, 3}), PreconditionError);
}

TEST_CASE("t-simple paths") {
  TypedGraph tg(path_graph(3), {1, 0, 2});  // y, x, w
  auto two = t_simple_paths(tg, 2, [&](Vertex v) { return tg.tau[v] == 2; },
                            [](Vertex v) { return v == 0; });
  REQUIRE(two.size() == 1);
  CHECK(two[0] == std::vector<Vertex>{2, 1, 0});
  auto one = t_simple_paths(tg, 1, [&](Vertex v) { return tg.tau[v] == 1; },
                            [&](Vertex v) { return tg.tau[v] == 2; });
  REQUIRE(one.size() == 1);
  CHECK(one[0] == std::vector<Vertex>{0, 1, 2});

  TypedGraph c5(cycle_graph(5), {1, 1, 1, 1, 1});
  auto any = [](Vertex) { return true; };
  auto all = t_simple_paths(c5, 1, any, any);
  CHECK(all.size() == 10);
  for (const auto& p : all) CHECK(p.size() == 2);

  CHECK_THROWS_AS(for_each_t_simple_path(TypedGraph(complete_graph(6), std::vector<int>(6, 0)), 1,
                                         any, any, [](const auto&) { return true; }, 50),
                  BudgetExceeded);
}

TEST_CASE("decent typed paths") {
  for (int ty : {0, 1}) {
    auto q = path_quad({ty, 0, 2}, {R(3, 4), R(-1)});
    CHECK_FALSE(verify_decent(q.typed, q.phi).has_value());
  }
  for (int L = 3; L <= 7; ++L) {
    std::vector<int> tau(L + 1, 1);
    tau[0] = 0;
    tau[L - 1] = 0;
    tau[L] = 2;
    std::vector<Rational> x(L, R(1));
    x[0] = R(17, 24);
    x[L - 1] = R(-1);
    auto q = path_quad(tau, x);
    CHECK_FALSE(verify_decent(q.typed, q.phi).has_value());
  }
  // No type-2 vertex: any good labeling is decent.
  TypedGraph c6(cycle_graph(6), {0, 1, 1, 0, 1, 1});
  Labeling phi;
  for (int i = 0; i < 6; ++i) phi[EdgePair(i, (i + 1) % 6)] = R(i % 2);
  REQUIRE(is_good_paths(c6.graph, phi).ok());
  CHECK_FALSE(verify_decent(c6, phi).has_value());
}

TEST_CASE("decent violations") {
  // Two adjacent type-2 vertices: a.len.
  auto q = path_quad({2, 2}, {R(1)});
  auto v = verify_decent(q.typed, q.phi);
  REQUIRE(v);
  CHECK(v->condition == "a.len");
  CHECK(violation_reproduces(q.typed, q.phi, *v));

  // Type-1 next to type-2: b.len.
  auto b = path_quad({1, 2}, {R(1)});
  auto vb = verify_decent(b.typed, b.phi);
  REQUIRE(vb);
  CHECK(vb->condition == "b.len");

  // Positive label at the type-2 end: no imin, b.1 fails.
  auto c = path_quad({1, 0, 2}, {R(1), R(2)});
  auto vc = verify_decent(c.typed, c.phi);
  REQUIRE(vc);
  CHECK(vc->condition == "b.1");
  CHECK(violation_reproduces(c.typed, c.phi, *vc));
}

TEST_CASE("locking") {
  TypedGraph tg(path_graph(3), {1, 1, 2});
  GluQuad locked{tg, {{EdgePair(0, 1), R(7, 10)}, {EdgePair(1, 2), R(-1)}}, 0};
  CHECK(is_locked(locked, 2));
  REQUIRE(locking_path(locked, 2).has_value());
  CHECK(*locking_path(locked, 2) == std::vector<Vertex>{0, 1, 2});

  GluQuad open{tg, {{EdgePair(0, 1), R(1)}, {EdgePair(1, 2), R(-1)}}, 0};
  CHECK_FALSE(is_locked(open, 2));

  // Endpoints of the interval are excluded.
  GluQuad edge{tg, {{EdgePair(0, 1), R(3, 4)}, {EdgePair(1, 2), R(-1)}}, 0};
  CHECK_FALSE(is_locked(edge, 2));

  auto far = path_quad({1, 1, 0, 2}, {R(7, 10), R(-1), R(-1)});
  CHECK_FALSE(is_locked(far, 3));

  // Two length-2 paths to the root.
  TypedGraph c4(cycle_graph(4), {1, 0, 2, 0});
  GluQuad amb{c4, {}, 0};
  for (const auto& e : c4.graph.edges()) amb.phi[e] = R(1);
  CHECK_THROWS_AS(is_locked(amb, 2), PreconditionError);
}

TEST_CASE("gluable catalog paths") {
  auto short_path = path_quad({1, 0, 2}, {R(3, 4), R(-1)});
  CHECK_FALSE(verify_gluable(short_path).has_value());

  auto q = path_quad({0, 1, 1, 1, 0, 2}, {R(17, 24), R(1), R(1), R(1), R(-1)});
  CHECK(R(2, 3) < R(17, 24));
  CHECK(R(17, 24) <= R(3, 4));
  CHECK_FALSE(verify_gluable(q).has_value());

  auto bad = q;
  bad.phi[EdgePair(0, 1)] = R(1, 2);
  auto v = verify_gluable(bad);
  REQUIRE(v);
  CHECK(v->condition == "glu-a");
  CHECK(violation_reproduces(bad, *v));
}

TEST_CASE("gluable condition c and d") {
  auto adj = path_quad({0, 2}, {R(1)});
  auto v = verify_gluable(adj);
  REQUIRE(v);
  CHECK(v->condition == "glu-c");
  CHECK(violation_reproduces(adj, *v));

  // d2.ii: root edge a local minimum with value in (0, 1/2].
  auto d2ii = path_quad({0, 0, 2}, {R(1, 2), R(1)});
  // b/a conditions do not apply (no type-1 vertex, one type-2 vertex).
  CHECK_FALSE(verify_gluable(d2ii).has_value());
  auto d2bad = path_quad({0, 0, 2}, {R(3, 5), R(1)});
  auto vd = verify_gluable(d2bad);
  REQUIRE(vd);
  CHECK(vd->condition == "glu-d2.i/d2.ii");
  CHECK(violation_reproduces(d2bad, *vd));

  // d3 needs an imin starting at position >= 1.
  auto d3 = path_quad({0, 0, 0, 2}, {R(7, 10), R(1), R(-1)});
  CHECK_FALSE(verify_gluable(d3).has_value());
  auto d3bad = path_quad({0, 0, 0, 2}, {R(7, 10), R(1), R(2)});
  auto v3 = verify_gluable(d3bad);
  REQUIRE(v3);
  CHECK(v3->condition == "glu-d3");
  CHECK(violation_reproduces(d3bad, *v3));
}

TEST_CASE("length and distance readings of condition d differ") {
  // A 5-cycle through the root: w at distance 2 also has a path of length 3.
  // Root 0, w = 2 via 1 (length 2) and via 4, 3 (length 3).
  TypedGraph tg(cycle_graph(5), {0, 0, 2, 0, 0});
  Labeling phi{{EdgePair(0, 1), R(3, 4)}, {EdgePair(1, 2), R(-1)}, {EdgePair(2, 3), R(-1)},
               {EdgePair(3, 4), R(1)},    {EdgePair(0, 4), R(7, 10)}};
  GluQuad q{tg, phi, 0};
  REQUIRE_FALSE(verify_decent(tg, phi).has_value());
  CHECK_FALSE(verify_gluable(q, DSplit::by_length).has_value());
  auto v = verify_gluable(q, DSplit::by_distance);
  REQUIRE(v);
  CHECK(v->condition == "glu-d2.i/d2.ii");
}

TEST_CASE("violations reproduce and verdicts depend only on the pattern") {
  std::mt19937 rng(37);
  const Rational pool[] = {R(-2), R(-1), R(0),    R(1, 4), R(1, 2), R(3, 5), R(2, 3),
                           R(7, 10), R(3, 4), R(4, 5), R(1),    R(2)};
  std::uniform_int_distribution<int> pick(0, 11), ty(0, 2);
  int violations = 0;
  for (int i = 0; i < 400; ++i) {
    Graph g = oracle::random_graph(6, 0.45, rng);
    if (!is_connected(g)) continue;
    std::vector<int> tau(g.order());
    for (int& t : tau) t = ty(rng);
    TypedGraph tg(g, tau);
    Labeling phi, warped;
    for (const auto& e : g.edges()) {
      phi[e] = pool[pick(rng)];
      warped[e] = warp(phi[e]);
    }
    Vertex y = static_cast<Vertex>(rng() % g.order());
    GluQuad q{tg, phi, y}, w{tg, warped, y};
    try {
      auto d1 = verify_decent(tg, phi), d2 = verify_decent(tg, warped);
      CHECK(d1.has_value() == d2.has_value());
      if (d1) CHECK(violation_reproduces(tg, phi, *d1));
      auto g1 = verify_gluable(q), g2 = verify_gluable(w);
      CHECK(g1.has_value() == g2.has_value());
      if (g1) {
        ++violations;
        CHECK(violation_reproduces(q, *g1));
      } else {
        CHECK_FALSE(d1.has_value());
      }
    } catch (const PreconditionError&) {
    }
  }
  CHECK(violations > 0);
}
