#include "doctest.h"

#include <random>

#include "gel/discharging.hpp"
#include "gel/errors.hpp"
#include "gel/serialize.hpp"
#include "instances.hpp"

using namespace gel;

TEST_CASE("random composition scripts replay") {
  std::mt19937_64 rng(5);
  int steps = 0;
  for (int i = 0; i < 60; ++i) {
    auto s = random_script(rng);
    CHECK(s.steps.front().op == ScriptOp::piece);
    auto trace = replay_script(s);
    CHECK(trace.quads.size() == s.steps.size());
    for (const auto& q : trace.quads) {
      CHECK_FALSE(verify_decent(q.typed, q.phi).has_value());
      CHECK_FALSE(verify_gluable(q, s.split).has_value());
    }
    steps += static_cast<int>(s.steps.size());
  }
  CHECK(steps >= 120);
}

TEST_CASE("malformed scripts are rejected") {
  CompositionScript empty;
  CHECK_THROWS_AS(replay_script(empty), PreconditionError);
  std::mt19937_64 rng(9);
  auto s = random_script(rng);
  s.steps.front().op = ScriptOp::sum1;
  CHECK_THROWS_AS(replay_script(s), PreconditionError);
  CHECK_THROWS_AS(script_op_from_name("3sum"), PreconditionError);
}

TEST_CASE("script JSON round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    auto s = random_script(rng);
    Json j = document("script", script_json(s));
    Json back = Json::parse(j.dump());
    expect_document(back, "script");
    auto t = script_from_json(back);
    CHECK(describe(t) == describe(s));
    CHECK(script_json(t) == script_json(s));
    auto a = replay_script(s).quads.back();
    auto b = replay_script(t).quads.back();
    CHECK(a.phi == b.phi);
    CHECK(a.typed.tau == b.typed.tau);
  }
}

TEST_CASE("certificate JSON round trip rechecks") {
  for (const Graph& g : {cycle_graph(3), complete_bipartite(2, 3), cycle_graph(6), petersen_graph()}) {
    Certificate c = is_critical(g);
    Json j = document("certificate", certificate_json(c));
    Json back = Json::parse(j.dump());
    expect_document(back, "certificate");
    Certificate d = certificate_from_json(back);
    CHECK(d.kind == c.kind);
    CHECK(d.parts.size() == c.parts.size());
    CHECK_FALSE(recheck(d).has_value());
    CHECK(certificate_json(d) == certificate_json(c));
  }
  auto c = is_critical(complete_bipartite(2, 3));
  Json j = certificate_json(c);
  j["parts"][1]["labeling"][0][2] = "1000";
  j["parts"][1]["labeling"][1][2] = "1000";
  j["parts"][1]["labeling"][2][2] = "1000";
  CHECK(recheck(certificate_from_json(j)).has_value());
}

TEST_CASE("document tags are checked") {
  Json j = document("certificate", certificate_json(is_critical(cycle_graph(3))));
  CHECK(j.at("schema") == kSchemaVersion);
  CHECK_THROWS_AS(expect_document(j, "script"), ParseError);
  j["schema"] = "gel/0";
  CHECK_THROWS_AS(expect_document(j, "certificate"), ParseError);
  CHECK_THROWS_AS(cert_kind_from_name("Nonsense"), ParseError);
}

TEST_CASE("graph and labeling JSON round trip") {
  Graph g = petersen_graph();
  CHECK(graph_from_json(graph_json(g)).edges() == g.edges());
  Labeling phi;
  int i = 0;
  for (const auto& e : g.edges()) phi[e] = Rational(i++ - 7, 3);
  CHECK(labeling_from_json(labeling_json(phi)) == phi);
}

TEST_CASE("ledger JSON carries the conservation total") {
  Graph g = complete_bipartite(2, 4);
  Json j = ledger_json(discharge(g), g);
  CHECK(j.at("expected_total") == 6 * 6 - 4 * 8);
}

TEST_CASE("random swell instances combine into good labelings") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    auto s = inst::random_swell_instance(rng);
    REQUIRE_FALSE(verify_swell(s.g, s.e).has_value());
    Labeling out = swell_combine(s.g, s.e, s.phi_h, s.phi_rest);
    CHECK(out.size() == static_cast<std::size_t>(s.g.size()));
    CHECK(is_good_paths(s.g, out).ok());
    CHECK(is_good_cycles(s.g, out).ok());
  }
}
