#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "gel/canon.hpp"
#include "gel/errors.hpp"
#include "gel/hunt.hpp"
#include "gel/io.hpp"
#include "gel/serialize.hpp"
#include "oracles.hpp"

using namespace gel;

namespace {

Graph data_graph(const std::string& name) {
  return graph_of(read_document(std::string(GEL_TEST_DATA) + "/" + name));
}

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("hunt enumeration level counts") {
  std::vector<std::size_t> levels;
  auto graphs = enumerate_c3_k23_free(9, 13, &levels);
  CHECK(levels == std::vector<std::size_t>{1, 1, 2, 4, 9, 18, 39, 76, 132, 183, 202, 162, 80, 18});
  CHECK(graphs.size() == 18);
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j) CHECK_FALSE(isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("hunt enumeration against brute force on 6 vertices") {
  const int n = 6;
  std::vector<EdgePair> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  auto free_of_c3_k23 = [&](const Graph& g) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        int common = 0;
        for (int c = 0; c < n; ++c) common += c != a && c != b && g.has_edge(a, c) && g.has_edge(b, c);
        if (common >= 3 || (g.has_edge(a, b) && common >= 1)) return false;
      }
    return true;
  };
  std::vector<std::vector<Graph>> classes(all.size() + 1);
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) g.add_edge(all[i].u, all[i].v);
    if (!free_of_c3_k23(g)) continue;
    auto& bucket = classes[g.size()];
    bool dup = false;
    for (const auto& h : bucket) dup = dup || oracle::isomorphic(g, h);
    if (!dup) bucket.push_back(g);
  }
  std::vector<std::size_t> levels;
  enumerate_c3_k23_free(n, 9, &levels);
  for (int m = 0; m <= 9; ++m) CHECK(levels[m] == classes[m].size());
}

TEST_CASE("hunt filter reasons") {
  std::string why;
  CHECK_FALSE(hunt_filter(cycle_graph(5), 4, &why));
  CHECK(why == "girth");
  CHECK_FALSE(hunt_filter(complete_bipartite(2, 3), 4, &why));
  CHECK(why == "K2,3");
  Graph two(8);
  for (int i = 0; i < 4; ++i) {
    two.add_edge(i, (i + 1) % 4);
    two.add_edge(4 + i, 4 + (i + 1) % 4);
  }
  CHECK_FALSE(hunt_filter(two, 4, &why));
  CHECK(why == "disconnected");
  CHECK(hunt_filter(data_graph("hunt9a.g"), 4));
  CHECK(hunt_filter(data_graph("hunt9b.g"), 4));
}

TEST_CASE("hunt finds critical graphs with valid certificates") {
  HuntOptions opt;
  opt.threads = 2;
  std::vector<Certificate> found;
  auto stats = counterexample_hunt(opt, [&](const Certificate& c) { found.push_back(c); });
  CHECK(stats.candidates == 10);
  CHECK(stats.certified == 10);
  CHECK(stats.found == 2);
  CHECK(stats.good + stats.bad_not_critical + stats.found + stats.budget_exceeded == 10);
  REQUIRE(found.size() == 2);
  for (const auto& c : found) {
    CHECK(c.kind == CertKind::Criticality);
    CHECK(c.parts.size() == 14);
    CHECK_FALSE(recheck(c).has_value());
    CHECK((isomorphic(c.graph, data_graph("hunt9a.g")) || isomorphic(c.graph, data_graph("hunt9b.g"))));
  }
  CHECK_FALSE(isomorphic(found[0].graph, found[1].graph));
}

TEST_CASE("hunt checkpoints resume") {
  auto path = temp_file("gel_hunt_checkpoint.json");
  HuntOptions opt;
  opt.checkpoint = path.string();
  opt.max_candidates = 4;
  int first_found = 0;
  auto a = counterexample_hunt(opt, [&](const Certificate&) { ++first_found; });
  CHECK(a.certified == 4);
  REQUIRE(std::filesystem::exists(path));
  {
    std::ifstream in(path);
    Json j = Json::parse(in);
    expect_document(j, "hunt-checkpoint");
    CHECK(j.at("next") == 4);
  }
  opt.max_candidates = 0;
  int second_found = 0;
  auto b = counterexample_hunt(opt, [&](const Certificate&) { ++second_found; });
  CHECK(b.certified == 10);
  CHECK(b.found == 2);
  CHECK(first_found + second_found == 2);

  HuntOptions other = opt;
  other.m = 12;
  CHECK_THROWS_AS(counterexample_hunt(other, {}), PreconditionError);

  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(counterexample_hunt(opt, {}), ParseError);
  std::filesystem::remove(path);
}
