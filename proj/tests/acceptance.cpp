// Acceptance run: one PASS/FAIL line per criterion, runtime limits pinned here.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "gel/canon.hpp"
#include "gel/catalog.hpp"
#include "gel/closure.hpp"
#include "gel/discharging.hpp"
#include "gel/errors.hpp"
#include "gel/generators.hpp"
#include "gel/hunt.hpp"
#include "gel/script.hpp"
#include "gel/search.hpp"
#include "gel/windmill.hpp"
#include "instances.hpp"

using namespace gel;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  bool required;
  std::function<Result()> run;
};

std::string fmt(const char* f, auto... a) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

Result c3_critical() {
  Certificate c = is_critical(cycle_graph(3));
  if (c.kind != CertKind::Criticality) return {false, cert_kind_name(c.kind)};
  const auto& bad = c.parts.at(0);
  const auto covered = bad.stats.orderings_covered;
  bool ok = bad.kind == CertKind::BadExhausted && (covered == 6 || covered == 13);
  int good = 0;
  for (std::size_t i = 1; i < c.parts.size(); ++i) good += c.parts[i].kind == CertKind::GoodLabeling;
  ok = ok && good == static_cast<int>(c.parts.size()) - 1 && good >= 2 && !recheck(c);
  return {ok, fmt("orderings %llu, %d good edge-deleted parts, recheck %s",
                  static_cast<unsigned long long>(covered), good, recheck(c) ? "failed" : "ok")};
}

Result k23_critical() {
  Certificate c = is_critical(complete_bipartite(2, 3));
  if (c.kind != CertKind::Criticality) return {false, cert_kind_name(c.kind)};
  const auto covered = c.parts.at(0).stats.orderings_covered;
  int good = 0;
  for (std::size_t i = 1; i < c.parts.size(); ++i) good += c.parts[i].kind == CertKind::GoodLabeling;
  bool ok = covered == 720 && good == 6 && c.parts.size() == 7 && !recheck(c);
  return {ok, fmt("orderings %llu/720, %d good sub-certificates", static_cast<unsigned long long>(covered), good)};
}

Result cycles_good() {
  int ok = 0;
  for (int n = 4; n <= 10; ++n) {
    Graph g = cycle_graph(n);
    Certificate c = find_good_labeling(g);
    ok += c.kind == CertKind::GoodLabeling && is_good_paths(g, *c.labeling).ok() &&
          is_good_cycles(g, *c.labeling).ok();
  }
  return {ok == 7, fmt("%d/7 cycles C4..C10 good under both verifiers", ok)};
}

// Connected graphs with 1..max_m edges up to isomorphism, by edge augmentation.
std::vector<Graph> connected_graphs(int max_m) {
  std::vector<Graph> out, level{path_graph(2)};
  for (int m = 1; m <= max_m; ++m) {
    out.insert(out.end(), level.begin(), level.end());
    if (m == max_m) break;
    std::vector<Graph> next;
    std::set<std::string> seen;
    auto keep = [&](Graph h) {
      auto cf = canonical_form(h);
      if (seen.insert(cf.code).second) next.push_back(h);
    };
    for (const Graph& g : level) {
      const int n = g.order();
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b)
          if (!g.has_edge(a, b)) {
            Graph h = g;
            h.add_edge(a, b);
            keep(h);
          }
        Graph h = g;
        Vertex v = h.add_vertex();
        h.add_edge(a, v);
        keep(h);
      }
    }
    level = std::move(next);
  }
  return out;
}

Result cross_oracle() {
  auto graphs = connected_graphs(6);
  // Connected graphs by edge count 1..6: 1, 1, 3, 5, 12, 30.
  const std::size_t expected_classes = 52;
  // Ordered set partitions of m edges (Fubini numbers).
  const std::vector<long> fubini{1, 1, 3, 13, 75, 541, 4683};
  long orders = 0, mismatches = 0, equiv_fail = 0, order_count_fail = 0;
  for (const Graph& g : graphs) {
    const int m = g.size();
    auto edges = g.edges();
    std::vector<int> lvl(m, 0);
    long here = 0;
    // All maps edges -> 0..m-1 whose image is an initial segment.
    std::function<void(int)> rec = [&](int i) {
      if (i == m) {
        std::vector<char> used(m, 0);
        int top = -1;
        for (int x : lvl) {
          used[x] = 1;
          top = std::max(top, x);
        }
        for (int x = 0; x <= top; ++x)
          if (!used[x]) return;
        Labeling phi;
        for (int e = 0; e < m; ++e) phi[edges[e]] = Rational(lvl[e]);
        ++here;
        mismatches += is_good_paths(g, phi).ok() != is_good_cycles(g, phi).ok();
        return;
      }
      for (int x = 0; x < m; ++x) {
        lvl[i] = x;
        rec(i + 1);
      }
    };
    rec(0);
    orders += here;
    order_count_fail += here != fubini[m];
    equiv_fail += !certify_equivalence_distinct_vs_weak(g);
  }
  bool ok = graphs.size() == expected_classes && mismatches == 0 && equiv_fail == 0 && order_count_fail == 0;
  return {ok, fmt("%zu graphs, %ld weak orders, %ld verifier mismatches, %ld search-existence mismatches",
                  graphs.size(), orders, mismatches, equiv_fail)};
}

Result catalog_fidelity() {
  // Catalog labels of the path to a type-2 vertex, from the root end.
  auto expected = [](int len) {
    std::vector<Rational> x(len, Rational(1));
    x.front() = len == 2 ? Rational(3, 4) : Rational(17, 24);
    x.back() = Rational(-1);
    return x;
  };
  int ok = 0, total = 0;
  std::optional<Violation> perturbed;
  for (int rt : {0, 1})
    for (int len = 2; len <= 8; ++len) {
      CatalogParams p;
      p.family = Family::path_to_type2;
      p.length = len;
      p.root_type = rt;
      GluQuad q = catalog(p).quad;
      auto x = expected(len);
      bool same = true;
      for (int i = 0; i < len; ++i) same = same && q.phi.at(EdgePair(i, i + 1)) == x[i];
      ++total;
      ok += same && !verify_decent(q.typed, q.phi) && !verify_gluable(q);
      if (len == 5 && rt == 1) {
        q.phi[EdgePair(0, 1)] = Rational(1, 2);
        perturbed = verify_gluable(q);
      }
    }
  bool glu_a = perturbed && perturbed->condition == "glu-a";
  return {ok == total && glu_a, fmt("%d/%d catalog path labelings match and are decent and gluable; 17/24 -> 1/2 gives %s",
                                     ok, total, perturbed ? perturbed->condition.c_str() : "no violation")};
}

Result evil_wheel() {
  TypedGraph w = wheel_graph({3, 3}, 1);
  Certificate good = find_good_labeling(w.graph);
  Certificate decent = find_decent_labeling(w);
  bool ok = w.graph.size() == 8 && good.kind == CertKind::GoodLabeling && decent.kind == CertKind::NoDecentLabeling &&
            !recheck(good);
  std::string k3;
  try {
    PatternOptions po;
    po.budget = 2'000'000;
    Certificate c = find_decent_labeling(wheel_graph({3, 3, 3}, 1), po);
    k3 = cert_kind_name(c.kind);
  } catch (const BudgetExceeded&) {
    k3 = "budget exceeded";
  }
  return {ok, fmt("k=2: %s, %s (%llu patterns); k=3 reported: %s", cert_kind_name(good.kind),
                  cert_kind_name(decent.kind), static_cast<unsigned long long>(decent.stats.nodes), k3.c_str())};
}

Result non_evil_wheels() {
  struct W {
    std::vector<int> seg;
    int center;
  };
  std::vector<W> wheels{{{3, 3}, 0}, {{3, 3, 3}, 0}, {{3, 4}, 1}};
  int ok = 0;
  std::ostringstream d;
  for (const auto& w : wheels) {
    CatalogParams p;
    p.family = Family::wheel;
    p.segments = w.seg;
    p.center_type = w.center;
    bool pass = false;
    try {
      auto c = catalog(p);
      pass = c.decent && !verify_decent(c.quad.typed, c.quad.phi) && !verify_gluable(c.quad);
    } catch (const std::exception& e) {
      d << "[" << e.what() << "] ";
    }
    ok += pass;
    d << (wheel_kind(w.seg, w.center) == WheelKind::benign ? "benign" : "almost-evil") << " k="
      << w.seg.size() << (pass ? " ok; " : " FAILED; ");
  }
  return {ok == 3, d.str()};
}

Result gluing_closure() {
  std::mt19937_64 rng(2024);
  int fail = 0, steps = 0;
  for (int i = 0; i < 200; ++i) {
    auto s = random_script(rng);
    try {
      auto t = replay_script(s);
      for (const auto& q : t.quads) fail += verify_gluable(q, s.split).has_value();
      steps += static_cast<int>(t.quads.size());
    } catch (const std::exception&) {
      ++fail;
    }
  }
  return {fail == 0, fmt("200 scripts, %d steps, %d failures", steps, fail)};
}

Result swell_combination() {
  std::mt19937_64 rng(99);
  int fail = 0;
  for (int i = 0; i < 50; ++i) {
    auto s = inst::random_swell_instance(rng);
    try {
      if (verify_swell(s.g, s.e)) {
        ++fail;
        continue;
      }
      fail += !is_good_paths(s.g, swell_combine(s.g, s.e, s.phi_h, s.phi_rest)).ok();
    } catch (const std::exception&) {
      ++fail;
    }
  }
  return {fail == 0, fmt("50 instances, %d failures", fail)};
}

Result conservation() {
  std::mt19937_64 rng(7);
  int fail = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = inst::pick(rng, 3, 14);
    const int m = inst::pick(rng, n - 1, std::min(n * (n - 1) / 2, 2 * n + 2));
    Graph g = random_graph(rng, n, m);
    ChargeLedger l = discharge(g);
    fail += l.total_final() != Rational(6 * g.order() - 4 * g.size());
  }
  Graph k24 = complete_bipartite(2, 4);
  ChargeLedger l = discharge(k24);
  bool hand = l.final_charge[0] == Rational(2) && l.final_charge[1] == Rational(2);
  for (Vertex v = 2; v < 6; ++v) hand = hand && l.final_charge[v] == Rational(0);
  return {fail == 0 && hand, fmt("1000 graphs, %d conservation failures; K2,4 u_i -> 0, y_j -> 2: %s", fail,
                                 hand ? "yes" : "no")};
}

Result closure_pipeline() {
  std::mt19937_64 rng(31);
  int ok = 0, irregular = 0;
  std::string first_fail;
  for (int i = 0; i < 50; ++i) {
    auto sw = random_windmill(rng);
    bool pass = false;
    try {
      Windmill w;
      for (auto& c : find_windmills(sw.graph, true))
        if (c.axis == sw.axis) w = c;
      auto r = build_closure_labeling(sw.graph, w);
      pass = !r.obstruction && !verify_decent(r.closure, r.phi) && r.spot_check_failures.empty() &&
             girth(sw.graph).value_or(99) >= 5;
      irregular += r.irregular_flag.has_value();
    } catch (const std::exception& e) {
      if (first_fail.empty()) first_fail = e.what();
    }
    ok += pass;
  }
  int evil = 0;
  for (int i = 0; i < 10; ++i) {
    WindmillPlanOptions o;
    o.force_evil = true;
    auto sw = random_windmill(rng, o);
    for (auto& c : find_windmills(sw.graph, true))
      if (c.axis == sw.axis) evil += build_closure_labeling(sw.graph, c).obstruction;
  }
  return {ok == 50 && evil == 10,
          fmt("%d/50 decent closures (%d with an irregular flag), %d/10 evil injections obstructed%s%s", ok,
              irregular, evil, first_fail.empty() ? "" : "; ", first_fail.c_str())};
}

Result hunt() {
  HuntOptions o;
  o.threads = std::max(1u, std::thread::hardware_concurrency());
  int valid = 0, found = 0;
  auto stats = counterexample_hunt(o, [&](const Certificate& c) {
    ++found;
    valid += c.kind == CertKind::Criticality && !recheck(c);
  });
  return {valid >= 1, fmt("%zu candidates, %d critical graphs, %d certificates re-verify", stats.candidates, found,
                          valid)};
}

}  // namespace

int main() {
  std::vector<Criterion> all{
      {1, "C3 criticality", 1, true, c3_critical},
      {2, "K2,3 criticality", 5, true, k23_critical},
      {3, "cycles are good", 1, true, cycles_good},
      {4, "cross-oracle equivalence", 600, true, cross_oracle},
      {5, "catalog fidelity", 1, true, catalog_fidelity},
      {6, "evil wheel separation", 600, true, evil_wheel},
      {7, "non-evil wheels decent", 1800, true, non_evil_wheels},
      {8, "gluing closure", 600, true, gluing_closure},
      {9, "swell combination", 60, true, swell_combination},
      {10, "discharging conservation", 60, true, conservation},
      {11, "closure-labeling pipeline", 1800, true, closure_pipeline},
      {12, "counterexample hunt", 4 * 3600, true, hunt},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = s <= c.limit_s;
    bool pass = r.pass && in_time;
    failed += !pass && c.required;
    std::cout << "criterion " << std::setw(2) << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.name << ": "
              << r.detail << " [" << std::fixed << std::setprecision(2) << s << " s, limit " << c.limit_s << " s"
              << (in_time ? "" : ", over time") << "]\n"
              << std::flush;
  }
  std::cout << (failed ? "acceptance FAILED: " + std::to_string(failed) + " criteria" : "acceptance passed") << '\n';
  return failed ? 1 : 0;
}
