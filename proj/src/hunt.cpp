#include "gel/hunt.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "gel/audit.hpp"
#include "gel/canon.hpp"
#include "gel/errors.hpp"
#include "gel/serialize.hpp"

namespace gel {

namespace {

bool closes_triangle(const Graph& g, Vertex a, Vertex b) {
  for (Vertex c : g.neighbors(a))
    if (g.has_edge(c, b)) return true;
  return false;
}

// Minimum number of edges still needed to lift every degree to two.
int degree_deficit(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d += std::max(0, 2 - g.degree(v));
  return (d + 1) / 2;
}

Json stats_json(const HuntStats& s) {
  return {{"per_level", s.per_level},       {"candidates", s.candidates},
          {"certified", s.certified},       {"good", s.good},
          {"bad_not_critical", s.bad_not_critical}, {"budget_exceeded", s.budget_exceeded},
          {"found", s.found}};
}

void save_checkpoint(const HuntOptions& opt, const HuntStats& s, std::size_t next,
                     const std::vector<Certificate>& found) {
  Json certs = Json::array();
  for (const auto& c : found) certs.push_back(certificate_json(c));
  Json j = document("hunt-checkpoint", {{"n", opt.n},
                                        {"m", opt.m},
                                        {"girth", opt.girth},
                                        {"next", next},
                                        {"stats", stats_json(s)},
                                        {"found", certs}});
  const std::string tmp = opt.checkpoint + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(1) << '\n';
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, opt.checkpoint);
}

}  // namespace

bool hunt_filter(const Graph& g, int girth_wanted, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (!is_connected(g)) return fail("disconnected");
  auto gi = girth(g);
  if (!gi || *gi != girth_wanted) return fail("girth");
  auto f = forbidden_subgraph_scan(g);
  if (f.has_c3) return fail("C3");
  if (f.has_k23) return fail("K2,3");
  CandidateAuditOptions ao;
  auto a = audit_critical_candidate(g, ao);
  for (const auto& c : a.checks)
    if (c.applicable && !c.passed) return fail(c.name);
  return true;
}

std::vector<Graph> enumerate_c3_k23_free(int n, int m, std::vector<std::size_t>* per_level) {
  std::vector<Graph> level{Graph(n)};
  if (per_level) per_level->assign(1, 1);
  for (int k = 0; k < m; ++k) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const Graph& g : level)
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
          if (g.has_edge(a, b) || closes_triangle(g, a, b)) continue;
          Graph h = g;
          h.add_edge(a, b);
          if (degree_deficit(h) > m - k - 1) continue;
          if (forbidden_subgraph_scan(h).has_k23) continue;
          auto cf = canonical_form(h);
          if (!seen.insert(cf.code).second) continue;
          next.push_back(relabel(h, cf.position));
        }
    level = std::move(next);
    if (per_level) per_level->push_back(level.size());
  }
  return level;
}

HuntStats counterexample_hunt(const HuntOptions& opt, const HuntCallback& found_cb,
                              const HuntProgress& progress) {
  HuntStats stats;
  auto graphs = enumerate_c3_k23_free(opt.n, opt.m, &stats.per_level);
  std::vector<Graph> candidates;
  for (auto& g : graphs)
    if (hunt_filter(g, opt.girth)) candidates.push_back(std::move(g));
  stats.candidates = candidates.size();

  std::size_t start = 0;
  std::vector<Certificate> found;
  if (!opt.checkpoint.empty() && std::filesystem::exists(opt.checkpoint)) {
    std::ifstream in(opt.checkpoint);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& ex) {
      throw ParseError(0, std::string("bad checkpoint: ") + ex.what());
    }
    expect_document(j, "hunt-checkpoint");
    if (j.at("n") != opt.n || j.at("m") != opt.m || j.at("girth") != opt.girth)
      throw PreconditionError("checkpoint was written for different parameters");
    start = j.at("next").get<std::size_t>();
    const auto& s = j.at("stats");
    stats.certified = s.at("certified");
    stats.good = s.at("good");
    stats.bad_not_critical = s.at("bad_not_critical");
    stats.budget_exceeded = s.at("budget_exceeded");
    for (const auto& c : j.at("found")) {
      found.push_back(certificate_from_json(c));
      if (auto why = recheck(found.back()))
        throw PostconditionError("checkpointed certificate fails recheck: " + *why);
    }
    stats.found = found.size();
  }

  std::size_t end = candidates.size();
  if (opt.max_candidates) end = std::min(end, start + opt.max_candidates);

  std::mutex mu;
  std::atomic<std::size_t> cursor{start};
  std::atomic<bool> stop{false};
  std::vector<char> done(candidates.size(), 0);
  std::size_t prefix = start;

  auto worker = [&]() {
    GoodSearchOptions so;
    so.budget = opt.budget;
    while (!stop) {
      const std::size_t i = cursor++;
      if (i >= end) return;
      Certificate c;
      bool over = false;
      try {
        c = is_critical(candidates[i], so);
      } catch (const BudgetExceeded&) {
        over = true;
      }
      std::lock_guard<std::mutex> lock(mu);
      ++stats.certified;
      if (over) {
        ++stats.budget_exceeded;
      } else if (c.kind == CertKind::Criticality) {
        ++stats.found;
        found.push_back(c);
        if (found_cb) found_cb(c);
        if (opt.stop_after_first) stop = true;
      } else if (c.parts.size() == 1) {
        ++stats.good;
      } else {
        ++stats.bad_not_critical;
      }
      done[i] = 1;
      while (prefix < end && done[prefix]) ++prefix;
      if (!opt.checkpoint.empty()) save_checkpoint(opt, stats, prefix, found);
      if (progress) progress(stats);
    }
  };

  const int threads = std::max(1, opt.threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (!opt.checkpoint.empty()) save_checkpoint(opt, stats, prefix, found);
  return stats;
}

}  // namespace gel
