#include "gel/audit.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "gel/canon.hpp"
#include "gel/errors.hpp"
#include "gel/windmill.hpp"

namespace gel {

namespace {

CandidateCheck named(std::string name) {
  CandidateCheck c;
  c.name = std::move(name);
  return c;
}

std::string join(const std::vector<Vertex>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "-" : "") << vs[i];
  return os.str();
}

// Some outside vertex with two neighbours in `set`, or -1.
Vertex common_outside_neighbour(const Graph& g, const std::vector<char>& in_set) {
  std::vector<int> hits(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in_set[v]) continue;
    for (Vertex u : g.neighbors(v))
      if (!in_set[u] && ++hits[u] >= 2) return u;
  }
  return -1;
}

CandidateCheck check_cycles(const Graph& g, std::size_t cap) {
  CandidateCheck c = named("cycle-neighbour");
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) <= 3) keep.push_back(v);
  const auto sub = induced_subgraph(g, keep);
  std::vector<std::vector<Vertex>> cycles;
  try {
    cycles = enumerate_cycles(sub.graph, std::nullopt, cap);
  } catch (const BudgetExceeded&) {
    c.applicable = false;
    c.detail = "skipped: more than " + std::to_string(cap) + " cycles";
    return c;
  }
  std::size_t spanning = 0;
  for (const auto& cyc : cycles) {
    // A spanning cycle with chords is outside what the matching-cut argument
    // covers; a spanning chordless one means g is a cycle other than C3.
    if (static_cast<int>(cyc.size()) == g.order() && g.size() > g.order()) {
      ++spanning;
      continue;
    }
    std::vector<char> in(g.order(), 0);
    std::vector<Vertex> host;
    for (Vertex v : cyc) {
      host.push_back(sub.new_to_old[v]);
      in[host.back()] = 1;
    }
    if (common_outside_neighbour(g, in) < 0) {
      c.passed = false;
      c.witness = host;
      c.detail = "cycle " + join(host) + " has no two vertices with a common outside neighbour";
      return c;
    }
  }
  c.detail = std::to_string(cycles.size() - spanning) + " cycles checked";
  if (spanning) c.detail += ", " + std::to_string(spanning) + " spanning cycles not evaluated";
  return c;
}

CandidateCheck check_paths(const Graph& g, std::size_t cap) {
  CandidateCheck c = named("path-neighbour");
  const int n = g.order();
  std::vector<char> on(n, 0);
  std::vector<Vertex> path;
  std::size_t count = 0, spanning = 0, steps = 0;
  bool over = false;

  auto dfs = [&](auto&& self, Vertex x) -> bool {
    for (Vertex y : g.neighbors(x)) {
      if (on[y] || g.degree(y) > 3) continue;
      if (++steps > cap) {
        over = true;
        return true;
      }
      path.push_back(y);
      on[y] = 1;
      if (g.degree(y) == 2 && y > path.front()) {
        ++count;
        if (static_cast<int>(path.size()) == n) {
          ++spanning;
        } else if (common_outside_neighbour(g, on) < 0) {
          c.passed = false;
          c.witness = path;
          c.detail = "path " + join(path) + " has no two vertices with a common outside neighbour";
          return true;
        }
      }
      if (self(self, y)) return true;
      on[y] = 0;
      path.pop_back();
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (g.degree(s) != 2) continue;
    path.assign(1, s);
    std::fill(on.begin(), on.end(), 0);
    on[s] = 1;
    if (dfs(dfs, s)) break;
  }
  if (over) {
    c.applicable = false;
    c.passed = true;
    c.detail = "skipped: more than " + std::to_string(cap) + " search steps";
  } else if (c.passed) {
    c.detail = std::to_string(count) + " paths checked";
    if (spanning) c.detail += ", " + std::to_string(spanning) + " spanning paths not evaluated";
  }
  return c;
}

CandidateCheck check_shortest_22(const Graph& g) {
  CandidateCheck c = named("shortest-2-2-path");
  const int n = g.order();
  for (Vertex x0 = 0; x0 < n; ++x0) {
    if (g.degree(x0) != 2) continue;
    for (Vertex x1 : g.neighbors(x0)) {
      if (g.degree(x1) == 2) {
        c.passed = false;
        c.witness = {x0, x1};
        c.detail = "edge " + join(c.witness) + " joins two 2-vertices";
        return c;
      }
      if (g.degree(x1) != 3) continue;
      const EdgePair tip(x0, x1);
      std::vector<int> dist(n, -1), parent(n, -1);
      std::vector<Vertex> order{x1};
      dist[x1] = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        for (Vertex u : g.neighbors(v)) {
          if (dist[u] >= 0 || EdgePair(u, v) == tip) continue;
          dist[u] = dist[v] + 1;
          order.push_back(u);
        }
      }
      // Reachable along distance-increasing steps through 3-vertices.
      std::vector<char> reach(n, 0);
      reach[x1] = 1;
      for (Vertex v : order) {
        if (!reach[v]) continue;
        if (v != x1 && g.degree(v) == 2 && v != x0) {
          std::vector<Vertex> p{v};
          while (p.back() != x1) p.push_back(parent[p.back()]);
          p.push_back(x0);
          std::reverse(p.begin(), p.end());
          c.passed = false;
          c.witness = p;
          c.detail = "internally shortest 3-path " + join(p) + " joins two 2-vertices";
          return c;
        }
        if (g.degree(v) != 3) continue;
        for (Vertex u : g.neighbors(v))
          if (dist[u] == dist[v] + 1 && !reach[u]) {
            reach[u] = 1;
            parent[u] = v;
          }
      }
    }
  }
  return c;
}

CandidateCheck check_sails(const Graph& g) {
  CandidateCheck c = named("sails-disjoint");
  const auto sails = find_sails(g);
  std::vector<std::vector<Vertex>> inner;
  for (const auto& s : sails) {
    std::vector<Vertex> in(s.path.begin() + 1, s.path.end() - 1);
    std::sort(in.begin(), in.end());
    inner.push_back(std::move(in));
  }
  for (std::size_t i = 0; i < sails.size(); ++i)
    for (std::size_t j = i + 1; j < sails.size(); ++j) {
      if (sails[i].tip() == sails[j].tip()) continue;
      std::vector<Vertex> both;
      std::set_intersection(inner[i].begin(), inner[i].end(), inner[j].begin(), inner[j].end(),
                            std::back_inserter(both));
      if (!both.empty()) {
        c.passed = false;
        c.witness = both;
        c.detail = "sails " + join(sails[i].path) + " and " + join(sails[j].path) +
                   " have distinct tips and share an inner vertex";
        return c;
      }
    }
  c.detail = std::to_string(sails.size()) + " sails";
  return c;
}

}  // namespace

bool CandidateAudit::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CandidateCheck& c) { return !c.applicable || c.passed; });
}

const CandidateCheck* CandidateAudit::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

CandidateAudit audit_critical_candidate(const Graph& g, const CandidateAuditOptions& opt) {
  CandidateAudit r;
  const bool is_c3 = g.order() == 3 && g.size() == 3;
  const bool is_k23 = g.order() == 5 && g.size() == 6 && isomorphic(g, complete_bipartite(2, 3));

  {
    CandidateCheck c = named("min-degree");
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) < 2) {
        c.passed = false;
        c.witness = {v};
        c.detail = "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v));
        break;
      }
    r.checks.push_back(c);
  }
  {
    CandidateCheck c = named("adjacent-2-vertices");
    if (is_c3) {
      c.applicable = false;
      c.detail = "C3 exception";
    } else {
      for (const auto& e : g.edges())
        if (g.degree(e.u) == 2 && g.degree(e.v) == 2) {
          c.passed = false;
          c.witness = {e.u, e.v};
          c.detail = "2-vertices " + join(c.witness) + " are adjacent";
          break;
        }
    }
    r.checks.push_back(c);
  }
  {
    CandidateCheck c = named("matching-cut");
    if (!opt.matching_cut) {
      c.applicable = false;
      c.detail = "disabled";
    } else if (auto cut = has_matching_cut(g)) {
      c.passed = false;
      std::ostringstream os;
      os << "matching cut";
      for (const auto& e : *cut) {
        c.witness.push_back(e.u);
        c.witness.push_back(e.v);
        os << ' ' << e.u << '-' << e.v;
      }
      if (cut->empty()) os << " (disconnected)";
      c.detail = os.str();
    }
    r.checks.push_back(c);
  }
  if (is_c3 || is_k23) {
    const std::string why = is_c3 ? "C3 exception" : "K2,3 exception";
    for (const char* name : {"cycle-neighbour", "path-neighbour"}) {
      CandidateCheck c = named(name);
      c.applicable = false;
      c.detail = why;
      r.checks.push_back(c);
    }
  } else {
    r.checks.push_back(check_cycles(g, opt.cap));
    r.checks.push_back(check_paths(g, opt.cap));
  }
  // Both remaining statements need girth at least five.
  const auto gi = girth(g);
  if (gi && *gi < 5) {
    for (const char* name : {"shortest-2-2-path", "sails-disjoint"}) {
      CandidateCheck c = named(name);
      c.applicable = false;
      c.detail = "girth " + std::to_string(*gi) + " < 5";
      r.checks.push_back(c);
    }
    r.advisories.push_back("girth " + std::to_string(*gi) +
                           " < 5: sail and windmill statements carry no guarantee");
  } else {
    r.checks.push_back(check_shortest_22(g));
    r.checks.push_back(check_sails(g));
  }
  return r;
}

}  // namespace gel
