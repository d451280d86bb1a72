#include "gel/search.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "gel/canon.hpp"
#include "gel/errors.hpp"

namespace gel {

const char* cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::GoodLabeling: return "GoodLabeling";
    case CertKind::BadExhausted: return "BadExhausted";
    case CertKind::Criticality: return "Criticality";
    case CertKind::NotCritical: return "NotCritical";
    case CertKind::DecentLabeling: return "DecentLabeling";
    case CertKind::NoDecentLabeling: return "NoDecentLabeling";
    case CertKind::GluableLabeling: return "GluableLabeling";
    case CertKind::NoGluableLabeling: return "NoGluableLabeling";
  }
  return "?";
}

namespace {

constexpr int kMaxCounted = 20;

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

// One worker of the total-order search. Reach[s] holds every vertex reached
// from s by a nondecreasing path in the labeled prefix. A new maximum edge ab
// closes a cycle with a single local minimum iff some s reaches both a and b
// (counting s itself), and that test is exact for total orders.
struct OrderSearch {
  const Graph& g;
  int n, m;
  std::uint64_t budget;
  std::atomic<std::uint64_t>& shared_nodes;
  const std::atomic<int>& stop_below;  // branches above a found solution may quit
  int branch = 0;

  std::vector<std::uint64_t> reach;
  std::vector<int> order;
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> failed;
  SearchStats stats;
  bool counted;

  OrderSearch(const Graph& g, std::uint64_t budget, std::atomic<std::uint64_t>& nodes,
              const std::atomic<int>& stop)
      : g(g), n(g.order()), m(g.size()), budget(budget), shared_nodes(nodes), stop_below(stop) {
    reach.assign(n, 0);
    counted = m <= kMaxCounted;
  }

  bool conflicts(int e) const {
    const auto& ed = g.edge(e);
    const std::uint64_t a = 1ULL << ed.u, b = 1ULL << ed.v;
    for (int s = 0; s < n; ++s) {
      std::uint64_t r = reach[s] | (1ULL << s);
      if ((r & a) && (r & b)) return true;
    }
    return false;
  }

  void place(int e, std::vector<std::uint64_t>& saved) {
    saved = reach;
    const auto& ed = g.edge(e);
    const std::uint64_t a = 1ULL << ed.u, b = 1ULL << ed.v;
    for (int s = 0; s < n; ++s) {
      std::uint64_t r = saved[s] | (1ULL << s);
      if (r & a) reach[s] |= b;
      if (r & b) reach[s] |= a;
    }
  }

  std::uint64_t cover(int depth_after) const {
    return counted ? factorial(m - depth_after) : 0;
  }

  // used: mask of placed edges; depth = popcount(used).
  bool rec(std::uint64_t used, int depth) {
    if (depth == m) {
      ++stats.leaves;
      stats.orderings_covered += cover(depth);
      return true;
    }
    if (stop_below.load(std::memory_order_relaxed) < branch) return false;
    std::vector<std::uint64_t> saved;
    for (int e = 0; e < m; ++e) {
      if (used >> e & 1ULL) continue;
      ++stats.nodes;
      if (shared_nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget)
        throw BudgetExceeded("goodness search exceeded " + std::to_string(budget) + " nodes");
      if (conflicts(e)) {
        ++stats.prunes;
        stats.orderings_covered += cover(depth + 1);
        continue;
      }
      place(e, saved);
      const std::uint64_t nu = used | (1ULL << e);
      std::vector<std::uint64_t> key;
      key.reserve(n + 1);
      key.push_back(nu);
      key.insert(key.end(), reach.begin(), reach.end());
      if (failed.count(key)) {
        ++stats.memo_hits;
        stats.orderings_covered += cover(depth + 1);
        reach = saved;
        continue;
      }
      order.push_back(e);
      if (rec(nu, depth + 1)) return true;
      order.pop_back();
      failed.insert(std::move(key));
      reach = saved;
    }
    return false;
  }

  // Search with `first` fixed as the lowest label.
  bool run_branch(int first) {
    std::vector<std::uint64_t> saved;
    ++stats.nodes;
    shared_nodes.fetch_add(1, std::memory_order_relaxed);
    place(first, saved);
    order.assign(1, first);
    bool ok = rec(1ULL << first, 1);
    if (!ok) {
      order.clear();
      reach.assign(n, 0);
    }
    return ok;
  }
};

Labeling labels_from_order(const Graph& g, const std::vector<int>& order) {
  Labeling phi;
  for (std::size_t i = 0; i < order.size(); ++i)
    phi[g.edge(order[i])] = Rational(static_cast<std::int64_t>(i + 1));
  return phi;
}

void add_stats(SearchStats& into, const SearchStats& s, std::uint64_t weight = 1) {
  into.nodes += s.nodes;
  into.prunes += s.prunes;
  into.memo_hits += s.memo_hits;
  into.leaves += s.leaves;
  into.rejected_leaves += s.rejected_leaves;
  into.orderings_covered += s.orderings_covered * weight;
}

std::vector<int> bfs_edge_order(const Graph& g, Vertex start) {
  std::vector<int> order;
  std::vector<char> seen_e(g.size(), 0), seen_v(g.order(), 0);
  std::deque<Vertex> q;
  auto visit_from = [&](Vertex s) {
    seen_v[s] = 1;
    q.push_back(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      for (std::size_t i = 0; i < g.neighbors(x).size(); ++i) {
        int e = g.incident(x)[i];
        if (!seen_e[e]) {
          seen_e[e] = 1;
          order.push_back(e);
        }
        Vertex y = g.neighbors(x)[i];
        if (!seen_v[y]) {
          seen_v[y] = 1;
          q.push_back(y);
        }
      }
    }
  };
  if (g.order() > 0) visit_from(start);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!seen_v[v]) visit_from(v);
  return order;
}

std::vector<int> path_edges(const Graph& g, const std::vector<Vertex>& p, bool closed) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out.push_back(g.edge_id(p[i], p[i + 1]));
  if (closed && p.size() > 2) out.push_back(g.edge_id(p.back(), p.front()));
  return out;
}

void add_cycle_constraints(const Graph& g, PatternProblem& p) {
  for (const auto& c : enumerate_cycles(g))
    p.constraints.push_back({ConstraintKind::cycle_good, path_edges(g, c, true)});
}

void add_decent_constraints(const TypedGraph& tg, PatternProblem& p) {
  const Graph& g = tg.graph;
  add_cycle_constraints(g, p);
  auto is2 = [&](Vertex v) { return tg.tau[v] == 2; };
  auto is1 = [&](Vertex v) { return tg.tau[v] == 1; };
  for_each_t_simple_path(tg, 2, is2, is2, [&](const std::vector<Vertex>& path) {
    if (path.front() < path.back())
      p.constraints.push_back({ConstraintKind::decent_a, path_edges(g, path, false)});
    return true;
  });
  for_each_t_simple_path(tg, 1, is1, is2, [&](const std::vector<Vertex>& path) {
    p.constraints.push_back({ConstraintKind::decent_b, path_edges(g, path, false)});
    return true;
  });
}

Certificate pattern_certificate(const Graph& g, const std::optional<std::vector<Rational>>& sol,
                                const PatternStats& ps, CertKind yes, CertKind no) {
  Certificate c;
  c.graph = g;
  c.kind = sol ? yes : no;
  if (sol) c.labeling = labeling_from(g, *sol);
  c.stats.nodes = ps.nodes;
  c.stats.prunes = ps.prunes;
  c.stats.leaves = ps.leaves;
  c.stats.rejected_leaves = ps.rejected_leaves;
  return c;
}

}  // namespace

Certificate find_good_labeling(const Graph& g, const GoodSearchOptions& opt) {
  if (g.order() > 64 || g.size() > 64)
    throw PreconditionError("goodness search supports at most 64 vertices and 64 edges");
  Certificate cert;
  cert.graph = g;
  const int m = g.size();
  cert.stats.orderings_total = m <= kMaxCounted ? factorial(m) : 0;
  if (m == 0) {
    cert.kind = CertKind::GoodLabeling;
    cert.labeling = Labeling{};
    cert.stats.orderings_covered = 1;
    return cert;
  }

  std::vector<int> reps;
  std::vector<std::uint64_t> weight(m, 0);
  if (opt.symmetry) {
    auto orbit = edge_orbits(g);
    for (int e = 0; e < m; ++e) ++weight[orbit[e]];
    for (int e = 0; e < m; ++e)
      if (orbit[e] == e) reps.push_back(e);
  } else {
    for (int e = 0; e < m; ++e) {
      reps.push_back(e);
      weight[e] = 1;
    }
  }

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<int> found_branch{static_cast<int>(reps.size())};
  std::atomic<int> next{0};
  std::mutex mu;
  std::vector<std::optional<std::vector<int>>> results(reps.size());
  std::vector<SearchStats> branch_stats(reps.size());
  std::exception_ptr error;

  auto worker = [&]() {
    OrderSearch s(g, opt.budget, nodes, found_branch);
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= static_cast<int>(reps.size()) || i > found_branch.load()) return;
      s.branch = i;
      s.stats = {};
      try {
        bool ok = s.run_branch(reps[i]);
        std::lock_guard<std::mutex> lock(mu);
        branch_stats[i] = s.stats;
        if (ok) {
          results[i] = s.order;
          int cur = found_branch.load();
          while (i < cur && !found_branch.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        found_branch.store(-1);
        return;
      }
    }
  };

  const int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(reps.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (results[i]) {
      add_stats(cert.stats, branch_stats[i]);
      cert.kind = CertKind::GoodLabeling;
      cert.labeling = labels_from_order(g, *results[i]);
      if (!is_good_paths(g, *cert.labeling).ok())
        throw PostconditionError("goodness search returned a labeling the verifier rejects");
      return cert;
    }
    add_stats(cert.stats, branch_stats[i], weight[reps[i]]);
  }
  cert.kind = CertKind::BadExhausted;
  if (cert.stats.orderings_total && cert.stats.orderings_covered != cert.stats.orderings_total)
    throw PostconditionError("exhaustion accounted for " +
                             std::to_string(cert.stats.orderings_covered) + " of " +
                             std::to_string(cert.stats.orderings_total) + " orderings");
  return cert;
}

Certificate is_critical(const Graph& g, const GoodSearchOptions& opt) {
  Certificate bundle;
  bundle.graph = g;
  Certificate self = find_good_labeling(g, opt);
  if (self.kind == CertKind::GoodLabeling) {
    bundle.kind = CertKind::NotCritical;
    bundle.note = "graph has a good labeling";
    bundle.parts.push_back(std::move(self));
    return bundle;
  }
  bundle.parts.push_back(std::move(self));
  for (const auto& e : sorted_edges(g)) {
    Certificate sub = find_good_labeling(delete_edge(g, e), opt);
    sub.deleted_edge = e;
    if (sub.kind != CertKind::GoodLabeling) {
      bundle.kind = CertKind::NotCritical;
      bundle.note = "deleting edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                    " leaves a bad graph";
      bundle.parts.push_back(std::move(sub));
      return bundle;
    }
    bundle.parts.push_back(std::move(sub));
  }
  bundle.kind = CertKind::Criticality;
  if (auto why = recheck(bundle)) throw PostconditionError("criticality bundle: " + *why);
  return bundle;
}

std::optional<std::string> recheck(const Certificate& c) {
  const Graph& g = c.graph;
  switch (c.kind) {
    case CertKind::GoodLabeling: {
      if (!c.labeling) return "good-labeling certificate without labels";
      if (c.labeling->size() != static_cast<std::size_t>(g.size()))
        return "labeling does not cover the edges";
      for (const auto& [e, v] : *c.labeling)
        if (!g.has_edge(e)) return "label on a non-edge";
      if (!is_good_paths(g, *c.labeling).ok()) return "path verifier rejects the labeling";
      if (g.size() <= 24 && !is_good_cycles(g, *c.labeling).ok())
        return "cycle verifier rejects the labeling";
      return std::nullopt;
    }
    case CertKind::BadExhausted:
      if (g.size() > kMaxCounted) return "exhaustion over more than 20 edges is not counted";
      if (c.stats.orderings_total != factorial(g.size()) ||
          c.stats.orderings_covered != c.stats.orderings_total)
        return "exhaustion does not cover every ordering";
      return std::nullopt;
    case CertKind::Criticality: {
      if (c.parts.size() != static_cast<std::size_t>(g.size()) + 1)
        return "bundle needs one exhaustion and one labeling per edge";
      const auto& head = c.parts[0];
      if (head.kind != CertKind::BadExhausted || head.deleted_edge || !(head.graph == g))
        return "first part must exhaust the graph itself";
      if (auto why = recheck(head)) return why;
      std::vector<EdgePair> seen;
      for (std::size_t i = 1; i < c.parts.size(); ++i) {
        const auto& p = c.parts[i];
        if (p.kind != CertKind::GoodLabeling || !p.deleted_edge) return "bad sub-certificate";
        if (!g.has_edge(*p.deleted_edge)) return "sub-certificate deletes a non-edge";
        if (!(p.graph == delete_edge(g, *p.deleted_edge)))
          return "sub-certificate graph is not G - e";
        if (auto why = recheck(p)) return why;
        seen.push_back(*p.deleted_edge);
      }
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        return "edge deleted twice in the bundle";
      return std::nullopt;
    }
    case CertKind::NotCritical:
      for (const auto& p : c.parts)
        if (auto why = recheck(p)) return why;
      return std::nullopt;
    case CertKind::DecentLabeling: {
      if (!c.labeling || !c.types) return "decent certificate incomplete";
      if (auto v = verify_decent(TypedGraph(g, *c.types), *c.labeling)) return describe(*v);
      return std::nullopt;
    }
    case CertKind::GluableLabeling: {
      if (!c.labeling || !c.types || !c.root) return "gluable certificate incomplete";
      GluQuad q{TypedGraph(g, *c.types), *c.labeling, *c.root};
      if (auto v = verify_gluable(q)) return describe(*v);
      return std::nullopt;
    }
    case CertKind::NoDecentLabeling:
    case CertKind::NoGluableLabeling:
      return std::nullopt;  // only a rerun can confirm an enumeration
  }
  return "unknown certificate kind";
}

std::optional<Labeling> find_good_weak(const Graph& g, std::uint64_t budget) {
  PatternProblem p;
  p.edge_count = g.size();
  p.order = bfs_edge_order(g, 0);
  add_cycle_constraints(g, p);
  PatternStats st;
  auto sol = solve_pattern(p, budget, st, [&](const std::vector<Rational>& x) {
    return is_good_paths(g, labeling_from(g, x)).ok();
  });
  if (!sol) return std::nullopt;
  return labeling_from(g, *sol);
}

bool certify_equivalence_distinct_vs_weak(const Graph& g) {
  bool distinct = find_good_labeling(g).kind == CertKind::GoodLabeling;
  bool weak = find_good_weak(g).has_value();
  return distinct == weak;
}

PatternProblem decent_problem(const TypedGraph& tg) {
  PatternProblem p;
  p.edge_count = tg.graph.size();
  p.zero = add_constant(p, Rational(0));
  p.order = bfs_edge_order(tg.graph, 0);
  add_decent_constraints(tg, p);
  return p;
}

PatternProblem gluable_problem(const TypedGraph& tg, Vertex y, const PatternOptions& opt,
                               bool& infeasible) {
  const Graph& g = tg.graph;
  if (y < 0 || y >= g.order()) throw PreconditionError("root out of range");
  infeasible = false;
  PatternProblem p;
  p.edge_count = g.size();
  p.zero = add_constant(p, Rational(0));
  p.half = add_constant(p, Rational(1, 2));
  p.two_thirds = add_constant(p, Rational(2, 3));
  p.three_quarters = add_constant(p, Rational(3, 4));
  p.pinned.assign(g.size(), -1);
  for (const auto& [e, v] : opt.pins) {
    int id = g.edge_id(e);
    if (id < 0) throw PreconditionError("pinned label on a non-edge");
    int idx = add_constant(p, v);
    p.pinned[id] = idx;
  }
  p.order = bfs_edge_order(g, y);
  add_decent_constraints(tg, p);

  for (Vertex w : g.neighbors(y))
    if (tg.tau[w] == 2) infeasible = true;
  for (Vertex v1 : g.neighbors(y)) {
    if (tg.tau[v1] != 1) continue;
    for (Vertex v2 : g.neighbors(v1))
      if (v2 != y && tg.tau[v2] <= 1)
        p.constraints.push_back({ConstraintKind::glu_a, path_edges(g, {y, v1, v2}, false)});
  }
  for_each_t_simple_path(
      tg, 1, [&](Vertex v) { return v != y && tg.tau[v] == 1; }, [&](Vertex v) { return v == y; },
      [&](const std::vector<Vertex>& path) {
        p.constraints.push_back({ConstraintKind::glu_b, path_edges(g, path, false)});
        return true;
      });
  const auto dist = bfs_distances(g, y);
  for (Vertex w = 0; w < g.order(); ++w) {
    if (tg.tau[w] != 2 || w == y || dist[w] < 2) continue;
    if (dist[w] == 2) {
      int common = 0;
      for (Vertex u : g.neighbors(w))
        if (g.has_edge(u, y)) ++common;
      if (common > 1) infeasible = true;
    }
    for_each_t_simple_path(
        tg, 2, [&](Vertex v) { return v == w; }, [&](Vertex v) { return v == y; },
        [&](const std::vector<Vertex>& path) {
          std::vector<Vertex> r(path.rbegin(), path.rend());
          bool d2 = opt.split == DSplit::by_length ? r.size() == 3 : dist[w] == 2;
          ConstraintKind k = ConstraintKind::glu_d3;
          if (d2) k = r.size() == 3 ? ConstraintKind::glu_d2_lockable : ConstraintKind::glu_d2;
          if (d2 && r.size() > 3 && opt.split == DSplit::either) k = ConstraintKind::glu_d2_or_d3;
          p.constraints.push_back({k, path_edges(g, r, false)});
          return true;
        });
  }
  return p;
}

Certificate find_decent_labeling(const TypedGraph& tg, const PatternOptions& opt) {
  const Graph& g = tg.graph;
  PatternProblem p = decent_problem(tg);
  if (!opt.pins.empty()) {
    p.pinned.assign(g.size(), -1);
    for (const auto& [e, v] : opt.pins) {
      int id = g.edge_id(e);
      if (id < 0) throw PreconditionError("pinned label on a non-edge");
      p.pinned[id] = add_constant(p, v);
    }
  }
  PatternStats st;
  auto sol = solve_pattern(p, opt.budget, st, [&](const std::vector<Rational>& x) {
    return !verify_decent(tg, labeling_from(g, x)).has_value();
  });
  Certificate c =
      pattern_certificate(g, sol, st, CertKind::DecentLabeling, CertKind::NoDecentLabeling);
  c.types = tg.tau;
  return c;
}

Certificate find_gluable_labeling(const TypedGraph& tg, Vertex root, const PatternOptions& opt) {
  const Graph& g = tg.graph;
  bool infeasible = false;
  PatternProblem p = gluable_problem(tg, root, opt, infeasible);
  PatternStats st;
  std::optional<std::vector<Rational>> sol;
  if (!infeasible)
    sol = solve_pattern(p, opt.budget, st, [&](const std::vector<Rational>& x) {
      GluQuad q{tg, labeling_from(g, x), root};
      return !verify_gluable(q, opt.split).has_value();
    });
  Certificate c =
      pattern_certificate(g, sol, st, CertKind::GluableLabeling, CertKind::NoGluableLabeling);
  c.types = tg.tau;
  c.root = root;
  if (infeasible) c.note = "a structural condition fails for every labeling";
  return c;
}

}  // namespace gel
