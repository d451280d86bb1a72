#include "gel/typed.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "gel/errors.hpp"

namespace gel {

TypedGraph::TypedGraph(Graph g, std::vector<int> t) : graph(std::move(g)), tau(std::move(t)) {
  if (static_cast<int>(tau.size()) != graph.order())
    throw PreconditionError("type map has " + std::to_string(tau.size()) + " entries for " +
                            std::to_string(graph.order()) + " vertices");
  for (int x : tau)
    if (x < 0 || x > 2) throw PreconditionError("vertex type outside {0,1,2}");
}

Thresholds<Rational> rational_thresholds() {
  return {Rational(0), Rational(1, 2), Rational(2, 3), Rational(3, 4)};
}

void for_each_t_simple_path(const TypedGraph& tg, int t, const VertexPredicate& from,
                            const VertexPredicate& to,
                            const std::function<bool(const std::vector<Vertex>&)>& visit,
                            std::size_t cap) {
  const Graph& g = tg.graph;
  std::vector<char> on(g.order(), 0);
  std::vector<Vertex> path;
  std::size_t emitted = 0;
  bool stop = false;
  auto dfs = [&](auto&& self, Vertex x) -> void {
    for (Vertex y : g.neighbors(x)) {
      if (on[y] || stop) continue;
      path.push_back(y);
      if (to(y)) {
        if (++emitted > cap)
          throw BudgetExceeded("t-simple path enumeration exceeded cap of " + std::to_string(cap));
        if (!visit(path)) stop = true;
      }
      if (!stop && tg.tau[y] < t) {
        on[y] = 1;
        self(self, y);
        on[y] = 0;
      }
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < g.order() && !stop; ++s) {
    if (!from(s)) continue;
    on[s] = 1;
    path.assign(1, s);
    dfs(dfs, s);
    on[s] = 0;
  }
}

std::vector<std::vector<Vertex>> t_simple_paths(const TypedGraph& tg, int t,
                                                const VertexPredicate& from,
                                                const VertexPredicate& to, std::size_t cap) {
  std::vector<std::vector<Vertex>> out;
  for_each_t_simple_path(tg, t, from, to, [&](const std::vector<Vertex>& p) {
    out.push_back(p);
    return true;
  }, cap);
  return out;
}

namespace {

using Span = std::span<const Rational>;

Violation make(std::string id, std::vector<Vertex> path, std::vector<Rational> values) {
  return Violation{std::move(id), std::move(path), std::move(values), {}};
}

bool valid_path(const Graph& g, const std::vector<Vertex>& p) {
  if (p.size() < 2) return false;
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : p) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  return true;
}

bool interior_below(const TypedGraph& tg, const std::vector<Vertex>& p, int t) {
  for (std::size_t i = 1; i + 1 < p.size(); ++i)
    if (tg.tau[p[i]] >= t) return false;
  return true;
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex a, Vertex b) {
  std::vector<Vertex> out;
  std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(b).begin(),
                        g.neighbors(b).end(), std::back_inserter(out));
  return out;
}

// Which (d) rule applies to a root-first path ending at a type-2 vertex.
enum class DRule { d2, d3, d2_or_d3 };
DRule d_rule(std::size_t path_edges, int distance, DSplit split) {
  if (split == DSplit::by_length) return path_edges == 2 ? DRule::d2 : DRule::d3;
  if (distance != 2) return DRule::d3;
  if (split == DSplit::either && path_edges > 2) return DRule::d2_or_d3;
  return DRule::d2;
}

bool d_holds(DRule rule, Span x) {
  auto t = rational_thresholds();
  bool d2 = cond::d2i<Rational>(x, t) || cond::d2ii<Rational>(x, t);
  if (rule == DRule::d2) return d2;
  if (rule == DRule::d3) return cond::d3<Rational>(x, t);
  return d2 || cond::d3<Rational>(x, t);
}

const char* d_name(DRule rule) {
  switch (rule) {
    case DRule::d2: return "glu-d2.i/d2.ii";
    case DRule::d3: return "glu-d3";
    case DRule::d2_or_d3: return "glu-d2/d3";
  }
  return "?";
}

}  // namespace

Verdict verify_decent(const TypedGraph& tg, const Labeling& phi) {
  const Graph& g = tg.graph;
  auto good = is_good_paths(g, phi);
  if (!good.ok()) {
    const auto& c = std::get<PathConflict>(good.detail);
    Violation v = make("good", c.first, labels_along(g, phi, c.first));
    v.other_path = c.second;
    return v;
  }
  const auto t = rational_thresholds();
  Verdict found;
  auto is2 = [&](Vertex v) { return tg.tau[v] == 2; };
  auto is1 = [&](Vertex v) { return tg.tau[v] == 1; };
  for_each_t_simple_path(tg, 2, is2, is2, [&](const std::vector<Vertex>& p) {
    if (p.front() > p.back()) return true;
    auto x = labels_along(g, phi, p);
    if (x.size() < 3) {
      found = make("a.len", p, x);
      return false;
    }
    if (!cond::decent_a<Rational>(x, t)) {
      found = make("a.1/a.2", p, x);
      return false;
    }
    return true;
  });
  if (found) return found;
  for_each_t_simple_path(tg, 1, is1, is2, [&](const std::vector<Vertex>& p) {
    auto x = labels_along(g, phi, p);
    if (x.size() < 2) {
      found = make("b.len", p, x);
      return false;
    }
    if (!cond::decent_b<Rational>(x, t)) {
      found = make("b.1", p, x);
      return false;
    }
    return true;
  });
  return found;
}

std::optional<std::vector<Vertex>> locking_path(const GluQuad& q, Vertex w) {
  const Graph& g = q.graph();
  if (q.tau(w) != 2) throw PreconditionError("locking is defined for type-2 vertices only");
  Vertex y = q.root;
  if (w == y || g.has_edge(w, y)) return std::nullopt;
  auto mids = common_neighbors(g, w, y);
  if (mids.empty()) return std::nullopt;
  if (mids.size() > 1)
    throw PreconditionError("vertex " + std::to_string(w) + " has " + std::to_string(mids.size()) +
                            " paths of length two to the root");
  std::vector<Vertex> p{y, mids[0], w};
  auto x = labels_along(g, q.phi, p);
  if (cond::locks<Rational>(x, rational_thresholds())) return p;
  return std::nullopt;
}

bool is_locked(const GluQuad& q, Vertex w) { return locking_path(q, w).has_value(); }

Verdict verify_gluable(const GluQuad& q, DSplit split) {
  const Graph& g = q.graph();
  const Vertex y = q.root;
  if (y < 0 || y >= g.order()) throw PreconditionError("root out of range");
  if (auto v = verify_decent(q.typed, q.phi)) return v;
  const auto t = rational_thresholds();

  for (Vertex w : g.neighbors(y))
    if (q.tau(w) == 2) return make("glu-c", {y, w}, labels_along(g, q.phi, {y, w}));

  for (Vertex v1 : g.neighbors(y)) {
    if (q.tau(v1) != 1) continue;
    for (Vertex v2 : g.neighbors(v1)) {
      if (v2 == y || q.tau(v2) > 1) continue;
      std::vector<Vertex> p{y, v1, v2};
      auto x = labels_along(g, q.phi, p);
      if (!cond::glu_a<Rational>(x, t)) return make("glu-a", p, x);
    }
  }

  Verdict found;
  for_each_t_simple_path(
      q.typed, 1, [&](Vertex v) { return v != y && q.tau(v) == 1; },
      [&](Vertex v) { return v == y; },
      [&](const std::vector<Vertex>& p) {
        auto x = labels_along(g, q.phi, p);
        if (!cond::glu_b<Rational>(x, t)) {
          found = make("glu-b", p, x);
          return false;
        }
        return true;
      });
  if (found) return found;

  const auto dist = bfs_distances(g, y);
  for (Vertex w = 0; w < g.order(); ++w) {
    if (q.tau(w) != 2 || w == y || dist[w] < 2) continue;
    std::optional<std::vector<Vertex>> lock;
    if (dist[w] == 2) {
      if (common_neighbors(g, w, y).size() > 1) return make("lock", {w, y}, {});
      lock = locking_path(q, w);
    }
    for_each_t_simple_path(
        q.typed, 2, [&](Vertex v) { return v == w; }, [&](Vertex v) { return v == y; },
        [&](const std::vector<Vertex>& p) {
          std::vector<Vertex> r(p.rbegin(), p.rend());
          if (lock && r == *lock) return true;
          auto x = labels_along(g, q.phi, r);
          DRule rule = d_rule(x.size(), dist[w], split);
          if (!d_holds(rule, x)) {
            found = make(d_name(rule), r, x);
            return false;
          }
          return true;
        });
    if (found) return found;
  }
  return std::nullopt;
}

bool violation_reproduces(const TypedGraph& tg, const Labeling& phi, const Violation& v) {
  const Graph& g = tg.graph;
  const auto t = rational_thresholds();
  const auto& p = v.path;
  if (v.condition == "good") {
    return p != v.other_path && p.front() == v.other_path.front() &&
           p.back() == v.other_path.back() && is_nondecreasing_path(g, phi, p) &&
           is_nondecreasing_path(g, phi, v.other_path);
  }
  if (!valid_path(g, p)) return false;
  auto x = labels_along(g, phi, p);
  if (v.condition == "a.len" || v.condition == "a.1/a.2") {
    if (tg.tau[p.front()] != 2 || tg.tau[p.back()] != 2 || !interior_below(tg, p, 2)) return false;
    if (v.condition == "a.len") return x.size() < 3;
    return x.size() >= 3 && !cond::decent_a<Rational>(x, t);
  }
  if (v.condition == "b.len" || v.condition == "b.1") {
    if (tg.tau[p.front()] != 1 || tg.tau[p.back()] != 2 || !interior_below(tg, p, 1)) return false;
    if (v.condition == "b.len") return x.size() < 2;
    return x.size() >= 2 && !cond::decent_b<Rational>(x, t);
  }
  return false;
}

bool violation_reproduces(const GluQuad& q, const Violation& v, DSplit split) {
  const Graph& g = q.graph();
  const Vertex y = q.root;
  const auto t = rational_thresholds();
  const auto& p = v.path;
  const std::string& c = v.condition;
  if (c == "good" || c.rfind("a.", 0) == 0 || c.rfind("b.", 0) == 0)
    return violation_reproduces(q.typed, q.phi, v);
  if (c == "lock")
    return p.size() == 2 && p[1] == y && bfs_distances(g, y)[p[0]] == 2 &&
           common_neighbors(g, p[0], y).size() > 1;
  if (!valid_path(g, p)) return false;
  auto x = labels_along(g, q.phi, p);
  if (c == "glu-c") return p.size() == 2 && p[0] == y && q.tau(p[1]) == 2;
  if (c == "glu-a")
    return p.size() == 3 && p[0] == y && q.tau(p[1]) == 1 && q.tau(p[2]) <= 1 &&
           !cond::glu_a<Rational>(x, t);
  if (c == "glu-b")
    return p.back() == y && p.front() != y && q.tau(p.front()) == 1 &&
           interior_below(q.typed, p, 1) && !cond::glu_b<Rational>(x, t);
  if (c == "glu-d2.i/d2.ii" || c == "glu-d3" || c == "glu-d2/d3") {
    Vertex w = p.back();
    if (p.front() != y || q.tau(w) != 2 || !interior_below(q.typed, p, 2)) return false;
    int d = bfs_distances(g, y)[w];
    if (d < 2) return false;
    if (d == 2) {
      auto lock = locking_path(q, w);
      if (lock && *lock == p) return false;
    }
    DRule rule = d_rule(x.size(), d, split);
    return c == d_name(rule) && !d_holds(rule, x);
  }
  return false;
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << v.condition << " on path";
  for (Vertex x : v.path) os << ' ' << x;
  if (!v.values.empty()) {
    os << " labels";
    for (const auto& r : v.values) os << ' ' << short_rational(r);
  }
  if (!v.other_path.empty()) {
    os << " and path";
    for (Vertex x : v.other_path) os << ' ' << x;
  }
  return os.str();
}

}  // namespace gel
