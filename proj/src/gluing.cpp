#include "gel/gluing.hpp"

#include <algorithm>
#include <set>

#include "gel/catalog.hpp"
#include "gel/errors.hpp"

namespace gel {

namespace {

void require_gluable(const GluQuad& q, const char* which, DSplit split) {
  if (auto v = verify_gluable(q, split))
    throw PreconditionError(std::string(which) + " is not gluable: " + describe(*v));
}

GlueResult finish(Glued g, Vertex root, DSplit split, const char* op) {
  GlueResult r{GluQuad{std::move(g.typed), std::move(g.phi), root}, std::move(g.map1),
               std::move(g.map2)};
  if (auto v = verify_gluable(r.quad, split))
    throw PostconditionError(std::string(op) + " produced a quadruple that is not gluable: " +
                             describe(*v));
  return r;
}

Rational label(const GluQuad& q, Vertex a, Vertex b) {
  auto it = q.phi.find(EdgePair(a, b));
  if (it == q.phi.end()) throw PreconditionError("missing label on a named edge");
  return it->second;
}

}  // namespace

Glued glue_along(const TypedGraph& t1, const Labeling& p1, const TypedGraph& t2,
                 const Labeling& p2, const GlueMap& ident) {
  const Graph& g1 = t1.graph;
  const Graph& g2 = t2.graph;
  std::vector<Vertex> partner1(g1.order(), -1), partner2(g2.order(), -1);
  for (auto [a, b] : ident) {
    if (a < 0 || a >= g1.order() || b < 0 || b >= g2.order())
      throw PreconditionError("identified vertex out of range");
    if (partner1[a] != -1 || partner2[b] != -1)
      throw PreconditionError("identification is not injective");
    partner1[a] = b;
    partner2[b] = a;
  }
  for (auto [a, b] : ident)
    for (auto [c, d] : ident) {
      if (a >= c) continue;
      bool e1 = g1.has_edge(a, c), e2 = g2.has_edge(b, d);
      if (e1 != e2) throw PreconditionError("identified vertices do not span a common induced subgraph");
      if (e1 && p1.at(EdgePair(a, c)) != p2.at(EdgePair(b, d)))
        throw PreconditionError("a shared edge carries different labels");
    }

  Glued out{TypedGraph(Graph(g1.order()), t1.tau), {}, {}, {}};
  out.map1.resize(g1.order());
  for (Vertex v = 0; v < g1.order(); ++v) out.map1[v] = v;
  out.map2.assign(g2.order(), -1);
  Graph g = g1;
  std::vector<int> tau = t1.tau;
  for (Vertex v = 0; v < g2.order(); ++v) {
    if (partner2[v] != -1) {
      out.map2[v] = partner2[v];
      tau[partner2[v]] = std::min(tau[partner2[v]], t2.tau[v]);
    } else {
      out.map2[v] = g.add_vertex();
      tau.push_back(t2.tau[v]);
    }
  }
  out.phi = p1;
  for (const auto& e : g2.edges()) {
    EdgePair f(out.map2[e.u], out.map2[e.v]);
    if (!g.has_edge(f)) g.add_edge(f.u, f.v);
    out.phi[f] = p2.at(e);
  }
  out.typed = TypedGraph(std::move(g), std::move(tau));
  return out;
}

GlueResult glue_1sum(const GluQuad& q1, const GluQuad& q2, DSplit split) {
  require_gluable(q1, "first quadruple", split);
  require_gluable(q2, "second quadruple", split);
  Glued g = glue_along(q1.typed, q1.phi, q2.typed, q2.phi, {{q1.root, q2.root}});
  return finish(std::move(g), q1.root, split, "1-sum");
}

GlueResult glue_2sum(const GluQuad& q1, Vertex w1, const GluQuad& q2, Vertex w2, DSplit split) {
  require_gluable(q1, "first quadruple", split);
  require_gluable(q2, "second quadruple", split);
  if (w1 < 0 || w1 >= q1.graph().order() || w2 < 0 || w2 >= q2.graph().order())
    throw PreconditionError("2-sum vertex out of range");
  if (q1.tau(w1) != 2 || q2.tau(w2) != 2) throw PreconditionError("2-sum needs type-2 vertices");
  if (is_locked(q1, w1) || is_locked(q2, w2))
    throw PreconditionError("2-sum needs connectable vertices; a locked vertex was supplied");
  int d1 = bfs_distances(q1.graph(), q1.root)[w1];
  int d2 = bfs_distances(q2.graph(), q2.root)[w2];
  if (d1 < 0 || d2 < 0) throw PreconditionError("2-sum vertex not reachable from the root");
  if (d1 + d2 < 5)
    throw PreconditionError("2-sum distance sum " + std::to_string(d1 + d2) +
                            " is below 5 and would create a C4");
  Glued g = glue_along(q1.typed, q1.phi, q2.typed, q2.phi, {{q1.root, q2.root}, {w1, w2}});
  return finish(std::move(g), q1.root, split, "2-sum");
}

GlueResult glue_edge_cycle(const GluQuad& q, std::array<Vertex, 3> path, int sail_length,
                           DSplit split) {
  require_gluable(q, "quadruple", split);
  auto [y, u, v] = path;
  const Graph& g = q.graph();
  if (y != q.root) throw PreconditionError("edge glue path must start at the root");
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || !g.has_edge(y, u) ||
      !g.has_edge(u, v) || v == y)
    throw PreconditionError("edge glue path is not a path of the graph");
  if (q.tau(u) != 1 || q.tau(v) > 1)
    throw PreconditionError("edge glue path needs a type-1 middle vertex and a type-0/1 end");
  Rational a = label(q, y, u), b = label(q, u, v);
  if (!(Rational(2, 3) < a && a <= Rational(3, 4) && Rational(3, 4) < b))
    throw PreconditionError("edge glue path is not admissible");
  CatalogParams p;
  p.family = Family::alphabeta_cycle;
  p.length = sail_length;
  p.root_type = q.tau(y);
  p.alpha = a;
  p.beta = b;
  CatalogPiece piece = catalog(p);
  Glued glued = glue_along(q.typed, q.phi, piece.quad.typed, piece.quad.phi,
                           {{y, piece.marks.at("y")}, {u, piece.marks.at("u")}, {v, piece.marks.at("v")}});
  return finish(std::move(glued), y, split, "edge glue");
}

GlueResult glue_lock_cycle(const GluQuad& q, std::array<Vertex, 3> path, int sail_length,
                           DSplit split) {
  require_gluable(q, "quadruple", split);
  auto [y, u, w] = path;
  const Graph& g = q.graph();
  if (y != q.root) throw PreconditionError("lock glue path must start at the root");
  if (w < 0 || w >= g.order() || q.tau(w) != 2)
    throw PreconditionError("lock glue needs a type-2 vertex");
  auto lock = locking_path(q, w);
  if (!lock) throw PreconditionError("vertex " + std::to_string(w) + " is not locked");
  if (*lock != std::vector<Vertex>{y, u, w})
    throw PreconditionError("the named path is not the locking path");
  Rational a = label(q, y, u), c = label(q, u, w);
  if (!(Rational(2, 3) < a && a < Rational(3, 4)) || !(c < 0))
    throw PreconditionError("locking path labels outside 2/3 < alpha < 3/4, gamma < 0");
  CatalogParams p;
  p.family = Family::alpha_cycle;
  p.length = sail_length;
  p.root_type = q.tau(y);
  p.alpha = a;
  p.gamma = c;
  CatalogPiece piece = catalog(p);
  Glued glued = glue_along(q.typed, q.phi, piece.quad.typed, piece.quad.phi,
                           {{y, piece.marks.at("y")}, {u, piece.marks.at("u")}, {w, piece.marks.at("w")}});
  return finish(std::move(glued), y, split, "lock glue");
}

std::optional<SwellViolation> verify_swell(const Graph& g, const SwellEmbedding& e) {
  const TypedGraph& h = e.h;
  const int nh = h.graph.order();
  if (static_cast<int>(e.to_g.size()) != nh) return SwellViolation{"embedding", {}};
  std::vector<Vertex> from_g(g.order(), -1);
  for (Vertex i = 0; i < nh; ++i) {
    Vertex v = e.to_g[i];
    if (v < 0 || v >= g.order() || from_g[v] != -1) return SwellViolation{"embedding", {v}};
    from_g[v] = i;
  }
  for (const auto& f : h.graph.edges())
    if (!g.has_edge(e.to_g[f.u], e.to_g[f.v]))
      return SwellViolation{"embedding", {e.to_g[f.u], e.to_g[f.v]}};
  if (nh == g.order() && h.graph.size() == g.size()) return SwellViolation{"proper", {}};
  if (std::none_of(h.tau.begin(), h.tau.end(), [](int t) { return t <= 1; }))
    return SwellViolation{"type", {}};
  // Host edges between h vertices at a type-0/1 vertex must belong to h.
  for (const auto& f : g.edges()) {
    Vertex a = from_g[f.u], b = from_g[f.v];
    if (a < 0 || b < 0 || h.graph.has_edge(a, b)) continue;
    if (h.tau[a] <= 1 || h.tau[b] <= 1) return SwellViolation{"induced", {f.u, f.v}};
  }
  for (Vertex i = 0; i < nh; ++i) {
    Vertex v = e.to_g[i];
    std::vector<Vertex> outside;
    for (Vertex x : g.neighbors(v))
      if (from_g[x] < 0) outside.push_back(x);
    if (h.tau[i] == 0 && !outside.empty()) return SwellViolation{"a", {v, outside[0]}};
    if (h.tau[i] == 1 && outside.size() > 1)
      return SwellViolation{"b", {v, outside[0], outside[1]}};
  }
  for (Vertex x = 0; x < g.order(); ++x) {
    if (from_g[x] >= 0) continue;
    std::vector<Vertex> ones;
    for (Vertex v : g.neighbors(x))
      if (from_g[v] >= 0 && h.tau[from_g[v]] == 1) ones.push_back(v);
    if (ones.size() > 1) return SwellViolation{"c", {x, ones[0], ones[1]}};
  }
  return std::nullopt;
}

Subgraph swell_rest(const Graph& g, const SwellEmbedding& e) {
  std::vector<Vertex> drop;
  for (Vertex i = 0; i < e.h.graph.order(); ++i)
    if (e.h.tau[i] <= 1) drop.push_back(e.to_g[i]);
  return subgraph(g, drop, {});
}

Labeling swell_combine(const Graph& g, const SwellEmbedding& e, const Labeling& phi_h,
                       const Labeling& phi_rest) {
  if (auto v = verify_swell(g, e)) {
    std::string w;
    for (Vertex x : v->witness) w += " " + std::to_string(x);
    throw PreconditionError("not a swell subgraph: condition " + v->condition + w);
  }
  if (auto v = verify_decent(e.h, phi_h))
    throw PreconditionError("labeling of h is not decent: " + describe(*v));
  Subgraph rest = swell_rest(g, e);
  Labeling rest_local;
  for (const auto& f : rest.graph.edges()) {
    auto it = phi_rest.find(EdgePair(rest.new_to_old[f.u], rest.new_to_old[f.v]));
    if (it == phi_rest.end()) throw PreconditionError("rest labeling misses an edge");
    rest_local[f] = it->second;
  }
  if (!is_good_paths(rest.graph, rest_local).ok())
    throw PreconditionError("rest labeling is not good");

  Rational min_nonzero(0), max_abs(0);
  for (const auto& [f, x] : phi_h) {
    Rational m = abs(x);
    if (m.numerator() != 0 && (min_nonzero.numerator() == 0 || m < min_nonzero)) min_nonzero = m;
  }
  for (const auto& [f, x] : rest_local) max_abs = std::max(max_abs, abs(x));
  Rational sh = min_nonzero.numerator() == 0 ? Rational(1) : Rational(2) / min_nonzero;
  Rational sr = max_abs.numerator() == 0 ? Rational(1) : Rational(1) / max_abs;

  Labeling out;
  for (const auto& [f, x] : phi_h) out[EdgePair(e.to_g[f.u], e.to_g[f.v])] = x * sh;
  for (const auto& [f, x] : rest_local)
    out[EdgePair(rest.new_to_old[f.u], rest.new_to_old[f.v])] = x * sr;
  Rational low = out.empty() ? Rational(0) : out.begin()->second;
  for (const auto& [f, x] : out) low = std::min(low, x);
  const Rational minus_inf = low - 100;
  for (const auto& f : g.edges())
    if (!out.count(f)) out[f] = minus_inf;
  if (!is_good_paths(g, out).ok())
    throw PostconditionError("combined swell labeling is not good");
  return out;
}

}  // namespace gel
