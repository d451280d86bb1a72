#include "gel/catalog.hpp"

#include <algorithm>
#include <mutex>

#include "gel/errors.hpp"
#include "gel/search.hpp"

namespace gel {

const char* family_name(Family f) {
  switch (f) {
    case Family::path_to_type2: return "path-to-type2";
    case Family::path_to_type1: return "path-to-type1";
    case Family::plain_cycle: return "plain-cycle";
    case Family::fish: return "fish";
    case Family::alphabeta_cycle: return "alphabeta-cycle";
    case Family::alpha_cycle: return "alpha-cycle";
    case Family::wheel: return "wheel";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::path_to_type2, Family::path_to_type1, Family::plain_cycle, Family::fish,
                   Family::alphabeta_cycle, Family::alpha_cycle, Family::wheel})
    if (name == family_name(f)) return f;
  throw PreconditionError("unknown catalog family '" + name + "'");
}

WheelKind wheel_kind(const std::vector<int>& segments, int center_type) {
  bool all3 = std::all_of(segments.begin(), segments.end(), [](int s) { return s == 3; });
  if (all3) return center_type == 1 ? WheelKind::evil : WheelKind::almost_evil;
  return center_type == 1 ? WheelKind::benign : WheelKind::other;
}

TypedGraph wheel_graph(const std::vector<int>& segments, int center_type) {
  if (segments.size() < 2) throw PreconditionError("a wheel needs at least two anchors");
  int rim = 0;
  for (int s : segments) {
    if (s < 3) throw PreconditionError("anchors must be at distance at least three");
    rim += s;
  }
  if (center_type < 0 || center_type > 1) throw PreconditionError("wheel center has type 0 or 1");
  Graph g(rim + 1);
  std::vector<int> tau(rim + 1, 1);
  tau[0] = center_type;
  int v = 1;
  for (int s : segments) {
    g.add_edge(0, v);
    tau[v] = 0;      // anchor
    tau[v + 1] = 2;  // bogey
    tau[v + 2] = 0;  // spectator
    v += s;
  }
  for (int i = 1; i <= rim; ++i) g.add_edge(i, i == rim ? 1 : i + 1);
  return TypedGraph(g, tau);
}

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

void check_root_type(int t) {
  if (t != 0 && t != 1) throw PreconditionError("root type must be 0 or 1");
}

// Path 0..L, labels[i] on edge (i, i+1).
GluQuad path_quad(const std::vector<int>& tau, const std::vector<Rational>& labels) {
  Graph g = path_graph(static_cast<int>(tau.size()));
  Labeling phi;
  for (std::size_t i = 0; i < labels.size(); ++i)
    phi[EdgePair(static_cast<int>(i), static_cast<int>(i + 1))] = labels[i];
  return GluQuad{TypedGraph(g, tau), phi, 0};
}

CatalogPiece synthesize(const TypedGraph& tg, Vertex root, const std::map<EdgePair, Rational>& pins,
                        const std::string& what) {
  PatternOptions opt;
  opt.pins = pins;
  auto cert = find_gluable_labeling(tg, root, opt);
  if (cert.kind != CertKind::GluableLabeling)
    throw PostconditionError("no gluable labeling exists for " + what);
  return CatalogPiece{GluQuad{tg, *cert.labeling, root}, true, "synthesized", {}};
}

CatalogPiece path_to_type2(const CatalogParams& p) {
  const int L = p.length;
  if (L < 2) throw PreconditionError("path-to-type2 needs length at least two");
  check_root_type(p.root_type);
  std::vector<int> tau(L + 1, 1);
  tau[0] = p.root_type;
  tau[L - 1] = 0;
  tau[L] = 2;
  std::vector<Rational> x(L, R(1));
  if (L == 2) {
    x[0] = R(3, 4);
  } else {
    x[0] = R(17, 24);
  }
  x[L - 1] = R(-1);
  CatalogPiece piece{path_quad(tau, x), true, "text", {}};
  piece.marks = {{"y", 0}, {"x", L - 1}, {"w", L}};
  return piece;
}

CatalogPiece path_to_type1(const CatalogParams& p) {
  const int L = p.length;
  if (L < 1) throw PreconditionError("path-to-type1 needs length at least one");
  check_root_type(p.root_type);
  std::vector<int> tau(L + 1, 1);
  tau[0] = p.root_type;
  std::vector<Rational> x(L, R(1));
  if (L >= 2) x[0] = R(17, 24);
  if (L >= 3) x[2] = R(1, 2);  // a second minimum for cycles closed at the tip
  CatalogPiece piece{path_quad(tau, x), true, "formula", {}};
  piece.marks = {{"y", 0}, {"tip", L}};
  return piece;
}

CatalogPiece plain_cycle(const CatalogParams& p) {
  const int n = p.length;
  if (n < 5) throw PreconditionError("plain-cycle needs length at least five");
  check_root_type(p.root_type);
  if (p.special < 0 || p.special >= n) throw PreconditionError("special vertex out of range");
  std::vector<int> tau(n, 1);
  tau[0] = p.root_type;
  tau[p.special] = 0;
  Graph g = cycle_graph(n);
  Labeling phi;
  for (int i = 0; i < n; ++i) phi[EdgePair(i, (i + 1) % n)] = R(1);
  phi[EdgePair(0, 1)] = R(17, 24);
  phi[EdgePair(n - 1, 0)] = R(17, 24);
  phi[EdgePair(n / 2, n / 2 + 1)] = R(1, 2);
  CatalogPiece piece{GluQuad{TypedGraph(g, tau), phi, 0}, true, "formula", {}};
  piece.marks = {{"y", 0}, {"u", p.special}};
  return piece;
}

// Vertices: 0 = y, 1 = a, 2..l = p2..pl with pl = x, l+1 = w.
TypedGraph fish_graph(int l, int root_type) {
  Graph g(l + 2);
  std::vector<int> tau(l + 2, 1);
  tau[0] = root_type;
  tau[1] = 0;
  tau[l] = 0;
  tau[l + 1] = 2;
  g.add_edge(0, 1);
  for (int i = 1; i < l; ++i) g.add_edge(i, i + 1);
  g.add_edge(l, l + 1);
  g.add_edge(l + 1, 1);
  return TypedGraph(g, tau);
}

CatalogPiece fish(const CatalogParams& p) {
  const int l = p.length;
  if (l < 4) throw PreconditionError("fish needs sail length at least four (its cycle is l + 1)");
  check_root_type(p.root_type);
  TypedGraph tg = fish_graph(l, p.root_type);
  Labeling phi;
  phi[EdgePair(0, 1)] = R(17, 24);
  phi[EdgePair(1, l + 1)] = R(-1);
  phi[EdgePair(l, l + 1)] = R(-1);
  for (int i = 1; i < l; ++i) phi[EdgePair(i, i + 1)] = R(1);
  int mid = 1 + (l - 1) / 2;
  phi[EdgePair(mid, mid + 1)] = R(1, 2);
  CatalogPiece piece{GluQuad{tg, phi, 0}, true, "formula", {}};
  piece.marks = {{"y", 0}, {"a", 1}, {"x", l}, {"w", l + 1}};
  return piece;
}

// 0 = y, 1 = u, 2 = v, 3 = w, 4 = x, 5.. = s1..s_{L-1}; sail x .. y of length L.
CatalogPiece alphabeta(const CatalogParams& p) {
  const int L = p.length;
  if (L < 2) throw PreconditionError("alphabeta-cycle needs sail length at least two");
  check_root_type(p.root_type);
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  if (!(R(2, 3) < a && a <= R(3, 4) && R(3, 4) < b))
    throw PreconditionError("alphabeta-cycle needs 2/3 < alpha <= 3/4 < beta");
  const int n = 5 + (L - 1);
  Graph g(n);
  std::vector<int> tau(n, 1);
  tau[0] = p.root_type;
  tau[1] = 0;
  tau[3] = 2;
  tau[4] = 0;
  Labeling phi;
  auto add = [&](int u, int v, Rational r) {
    g.add_edge(u, v);
    phi[EdgePair(u, v)] = r;
  };
  const Rational delta = (R(2, 3) + a) / 2;
  add(0, 1, a);
  add(1, 2, b);
  add(1, 3, R(-1));
  add(3, 4, R(-1));
  int prev = 4;
  for (int i = 1; i <= L - 1; ++i) {
    add(prev, 4 + i, R(1));
    prev = 4 + i;
  }
  add(prev, 0, delta);
  CatalogPiece piece{GluQuad{TypedGraph(g, tau), phi, 0}, true, "formula", {}};
  piece.marks = {{"y", 0}, {"u", 1}, {"v", 2}, {"w", 3}, {"x", 4}};
  return piece;
}

// 0 = y, 1 = u, 2 = w, 3 = x, 4.. = s1..s_{L-1}.
CatalogPiece alpha(const CatalogParams& p) {
  const int L = p.length;
  if (L < 2) throw PreconditionError("alpha-cycle needs sail length at least two");
  check_root_type(p.root_type);
  const Rational& a = p.alpha;
  if (!(R(2, 3) < a && a < R(3, 4))) throw PreconditionError("alpha-cycle needs 2/3 < alpha < 3/4");
  if (!(p.gamma < 0)) throw PreconditionError("alpha-cycle needs gamma < 0");
  const int n = 4 + (L - 1);
  Graph g(n);
  std::vector<int> tau(n, 1);
  tau[0] = p.root_type;
  tau[1] = 0;
  tau[2] = 2;
  tau[3] = 0;
  Labeling phi;
  auto add = [&](int u, int v, Rational r) {
    g.add_edge(u, v);
    phi[EdgePair(u, v)] = r;
  };
  add(0, 1, a);
  add(1, 2, p.gamma);
  add(2, 3, R(-1));
  int prev = 3;
  for (int i = 1; i <= L - 1; ++i) {
    add(prev, 3 + i, R(1));
    prev = 3 + i;
  }
  add(prev, 0, (R(2, 3) + a) / 2);
  CatalogPiece piece{GluQuad{TypedGraph(g, tau), phi, 0}, true, "formula", {}};
  piece.marks = {{"y", 0}, {"u", 1}, {"w", 2}, {"x", 3}};
  return piece;
}

std::mutex wheel_mu;
std::map<std::pair<std::vector<int>, int>, CatalogPiece> wheel_memo;

CatalogPiece wheel_canonical(const std::vector<int>& segments, int center_type) {
  TypedGraph tg = wheel_graph(segments, center_type);
  std::lock_guard<std::mutex> lock(wheel_mu);
  auto key = std::make_pair(segments, center_type);
  if (auto it = wheel_memo.find(key); it != wheel_memo.end()) return it->second;
  CatalogPiece piece;
  if (wheel_kind(segments, center_type) == WheelKind::evil) {
    auto cert = find_good_labeling(tg.graph);
    if (cert.kind != CertKind::GoodLabeling)
      throw PostconditionError("evil wheel without a good labeling");
    piece = CatalogPiece{GluQuad{tg, *cert.labeling, 0}, false, "synthesized", {}};
  } else {
    piece = synthesize(tg, 0, {}, "this wheel");
  }
  piece.marks = {{"y", 0}};
  wheel_memo.emplace(key, piece);
  return piece;
}

// Rotations of the segment list share one synthesized labeling.
CatalogPiece wheel(const CatalogParams& p) {
  TypedGraph tg = wheel_graph(p.segments, p.center_type);
  const int k = static_cast<int>(p.segments.size());
  int best = 0;
  auto rotated = [&](int r) {
    std::vector<int> out(p.segments.begin() + r, p.segments.end());
    out.insert(out.end(), p.segments.begin(), p.segments.begin() + r);
    return out;
  };
  for (int r = 1; r < k; ++r)
    if (rotated(r) < rotated(best)) best = r;
  CatalogPiece canon = wheel_canonical(rotated(best), p.center_type);
  if (best == 0) return canon;
  const int rim = tg.graph.order() - 1;
  int offset = 0;
  for (int i = 0; i < best; ++i) offset += p.segments[i];
  auto to_canon = [&](Vertex v) { return v == 0 ? 0 : ((v - 1 - offset) % rim + rim) % rim + 1; };
  Labeling phi;
  for (const auto& e : tg.graph.edges()) phi[e] = canon.quad.phi.at(EdgePair(to_canon(e.u), to_canon(e.v)));
  return CatalogPiece{GluQuad{tg, phi, 0}, canon.decent, canon.provenance, canon.marks};
}

}  // namespace

CatalogPiece catalog(const CatalogParams& p) {
  CatalogPiece piece;
  switch (p.family) {
    case Family::path_to_type2: piece = path_to_type2(p); break;
    case Family::path_to_type1: piece = path_to_type1(p); break;
    case Family::plain_cycle: piece = plain_cycle(p); break;
    case Family::fish: piece = fish(p); break;
    case Family::alphabeta_cycle: piece = alphabeta(p); break;
    case Family::alpha_cycle: piece = alpha(p); break;
    case Family::wheel: piece = wheel(p); break;
  }
  if (piece.decent) {
    if (auto v = verify_gluable(piece.quad))
      throw PostconditionError(std::string(family_name(p.family)) + " piece is not gluable: " +
                               describe(*v));
  } else if (!is_good_paths(piece.quad.graph(), piece.quad.phi).ok()) {
    throw PostconditionError("evil wheel labeling is not good");
  }
  return piece;
}

}  // namespace gel
