#include "gel/closure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gel/catalog.hpp"
#include "gel/errors.hpp"
#include "gel/gluing.hpp"
#include "gel/minima.hpp"
#include "gel/search.hpp"

namespace gel {

std::vector<int> closure_types(const Graph& g, const std::vector<Vertex>& set,
                               const std::vector<Vertex>& flags) {
  std::set<Vertex> in(set.begin(), set.end());
  std::set<Vertex> fl(flags.begin(), flags.end());
  std::vector<int> tau;
  for (Vertex v : set) {
    if (fl.count(v)) {
      tau.push_back(2);
      continue;
    }
    int inside = 0;
    for (Vertex u : g.neighbors(v)) inside += in.count(u) ? 1 : 0;
    int t = g.degree(v) - inside;
    if (t > 2)
      throw PreconditionError("vertex " + std::to_string(v) + " has " + std::to_string(t) +
                              " neighbours outside the closure");
    tau.push_back(t);
  }
  return tau;
}

namespace {

// The regular part under construction: a gluable quadruple plus the host
// vertex behind each of its vertices.
struct Assembly {
  std::optional<GluQuad> q;
  std::vector<Vertex> to_g;
  std::map<Vertex, Vertex> from_g;
  DSplit split;

  void reset(GluQuad quad, std::vector<Vertex> g_ids) {
    q = std::move(quad);
    to_g = std::move(g_ids);
    reindex();
  }
  void absorb(GlueResult r, const std::vector<Vertex>& piece_g) {
    std::vector<Vertex> next(r.quad.graph().order(), -1);
    for (std::size_t i = 0; i < r.map1.size(); ++i) next[r.map1[i]] = to_g[i];
    for (std::size_t i = 0; i < r.map2.size(); ++i) next[r.map2[i]] = piece_g[i];
    q = std::move(r.quad);
    to_g = std::move(next);
    reindex();
  }
  void reindex() {
    from_g.clear();
    for (std::size_t i = 0; i < to_g.size(); ++i) {
      if (to_g[i] < 0 || from_g.count(to_g[i]))
        throw PostconditionError("assembly lost track of a host vertex");
      from_g[to_g[i]] = static_cast<Vertex>(i);
    }
  }
  Vertex at(Vertex gv) const {
    auto it = from_g.find(gv);
    if (it == from_g.end())
      throw PostconditionError("host vertex " + std::to_string(gv) + " is not assembled yet");
    return it->second;
  }
  // Rule U: start, or 1-sum a new component at the axis.
  void add_component(const CatalogPiece& piece, const std::vector<Vertex>& piece_g) {
    if (!q) reset(piece.quad, piece_g);
    else absorb(glue_1sum(*q, piece.quad, split), piece_g);
  }
};

std::vector<Vertex> reversed(const std::vector<Vertex>& path) {
  return {path.rbegin(), path.rend()};
}

}  // namespace

ClosureResult build_closure_labeling(const Graph& g, const Windmill& w, DSplit split,
                                     std::uint64_t repair_budget) {
  ClosureResult out;
  const FlagReport report = flags_of(g, w);
  if (!report.clean()) {
    std::string msg = "flag audit not clean:";
    for (const auto& i : report.issues) msg += " " + i.code;
    throw PreconditionError(msg);
  }
  out.advisories = report.advisories;
  const Vertex y = w.axis;

  std::vector<Vertex> regular_flags;
  for (const auto& f : report.flags) {
    if (f.irregular) out.irregular_flag = f.vertex;
    else regular_flags.push_back(f.vertex);
  }
  out.regular_vertices = w.vertices;
  out.regular_vertices.insert(out.regular_vertices.end(), regular_flags.begin(), regular_flags.end());
  std::sort(out.regular_vertices.begin(), out.regular_vertices.end());
  const auto tau_h = closure_types(g, out.regular_vertices, regular_flags);
  std::map<Vertex, int> tau_of;
  for (std::size_t i = 0; i < out.regular_vertices.size(); ++i) tau_of[out.regular_vertices[i]] = tau_h[i];
  const int root_type = tau_of[y];
  if (root_type > 1) throw PreconditionError("the axis has two neighbours outside the regular part");

  out.flag_graph = build_flag_graph(g, w);
  out.script = decompose_flag_graph(out.flag_graph);
  const FlagGraph& fg = out.flag_graph;
  const auto sail_of = [&](int node) -> const Sail& { return w.sails[fg.nodes[node].sails.front()]; };

  for (const auto& st : out.script.steps) {
    if (st.rule != Rule::U || st.basic != Basic::C4) continue;
    bool all3 = true;
    for (std::size_t i = 0; i < st.nodes.size(); i += 2) all3 = all3 && sail_of(st.nodes[i]).length() == 2;
    if (all3 && root_type == 1) {
      out.obstruction = true;
      out.obstruction_detail = "the flag graph has a C4 element with " + std::to_string(st.nodes.size() / 2) +
                               " sails of length 2 and the axis has type 1 in the regular part: " +
                               (out.irregular_flag ? "almost evil wheel with an irregular flag"
                                                   : "evil wheel without an irregular flag");
      return out;
    }
  }

  Assembly as{{}, {}, {}, split};
  for (const auto& st : out.script.steps) {
    if (st.rule == Rule::U) {
      CatalogParams p;
      p.root_type = root_type;
      std::vector<Vertex> piece_g;
      switch (st.basic) {
        case Basic::S: {
          const Sail& s = sail_of(st.nodes[0]);
          p.family = Family::path_to_type1;
          p.length = s.length();
          piece_g = reversed(s.path);
          break;
        }
        case Basic::S_minus: {
          const auto& idx = fg.nodes[st.nodes[0]].sails;
          const Sail& a = w.sails[idx[0]];
          const Sail& b = w.sails[idx[1]];
          p.family = Family::plain_cycle;
          p.length = a.length() + b.length();
          p.special = a.length();
          piece_g = reversed(a.path);
          piece_g.insert(piece_g.end(), b.path.begin() + 1, b.path.end() - 1);
          break;
        }
        case Basic::S_plus: {
          const Sail& s = sail_of(st.nodes[0]);
          p.family = Family::path_to_type2;
          p.length = s.length() + 1;
          piece_g = reversed(s.path);
          piece_g.push_back(fg.nodes[st.nodes[1]].vertex);
          break;
        }
        case Basic::C2: {
          const Sail& s = sail_of(st.nodes[0]);
          p.family = Family::fish;
          p.length = s.length();
          piece_g = reversed(s.path);
          piece_g.push_back(fg.nodes[st.nodes[1]].vertex);
          break;
        }
        case Basic::C4: {
          // Nodes s1 f1 s2 f2 ... with f_i next to the tip of s_i and the
          // near-axis vertex of s_{i+1}. The rim runs anchor u(s_{i+1}),
          // bogey f_i, spectator and boobies of s_i, for i = m .. 1.
          const int m = static_cast<int>(st.nodes.size()) / 2;
          p.family = Family::wheel;
          p.center_type = root_type;
          piece_g = {y};
          for (int i = m - 1; i >= 0; --i) {
            const Sail& s = sail_of(st.nodes[2 * i]);
            const Sail& next = sail_of(st.nodes[(2 * i + 2) % (2 * m)]);
            piece_g.push_back(next.near_end());
            piece_g.push_back(fg.nodes[st.nodes[2 * i + 1]].vertex);
            for (int j = 0; j + 1 < s.length(); ++j) piece_g.push_back(s.path[j]);
            p.segments.push_back(s.length() + 1);
          }
          break;
        }
      }
      as.add_component(catalog(p), piece_g);
    } else if (st.rule == Rule::A) {
      const Sail& s = sail_of(st.nodes[0]);
      const Vertex f = fg.nodes[st.target].vertex;
      const Vertex qf = as.at(f);
      if (auto lock = locking_path(*as.q, qf)) {
        std::vector<Vertex> piece_g{y, as.to_g[(*lock)[1]], f};
        piece_g.insert(piece_g.end(), s.path.begin(), s.path.end() - 1);
        as.absorb(glue_lock_cycle(*as.q, {(*lock)[0], (*lock)[1], (*lock)[2]}, s.length(), split), piece_g);
      } else {
        CatalogParams p;
        p.family = Family::path_to_type2;
        p.length = s.length() + 1;
        p.root_type = root_type;
        auto piece = catalog(p);
        auto piece_g = reversed(s.path);
        piece_g.push_back(f);
        as.absorb(glue_2sum(*as.q, qf, piece.quad, piece.marks.at("w"), split), piece_g);
      }
    } else {
      const Vertex f = fg.nodes[st.nodes[0]].vertex;
      const Sail& s = sail_of(st.nodes[1]);
      const Sail* host = nullptr;
      for (int idx : fg.nodes[st.target].sails) {
        const Sail& t = w.sails[idx];
        if (t.length() >= 2 && g.has_edge(f, t.near_end())) host = &t;
      }
      if (!host) throw PreconditionError("rule B flag is not next to a near-axis vertex of its target");
      const Vertex u = host->near_end();
      const Vertex v = host->path[host->path.size() - 3];
      std::vector<Vertex> piece_g{y, u, v, f};
      piece_g.insert(piece_g.end(), s.path.begin(), s.path.end() - 1);
      as.absorb(glue_edge_cycle(*as.q, {as.at(y), as.at(u), as.at(v)}, s.length(), split), piece_g);
    }
  }
  if (!as.q) throw PreconditionError("windmill without sails");

  // The assembled graph must be exactly the induced regular part.
  const auto& R = out.regular_vertices;
  if (as.to_g.size() != R.size()) throw PostconditionError("assembled part has the wrong vertex set");
  std::map<Vertex, Vertex> local;
  for (std::size_t i = 0; i < R.size(); ++i) local[R[i]] = static_cast<Vertex>(i);
  Graph h(static_cast<int>(R.size()));
  Labeling phi_h;
  for (const auto& e : as.q->graph().edges()) {
    Vertex a = as.to_g[e.u], b = as.to_g[e.v];
    if (!g.has_edge(a, b)) throw PostconditionError("assembled edge missing from the host");
    h.add_edge(local.at(a), local.at(b));
    phi_h[EdgePair(local.at(a), local.at(b))] = as.q->phi.at(e);
  }
  for (const auto& e : g.edges())
    if (local.count(e.u) && local.count(e.v) && !h.has_edge(local[e.u], local[e.v]))
      throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " of the regular part is not covered by the construction");
  out.regular = GluQuad{TypedGraph(h, tau_h), phi_h, local.at(y)};
  if (auto v = verify_gluable(out.regular, split))
    throw PostconditionError("regular part is not gluable: " + describe(*v));

  // Closure with the irregular flag.
  out.closure_vertices = R;
  std::vector<Vertex> all_flags = regular_flags;
  if (out.irregular_flag) {
    out.closure_vertices.push_back(*out.irregular_flag);
    all_flags.push_back(*out.irregular_flag);
    std::sort(out.closure_vertices.begin(), out.closure_vertices.end());
  }
  const auto& C = out.closure_vertices;
  std::map<Vertex, Vertex> cl;
  for (std::size_t i = 0; i < C.size(); ++i) cl[C[i]] = static_cast<Vertex>(i);
  Graph gc(static_cast<int>(C.size()));
  for (const auto& e : g.edges())
    if (cl.count(e.u) && cl.count(e.v)) {
      gc.add_edge(cl[e.u], cl[e.v]);
      Rational x;
      if (out.irregular_flag && e.touches(*out.irregular_flag))
        x = e.touches(y) ? Rational(-10) : Rational(1);
      else
        x = phi_h.at(EdgePair(local.at(e.u), local.at(e.v)));
      out.phi[EdgePair(cl[e.u], cl[e.v])] = x;
    }
  out.closure = TypedGraph(gc, closure_types(g, C, all_flags));
  if (out.irregular_flag) out.extension = "stock";
  if (auto v = verify_decent(out.closure, out.phi)) {
    if (!out.irregular_flag) throw PostconditionError("closure labeling is not decent: " + describe(*v));
    // The -10/+1 extension cannot satisfy (b.1) on x1 x0 w0 when x1 has
    // type 1: both edges of that path touch an end and w0 x0 is positive.
    out.stock_extension_violation = describe(*v);
    PatternOptions opt;
    opt.budget = repair_budget;
    for (const auto& [e, x] : out.phi)
      if (!e.touches(cl[*out.irregular_flag])) opt.pins[e] = x;
    auto cert = find_decent_labeling(out.closure, opt);
    out.extension = "pinned-search";
    if (cert.kind != CertKind::DecentLabeling) {
      // Free the sails whose tips touch the irregular flag as well.
      for (const auto& s : w.sails)
        if (g.has_edge(s.start(), *out.irregular_flag))
          for (std::size_t i = 0; i + 1 < s.path.size(); ++i)
            opt.pins.erase(EdgePair(cl[s.path[i]], cl[s.path[i + 1]]));
      cert = find_decent_labeling(out.closure, opt);
      out.extension = "sail-search";
    }
    if (cert.kind != CertKind::DecentLabeling) {
      opt.pins.clear();
      cert = find_decent_labeling(out.closure, opt);
      out.extension = "search";
    }
    if (cert.kind != CertKind::DecentLabeling)
      throw PostconditionError("closure has no decent labeling within budget; -10/+1 extension failed: " +
                               out.stock_extension_violation);
    out.phi = *cert.labeling;
    if (auto v2 = verify_decent(out.closure, out.phi))
      throw PostconditionError("closure labeling is not decent: " + describe(*v2));
  }

  if (out.irregular_flag) {
    const Vertex w0 = cl[*out.irregular_flag];
    const auto& tau = out.closure.tau;
    const auto th = rational_thresholds();
    for_each_t_simple_path(
        out.closure, 2, [&](Vertex a) { return a != w0 && tau[a] == 2; },
        [&](Vertex b) { return b == w0; },
        [&](const std::vector<Vertex>& path) {
          auto x = labels_along(gc, out.phi, path);
          if (imin_runs<Rational>(x, th.zero).size() < 2)
            out.spot_check_failures.push_back("2-simple path into the irregular flag with fewer than two imins");
          return true;
        });
    for_each_t_simple_path(
        out.closure, 1, [&](Vertex a) { return tau[a] == 1; }, [&](Vertex b) { return b == w0; },
        [&](const std::vector<Vertex>& path) {
          auto x = labels_along(gc, out.phi, path);
          if (!cond::decent_b<Rational>(x, th))
            out.spot_check_failures.push_back("1-simple path from the irregular flag fails (b.1)");
          return true;
        });
  }
  return out;
}

}  // namespace gel
