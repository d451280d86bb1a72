#include "gel/windmill.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "gel/canon.hpp"
#include "gel/errors.hpp"

namespace gel {

namespace {

// BFS distances in g - e.
std::vector<int> distances_without(const Graph& g, Vertex src, const EdgePair& e) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] >= 0 || EdgePair(u, v) == e) continue;
      dist[u] = dist[v] + 1;
      queue.push_back(u);
    }
  }
  return dist;
}

void sails_from_tip(const Graph& g, Vertex x0, Vertex x1, std::vector<Sail>& out) {
  if (g.degree(x1) >= 4) {
    out.push_back({{x0, x1}});
    return;
  }
  if (g.degree(x1) != 3) return;
  const EdgePair tip(x0, x1);
  const auto dist = distances_without(g, x1, tip);
  // Layered sweep along distance-increasing edges through 3-vertices.
  std::vector<Vertex> layer{x1};
  std::vector<char> seen(g.order(), 0);
  seen[x1] = 1;
  int target = -1;
  for (int d = 0; !layer.empty() && target < 0; ++d) {
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      if (g.degree(v) != 3) continue;
      for (Vertex u : g.neighbors(v)) {
        if (dist[u] != d + 1 || seen[u]) continue;
        seen[u] = 1;
        if (g.degree(u) >= 4) target = d + 1;
        next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  if (target < 0) return;
  std::vector<Vertex> path{x0, x1};
  std::function<void(Vertex)> walk = [&](Vertex v) {
    if (dist[v] == target) {
      if (g.degree(v) >= 4) out.push_back({path});
      return;
    }
    if (g.degree(v) != 3) return;
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] != dist[v] + 1) continue;
      path.push_back(u);
      walk(u);
      path.pop_back();
    }
  };
  walk(x1);
}

std::string branch_of(int degree, int k) {
  bool a = degree == std::max(4, k);
  bool b = degree == k + 1;
  if (a && b) return "both";
  if (a) return "max(4,k)";
  if (b) return "k+1";
  return "";
}

}  // namespace

std::vector<Sail> find_sails(const Graph& g) {
  std::vector<Sail> out;
  for (Vertex x0 = 0; x0 < g.order(); ++x0) {
    if (g.degree(x0) != 2) continue;
    for (Vertex x1 : g.neighbors(x0)) sails_from_tip(g, x0, x1, out);
  }
  return out;
}

bool Windmill::contains(Vertex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::vector<Windmill> find_windmills(const Graph& g, bool complete_only, std::size_t cap) {
  const auto sails = find_sails(g);
  // axis -> tip -> sails with that tip
  std::map<Vertex, std::map<EdgePair, std::vector<const Sail*>>> by_axis;
  for (const auto& s : sails) by_axis[s.end()][s.tip()].push_back(&s);

  std::vector<Windmill> out;
  for (const auto& [axis, tips] : by_axis) {
    const int t = static_cast<int>(tips.size());
    const int deg = g.degree(axis);
    std::vector<int> valid;
    for (int k = 3; k <= t; ++k)
      if (!branch_of(deg, k).empty()) valid.push_back(k);
    if (valid.empty()) continue;
    const int kmax = valid.back();
    if (complete_only) valid = {kmax};

    std::vector<const std::vector<const Sail*>*> groups;
    for (const auto& [tip, list] : tips) groups.push_back(&list);

    for (int k : valid) {
      // Tip subsets of size k in lexicographic order, then one sail per tip.
      std::vector<int> pick(k);
      for (int i = 0; i < k; ++i) pick[i] = i;
      while (true) {
        std::vector<int> choice(k, 0);
        while (true) {
          Windmill w;
          w.axis = axis;
          w.complete = k == kmax;
          w.degree_branch = branch_of(deg, k);
          std::set<Vertex> vs;
          for (int i = 0; i < k; ++i) {
            const Sail& s = *(*groups[pick[i]])[choice[i]];
            w.sails.push_back(s);
            vs.insert(s.path.begin(), s.path.end());
          }
          w.vertices.assign(vs.begin(), vs.end());
          out.push_back(std::move(w));
          if (out.size() > cap)
            throw BudgetExceeded("windmill enumeration exceeded cap of " + std::to_string(cap));
          int i = k - 1;
          while (i >= 0 && choice[i] + 1 == static_cast<int>(groups[pick[i]]->size())) {
            choice[i] = 0;
            --i;
          }
          if (i < 0) break;
          ++choice[i];
        }
        int i = k - 1;
        while (i >= 0 && pick[i] == t - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return out;
}

std::string FlagInfo::signature() const {
  std::ostringstream os;
  os << '(' << degree << '|';
  for (std::size_t i = 0; i < neighbor_degrees.size(); ++i)
    os << (i ? "," : "") << neighbor_degrees[i];
  os << ')';
  return os.str();
}

const FlagInfo* FlagReport::irregular() const {
  for (const auto& f : flags)
    if (f.irregular) return &f;
  return nullptr;
}

FlagReport flags_of(const Graph& g, const Windmill& w) {
  FlagReport r;
  const auto issue = [&](std::string code, std::vector<Vertex> witness, std::string detail) {
    r.issues.push_back({std::move(code), std::move(witness), std::move(detail)});
  };

  for (Vertex v = 0; v < g.order(); ++v) {
    if (w.contains(v)) continue;
    FlagInfo f;
    f.vertex = v;
    f.degree = g.degree(v);
    for (Vertex u : g.neighbors(v))
      if (w.contains(u)) f.h_neighbors.push_back(u);
    if (f.h_neighbors.size() < 2) continue;
    for (Vertex u : f.h_neighbors) f.neighbor_degrees.push_back(g.degree(u));
    std::sort(f.neighbor_degrees.begin(), f.neighbor_degrees.end());
    f.irregular = g.has_edge(v, w.axis);
    r.flags.push_back(std::move(f));
  }

  int irregular = 0;
  for (const auto& f : r.flags) {
    int n2 = 0, n3 = 0, n4 = 0;
    for (int d : f.neighbor_degrees) {
      if (d == 2) ++n2;
      else if (d == 3) ++n3;
      else if (d >= 4) ++n4;
    }
    const std::string sig = f.signature();
    if (f.degree == 2 && n2 >= 1) issue("sig(2|2,*)", {f.vertex}, sig);
    if (f.degree == 3 && n2 >= 2) issue("sig(3|2,2,*)", {f.vertex}, sig);
    if (n3 >= 2) issue("sig(*|3,3,*)", {f.vertex}, sig);
    if (n3 >= 1 && n4 >= 1) issue("sig(*|3,4+,*)", {f.vertex}, sig);
    if (f.degree == 3 && n2 >= 1 && n4 >= 1) issue("sig(3|2,4+,*)", {f.vertex}, sig);
    if (f.degree == 3) issue("sig(3|*)", {f.vertex}, sig);
    for (Vertex u : f.h_neighbors)
      if (g.degree(u) == 3 && !g.has_edge(u, w.axis))
        issue("3-vertex-far-from-axis", {f.vertex, u}, sig);
    if (f.irregular) ++irregular;
  }
  if (irregular > 1) {
    std::vector<Vertex> wit;
    for (const auto& f : r.flags)
      if (f.irregular) wit.push_back(f.vertex);
    issue("irregular>1", wit, std::to_string(irregular) + " flags adjacent to the axis");
  }

  for (std::size_t i = 0; i < w.sails.size(); ++i)
    for (std::size_t j = i + 1; j < w.sails.size(); ++j) {
      const auto& a = w.sails[i].path;
      const auto& b = w.sails[j].path;
      for (Vertex v : a) {
        if (v == w.axis || std::find(b.begin(), b.end(), v) == b.end()) continue;
        if (v == a.front() && v == b.front()) continue;
        issue("sails-intersect", {a.front(), b.front(), v}, "");
      }
    }

  std::set<EdgePair> sail_edges;
  for (const auto& s : w.sails)
    for (std::size_t i = 0; i + 1 < s.path.size(); ++i) sail_edges.insert({s.path[i], s.path[i + 1]});
  for (const auto& e : g.edges())
    if (w.contains(e.u) && w.contains(e.v) && !sail_edges.count(e))
      issue("edge-off-sails", {e.u, e.v}, "");

  auto gi = girth(g);
  if (gi && *gi < 5)
    r.advisories.push_back("girth " + std::to_string(*gi) + " < 5: structural guarantees do not apply");
  return r;
}

int FlagGraph::out_degree(int v) const {
  int n = 0;
  for (const auto& [a, b] : arcs) n += a == v;
  return n;
}

int FlagGraph::in_degree(int v) const {
  int n = 0;
  for (const auto& [a, b] : arcs) n += b == v;
  return n;
}

std::vector<int> FlagGraph::out(int v) const {
  std::vector<int> r;
  for (const auto& [a, b] : arcs)
    if (a == v) r.push_back(b);
  return r;
}

std::vector<int> FlagGraph::in(int v) const {
  std::vector<int> r;
  for (const auto& [a, b] : arcs)
    if (b == v) r.push_back(a);
  return r;
}

std::vector<std::string> flag_graph_violations(const FlagGraph& f) {
  std::vector<std::string> out;
  for (int v = 0; v < static_cast<int>(f.nodes.size()); ++v) {
    const auto& n = f.nodes[v];
    const int o = f.out_degree(v), i = f.in_degree(v);
    const std::string id = " (node " + std::to_string(v) + ")";
    if (n.kind == NodeKind::flag) {
      if (o > 1) out.push_back("flag out-degree at most 1" + id);
      if (i < 1) out.push_back("flag in-degree at least 1" + id);
    } else if (n.degenerate) {
      if (o != 0) out.push_back("degenerate sail out-degree 0" + id);
      if (i > 2) out.push_back("degenerate sail in-degree at most 2" + id);
    } else {
      if (o > 1) out.push_back("sail out-degree at most 1" + id);
      if (i > 1) out.push_back("sail in-degree at most 1" + id);
    }
  }
  for (const auto& [a, b] : f.arcs)
    if (f.nodes[a].kind == f.nodes[b].kind) out.push_back("arcs join sail and flag nodes");
  return out;
}

FlagGraph build_flag_graph(const Graph& g, const Windmill& w) {
  const auto report = flags_of(g, w);
  if (!report.clean()) {
    std::string msg = "flag audit not clean:";
    for (const auto& i : report.issues) msg += " " + i.code;
    throw PreconditionError(msg);
  }
  FlagGraph f;
  std::map<Vertex, int> sail_node;  // start vertex -> node
  std::map<Vertex, int> interior;   // 3-vertex -> node of its sail
  for (int i = 0; i < w.k(); ++i) sail_node[w.sails[i].start()];
  for (auto& [v, id] : sail_node) {
    id = static_cast<int>(f.nodes.size());
    f.nodes.push_back({NodeKind::sail, false, v, {}});
  }
  for (int i = 0; i < w.k(); ++i) {
    const auto& s = w.sails[i];
    int id = sail_node[s.start()];
    f.nodes[id].sails.push_back(i);
    f.nodes[id].degenerate = f.nodes[id].sails.size() > 1;
    for (std::size_t j = 1; j + 1 < s.path.size(); ++j) interior[s.path[j]] = id;
  }
  for (const auto& fl : report.flags) {
    if (fl.irregular) continue;
    int id = static_cast<int>(f.nodes.size());
    f.nodes.push_back({NodeKind::flag, false, fl.vertex, {}});
    for (Vertex u : fl.h_neighbors) {
      if (auto it = sail_node.find(u); it != sail_node.end()) f.arcs.push_back({it->second, id});
      else if (auto jt = interior.find(u); jt != interior.end()) f.arcs.push_back({id, jt->second});
    }
  }
  std::sort(f.arcs.begin(), f.arcs.end());
  auto bad = flag_graph_violations(f);
  if (!bad.empty()) throw PostconditionError("flag graph property violated: " + bad.front());
  return f;
}

const char* basic_name(Basic b) {
  switch (b) {
    case Basic::S: return "S";
    case Basic::S_minus: return "S-";
    case Basic::S_plus: return "S+";
    case Basic::C2: return "C2";
    case Basic::C4: return "C4";
  }
  return "?";
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::U: return "U";
    case Rule::A: return "A";
    case Rule::B: return "B";
  }
  return "?";
}

namespace {

struct Live {
  const FlagGraph& f;
  std::vector<char> alive;

  int out(int v) const {
    int n = 0;
    for (const auto& [a, b] : f.arcs) n += a == v && alive[b];
    return n;
  }
  int in(int v) const {
    int n = 0;
    for (const auto& [a, b] : f.arcs) n += b == v && alive[a];
    return n;
  }
  int first_out(int v) const {
    for (const auto& [a, b] : f.arcs)
      if (a == v && alive[b]) return b;
    return -1;
  }
  bool is_sail(int v) const { return f.nodes[v].kind == NodeKind::sail; }
};

std::optional<ConstructionStep> as_basic(const Live& l, const std::vector<int>& comp) {
  std::vector<int> nodes;
  for (int v : comp)
    if (l.alive[v]) nodes.push_back(v);
  ConstructionStep st;
  st.rule = Rule::U;
  if (nodes.size() == 1) {
    int v = nodes[0];
    if (!l.is_sail(v)) return std::nullopt;
    st.basic = l.f.nodes[v].degenerate ? Basic::S_minus : Basic::S;
    st.nodes = {v};
    return st;
  }
  int s = -1;
  for (int v : nodes)
    if (l.is_sail(v)) {
      s = v;
      break;
    }
  if (s < 0) return std::nullopt;
  if (nodes.size() == 2) {
    int fl = nodes[0] == s ? nodes[1] : nodes[0];
    if (l.is_sail(fl) || l.first_out(s) != fl) return std::nullopt;
    st.basic = l.out(fl) == 1 ? Basic::C2 : Basic::S_plus;
    st.nodes = {s, fl};
    return st;
  }
  if (nodes.size() % 2 != 0) return std::nullopt;
  for (int v : nodes)
    if (l.out(v) != 1 || l.in(v) != 1) return std::nullopt;
  std::vector<int> cycle{s};
  for (int v = l.first_out(s); v != s; v = l.first_out(v)) cycle.push_back(v);
  if (cycle.size() != nodes.size()) return std::nullopt;
  st.basic = Basic::C4;
  st.nodes = cycle;
  return st;
}

}  // namespace

ConstructionScript decompose_flag_graph(const FlagGraph& f) {
  auto bad = flag_graph_violations(f);
  if (!bad.empty()) throw PreconditionError("flag graph property violated: " + bad.front());
  const int n = static_cast<int>(f.nodes.size());
  std::vector<std::vector<int>> und(n);
  for (const auto& [a, b] : f.arcs) {
    und[a].push_back(b);
    und[b].push_back(a);
  }
  ConstructionScript script;
  std::vector<char> done(n, 0);
  Live live{f, std::vector<char>(n, 1)};
  for (int root = 0; root < n; ++root) {
    if (done[root]) continue;
    std::vector<int> comp{root};
    done[root] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int u : und[comp[i]])
        if (!done[u]) {
          done[u] = 1;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());

    std::vector<ConstructionStep> peeled;
    while (true) {
      if (auto b = as_basic(live, comp)) {
        script.steps.push_back(*b);
        break;
      }
      std::optional<ConstructionStep> step;
      for (int pass = 0; pass < 2 && !step; ++pass)
        for (int s : comp) {
          if (!live.alive[s] || !live.is_sail(s) || live.out(s) != 1 || live.in(s) != 0) continue;
          int fl = live.first_out(s);
          bool wide = live.out(fl) >= 2 || live.in(fl) >= 2;
          if (pass == 0 && wide) {
            step = ConstructionStep{Rule::A, Basic::S, {s}, fl};
            live.alive[s] = 0;
            break;
          }
          if (pass == 1 && live.in(fl) == 1 && live.out(fl) == 1) {
            step = ConstructionStep{Rule::B, Basic::S, {fl, s}, live.first_out(fl)};
            live.alive[s] = 0;
            live.alive[fl] = 0;
            break;
          }
        }
      if (!step)
        throw PreconditionError("component of node " + std::to_string(root) +
                                " is neither basic nor reducible by rule A or B");
      peeled.push_back(*step);
    }
    script.steps.insert(script.steps.end(), peeled.rbegin(), peeled.rend());
  }
  return script;
}

FlagGraph replay(const ConstructionScript& s) {
  FlagGraph f;
  std::map<int, int> id;
  const auto add = [&](int old, NodeKind kind, bool degenerate) {
    if (id.count(old)) throw PreconditionError("script introduces node " + std::to_string(old) + " twice");
    id[old] = static_cast<int>(f.nodes.size());
    f.nodes.push_back({kind, degenerate, -1, {}});
    return id[old];
  };
  const auto existing = [&](int old) {
    auto it = id.find(old);
    if (it == id.end()) throw PreconditionError("script refers to unknown node " + std::to_string(old));
    return it->second;
  };
  for (const auto& st : s.steps) {
    switch (st.rule) {
      case Rule::U:
        switch (st.basic) {
          case Basic::S: add(st.nodes.at(0), NodeKind::sail, false); break;
          case Basic::S_minus: add(st.nodes.at(0), NodeKind::sail, true); break;
          case Basic::S_plus:
          case Basic::C2: {
            int a = add(st.nodes.at(0), NodeKind::sail, false);
            int b = add(st.nodes.at(1), NodeKind::flag, false);
            f.arcs.push_back({a, b});
            if (st.basic == Basic::C2) f.arcs.push_back({b, a});
            break;
          }
          case Basic::C4: {
            const int m = static_cast<int>(st.nodes.size());
            if (m < 4 || m % 2) throw PreconditionError("C4 element needs an even cycle of length at least 4");
            std::vector<int> c;
            for (int i = 0; i < m; ++i)
              c.push_back(add(st.nodes[i], i % 2 ? NodeKind::flag : NodeKind::sail, false));
            for (int i = 0; i < m; ++i) f.arcs.push_back({c[i], c[(i + 1) % m]});
            break;
          }
        }
        break;
      case Rule::A: {
        int t = existing(st.target);
        int a = add(st.nodes.at(0), NodeKind::sail, false);
        f.arcs.push_back({a, t});
        break;
      }
      case Rule::B: {
        int t = existing(st.target);
        int fl = add(st.nodes.at(0), NodeKind::flag, false);
        int a = add(st.nodes.at(1), NodeKind::sail, false);
        f.arcs.push_back({a, fl});
        f.arcs.push_back({fl, t});
        break;
      }
    }
  }
  return f;
}

bool same_flag_graph(const FlagGraph& a, const FlagGraph& b) {
  const auto digraph = [](const FlagGraph& f) {
    ColoredDigraph d(static_cast<int>(f.nodes.size()));
    for (std::size_t i = 0; i < f.nodes.size(); ++i)
      d.color[i] = f.nodes[i].kind == NodeKind::flag ? 2 : f.nodes[i].degenerate ? 1 : 0;
    for (const auto& [x, y] : f.arcs) d.add_arc(x, y);
    return d;
  };
  if (a.nodes.size() != b.nodes.size() || a.arcs.size() != b.arcs.size()) return false;
  return isomorphic(digraph(a), digraph(b));
}

std::string to_dot(const FlagGraph& f) {
  std::ostringstream os;
  os << "digraph flags {\n";
  for (std::size_t i = 0; i < f.nodes.size(); ++i) {
    const auto& n = f.nodes[i];
    os << "  n" << i << " [label=\"" << (n.kind == NodeKind::flag ? "f" : "s");
    if (n.vertex >= 0) os << n.vertex;
    os << "\", shape=" << (n.kind == NodeKind::flag ? "box" : n.degenerate ? "doublecircle" : "circle")
       << "];\n";
  }
  for (const auto& [a, b] : f.arcs)
    os << "  n" << a << " -> n" << b
       << (f.nodes[a].kind == NodeKind::sail ? " [label=2];\n" : " [label=3, style=dashed];\n");
  os << "}\n";
  return os.str();
}

}  // namespace gel
