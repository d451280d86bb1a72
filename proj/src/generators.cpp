#include "gel/generators.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "gel/errors.hpp"
#include "gel/windmill.hpp"

namespace gel {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

struct Plan {
  struct SailNode {
    std::vector<std::vector<Vertex>> paths;  // x0 .. x_l = axis
    int in = 0;
    bool out = false;
    bool irregular = false;
  };

  Graph g{1};
  std::map<Vertex, int> want;  // minimum degree after padding
  std::vector<SailNode> sails;
  std::vector<Vertex> flags;
  std::optional<Vertex> w0;
  bool all2_c4 = false;
  std::ostringstream plan;

  std::vector<Vertex> path(int l, std::optional<Vertex> start = std::nullopt) {
    std::vector<Vertex> p;
    p.push_back(start ? *start : g.add_vertex());
    for (int i = 1; i < l; ++i) p.push_back(g.add_vertex());
    p.push_back(0);
    for (int i = 0; i < l; ++i) g.add_edge(p[i], p[i + 1]);
    want[p[0]] = 2;
    for (int i = 1; i < l; ++i) want[p[i]] = 3;
    return p;
  }
  int sail(int l) {
    sails.push_back({{path(l)}, 0, false, false});
    return static_cast<int>(sails.size()) - 1;
  }
  Vertex flag(const std::vector<Vertex>& nbrs) {
    Vertex f = g.add_vertex();
    for (Vertex v : nbrs) g.add_edge(f, v);
    want[f] = 4;
    flags.push_back(f);
    return f;
  }
  Vertex x0(int s) const { return sails[s].paths[0][0]; }
  Vertex near_end(int s, int p = 0) const {
    const auto& q = sails[s].paths[p];
    return q[q.size() - 2];
  }
  int length(int s, int p = 0) const { return static_cast<int>(sails[s].paths[p].size()) - 1; }
  int k() const {
    int n = 0;
    for (const auto& s : sails) n += static_cast<int>(s.paths.size());
    return n;
  }
  bool near_end_free(int s, int p) const {
    if (length(s, p) < 2) return false;
    Vertex u = near_end(s, p);
    return g.degree(u) == 2;
  }

  void component(std::mt19937_64& rng, bool allow_c4, bool evil) {
    int kind = evil ? 4 : pick(rng, 0, allow_c4 ? 4 : 3);
    switch (kind) {
      case 0: {
        int l = pick(rng, 1, 4);
        sail(l);
        plan << "U(S " << l << ") ";
        break;
      }
      case 1: {
        int a = pick(rng, 2, 3), b = pick(rng, 5 - a, 4);
        int s = sail(a);
        sails[s].paths.push_back(path(b, x0(s)));
        plan << "U(S- " << a << "," << b << ") ";
        break;
      }
      case 2: {
        int l = pick(rng, 1, 3);
        int s = sail(l);
        Vertex f = flag({x0(s)});
        sails[s].out = true;
        (void)f;
        plan << "U(S+ " << l << ") ";
        break;
      }
      case 3: {
        int l = pick(rng, 4, 5);
        int s = sail(l);
        flag({x0(s), near_end(s)});
        sails[s].out = true;
        sails[s].in = 1;
        plan << "U(C2 " << l << ") ";
        break;
      }
      default: {
        int a = evil ? 2 : pick(rng, 2, 3), b = evil ? 2 : pick(rng, 2, 3);
        int s1 = sail(a), s2 = sail(b);
        flag({x0(s1), near_end(s2)});
        flag({x0(s2), near_end(s1)});
        for (int s : {s1, s2}) {
          sails[s].out = true;
          sails[s].in = 1;
        }
        all2_c4 = all2_c4 || (a == 2 && b == 2);
        plan << "U(C4 " << a << "," << b << ") ";
        break;
      }
    }
  }

  void rule(std::mt19937_64& rng) {
    if (!flags.empty() && coin(rng)) {
      Vertex f = flags[pick(rng, 0, static_cast<int>(flags.size()) - 1)];
      int l = pick(rng, 2, 3);
      int s = sail(l);
      g.add_edge(f, x0(s));
      sails[s].out = true;
      plan << "A(" << l << ") ";
      return;
    }
    std::vector<std::pair<int, int>> hosts;
    for (int s = 0; s < static_cast<int>(sails.size()); ++s) {
      int room = static_cast<int>(sails[s].paths.size()) - sails[s].in;
      if (room <= 0) continue;
      for (int p = 0; p < static_cast<int>(sails[s].paths.size()); ++p)
        if (near_end_free(s, p)) hosts.push_back({s, p});
    }
    if (hosts.empty()) return;
    auto [t, p] = hosts[pick(rng, 0, static_cast<int>(hosts.size()) - 1)];
    int l = pick(rng, 2, 3);
    int s = sail(l);
    flag({x0(s), near_end(t, p)});
    sails[s].out = true;
    sails[t].in += 1;
    plan << "B(" << l << ") ";
  }

  void irregular_flag(std::mt19937_64& rng) {
    std::vector<Vertex> tips;
    for (int s = 0; s < static_cast<int>(sails.size()); ++s)
      if (!sails[s].out && sails[s].paths.size() == 1 && length(s) >= 3 && g.degree(x0(s)) == 1 &&
          coin(rng, 0.7))
        tips.push_back(x0(s));
    if (tips.empty()) return;
    Vertex f = g.add_vertex();
    g.add_edge(f, 0);
    for (Vertex v : tips) g.add_edge(f, v);
    want[f] = 4;
    w0 = f;
    plan << "I(" << tips.size() << ") ";
  }

  void pad(Vertex v, int d) {
    while (g.degree(v) < d) g.add_edge(v, g.add_vertex());
  }
};

}  // namespace

SyntheticWindmill random_windmill(std::mt19937_64& rng, const WindmillPlanOptions& opt) {
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    Plan p;
    if (opt.force_evil) p.component(rng, true, true);
    int comps = pick(rng, 1, opt.max_components);
    for (int i = 0; i < comps || p.k() < 3; ++i) p.component(rng, opt.allow_c4, false);
    int rules = pick(rng, 0, opt.max_rules);
    for (int i = 0; i < rules; ++i) p.rule(rng);
    if (opt.allow_irregular && coin(rng, 0.3)) p.irregular_flag(rng);
    for (const auto& [v, d] : std::map<Vertex, int>(p.want)) p.pad(v, d);

    const int k = p.k();
    bool axis_leaf = false;
    if (!p.w0) {
      if (k == 3) axis_leaf = true;
      else if (opt.force_evil) axis_leaf = true;
      else if (!p.all2_c4 && coin(rng, 0.3)) axis_leaf = true;
    }
    if (axis_leaf) p.g.add_edge(0, p.g.add_vertex());
    const bool axis_type1 = p.w0.has_value() || axis_leaf;
    const bool evil = p.all2_c4 && axis_type1;
    if (evil != opt.force_evil) continue;

    auto gi = girth(p.g);
    if (gi && *gi < 5) continue;
    std::optional<Windmill> found;
    for (auto& w : find_windmills(p.g, true))
      if (w.axis == 0 && w.k() == k) found = w;
    if (!found || !flags_of(p.g, *found).clean()) continue;
    return {p.g, 0, k, p.w0.has_value(), evil, p.plan.str()};
  }
  throw BudgetExceeded("no synthetic windmill met the constraints");
}

Graph random_graph(std::mt19937_64& rng, int n, int m, int min_girth) {
  Graph g(n);
  std::vector<EdgePair> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (const auto& e : pairs) {
    if (g.size() >= m) break;
    if (min_girth > 3) {
      auto d = bfs_distances(g, e.u);
      if (d[e.v] >= 0 && d[e.v] + 1 < min_girth) continue;
    }
    g.add_edge(e.u, e.v);
  }
  return g;
}

}  // namespace gel
