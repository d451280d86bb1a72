#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond Graph itself.

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "gel/graph.hpp"
#include "gel/labeling.hpp"

namespace oracle {

using gel::Graph;
using gel::Rational;
using gel::Vertex;

// Cycles as vertex sets of closed walks, counted by brute-force DFS from every
// vertex in both directions, then divided out.
inline long count_cycles(const Graph& g) {
  long closed = 0;
  const int n = g.order();
  std::vector<char> on(n, 0);
  std::function<void(Vertex, Vertex, int)> dfs = [&](Vertex start, Vertex x, int len) {
    for (Vertex y : g.neighbors(x)) {
      if (y == start && len >= 3) ++closed;
      if (on[y] || y < start) continue;
      on[y] = 1;
      dfs(start, y, len + 1);
      on[y] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = 1;
    dfs(s, s, 1);
    on[s] = 0;
  }
  return closed / 2;
}

inline int girth(const Graph& g) {  // 0 for forests
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<int> d(g.order(), -1), par(g.order(), -1);
    std::queue<Vertex> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if (d[y] < 0) {
          d[y] = d[x] + 1;
          par[y] = x;
          q.push(y);
        } else if (par[x] != y) {
          int c = d[x] + d[y] + 1;
          if (best == 0 || c < best) best = c;
        }
      }
    }
  }
  return best;
}

// Every simple path from a to b as a vertex list.
inline std::vector<std::vector<Vertex>> all_paths(const Graph& g, Vertex a, Vertex b) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{a};
  std::vector<char> on(g.order(), 0);
  on[a] = 1;
  std::function<void(Vertex)> dfs = [&](Vertex x) {
    if (x == b) {
      out.push_back(path);
      return;
    }
    for (Vertex y : g.neighbors(x)) {
      if (on[y]) continue;
      on[y] = 1;
      path.push_back(y);
      dfs(y);
      path.pop_back();
      on[y] = 0;
    }
  };
  dfs(a);
  return out;
}

// Counts nondecreasing paths for every ordered pair.
inline bool is_good(const Graph& g, const gel::Labeling& phi) {
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = 0; b < g.order(); ++b) {
      if (a == b) continue;
      int count = 0;
      for (const auto& p : all_paths(g, a, b)) {
        bool ok = true;
        for (std::size_t i = 0; i + 2 < p.size() && ok; ++i)
          ok = phi.at(gel::EdgePair(p[i], p[i + 1])) <= phi.at(gel::EdgePair(p[i + 1], p[i + 2]));
        if (ok) ++count;
      }
      if (count > 1) return false;
    }
  return true;
}

// Labelings from a level assignment.
inline gel::Labeling from_levels(const Graph& g, const std::vector<int>& level) {
  gel::Labeling phi;
  for (int e = 0; e < g.size(); ++e) phi[g.edge(e)] = Rational(level[e]);
  return phi;
}

// Every weak order of m items as level vectors using levels 0..k-1 with all
// levels hit.
inline void for_each_weak_order(int m, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> lv(m, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      int k = m ? *std::max_element(lv.begin(), lv.end()) + 1 : 0;
      std::vector<char> hit(k, 0);
      for (int x : lv) hit[x] = 1;
      if (std::all_of(hit.begin(), hit.end(), [](char c) { return c; })) f(lv);
      return;
    }
    for (int v = 0; v < m; ++v) {
      lv[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

inline std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

// Brute-force isomorphism over all permutations (n <= 8).
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> p(a.order());
  for (int i = 0; i < a.order(); ++i) p[i] = i;
  do {
    bool ok = true;
    for (const auto& e : a.edges())
      if (!b.has_edge(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Connected graphs with 1..max_edges edges and no isolated vertices, one per
// isomorphism class, found by brute-force isomorphism over edge subsets of K_n.
inline std::vector<Graph> connected_graphs_up_to(int max_edges) {
  std::vector<Graph> classes;
  for (int n = 2; n <= max_edges + 1; ++n) {
    std::vector<gel::EdgePair> all;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
    const int N = static_cast<int>(all.size());
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
      if (!pick.empty()) {
        Graph g(n);
        for (int i : pick) g.add_edge(all[i].u, all[i].v);
        if (gel::min_degree(g) >= 1 && gel::is_connected(g)) {
          bool dup = false;
          for (const auto& h : classes)
            if (oracle::isomorphic(g, h)) {
              dup = true;
              break;
            }
          if (!dup) classes.push_back(g);
        }
      }
      if (static_cast<int>(pick.size()) == max_edges) return;
      for (int i = start; i < N; ++i) {
        pick.push_back(i);
        rec(i + 1);
        pick.pop_back();
      }
    };
    // n vertices need at least n-1 edges.
    if (n - 1 <= max_edges) rec(0);
  }
  return classes;
}

}  // namespace oracle
