#include "gel/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gel/errors.hpp"

namespace gel {

EdgePair::EdgePair(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
}

Graph::Graph(int n) : adj_(n), inc_(n) {
  if (n < 0) throw GraphError("negative vertex count");
}

Graph::Graph(int n, const std::vector<EdgePair>& edges) : Graph(n) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

int Graph::add_vertex() {
  adj_.emplace_back();
  inc_.emplace_back();
  return order() - 1;
}

int Graph::add_edge(Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= order() || b >= order())
    throw GraphError("edge " + std::to_string(a) + "-" + std::to_string(b) + " out of range");
  EdgePair e(a, b);
  if (has_edge(a, b))
    throw GraphError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  int id = size();
  edges_.push_back(e);
  auto put = [&](Vertex x, Vertex y) {
    auto pos = std::lower_bound(adj_[x].begin(), adj_[x].end(), y) - adj_[x].begin();
    adj_[x].insert(adj_[x].begin() + pos, y);
    inc_[x].insert(inc_[x].begin() + pos, id);
  };
  put(a, b);
  put(b, a);
  return id;
}

int Graph::edge_id(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= order() || b >= order()) return -1;
  const auto& na = adj_[a];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it == na.end() || *it != b) return -1;
  return inc_[a][it - na.begin()];
}

bool Graph::operator==(const Graph& o) const {
  return order() == o.order() && sorted_edges(*this) == sorted_edges(o);
}

std::vector<EdgePair> sorted_edges(const Graph& g) {
  auto es = g.edges();
  std::sort(es.begin(), es.end());
  return es;
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    for (Vertex y : g.neighbors(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

int min_degree(const Graph& g) {
  int best = g.order() ? g.degree(0) : 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  const int n = g.order();
  std::vector<int> dist(n), parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<Vertex> q{s};
    dist[s] = 0;
    parent[s] = -1;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      if (best && 2 * dist[x] + 1 >= *best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push_back(y);
        } else if (parent[x] != y) {
          int len = dist[x] + dist[y] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

Subgraph subgraph(const Graph& g, const std::vector<Vertex>& delete_vertices,
                  const std::vector<EdgePair>& delete_edges) {
  std::vector<char> gone(g.order(), 0);
  for (Vertex v : delete_vertices) {
    if (v < 0 || v >= g.order()) throw GraphError("unknown vertex " + std::to_string(v));
    gone[v] = 1;
  }
  std::vector<char> cut(g.size(), 0);
  for (const auto& e : delete_edges) {
    int id = g.edge_id(e);
    if (id < 0)
      throw GraphError("unknown edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    cut[id] = 1;
  }
  Subgraph s;
  s.old_to_new.assign(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) {
      s.old_to_new[v] = static_cast<int>(s.new_to_old.size());
      s.new_to_old.push_back(v);
    }
  s.graph = Graph(static_cast<int>(s.new_to_old.size()));
  for (int id = 0; id < g.size(); ++id) {
    const auto& e = g.edge(id);
    if (cut[id] || gone[e.u] || gone[e.v]) continue;
    s.graph.add_edge(s.old_to_new[e.u], s.old_to_new[e.v]);
  }
  return s;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : keep) {
    if (v < 0 || v >= g.order()) throw GraphError("unknown vertex " + std::to_string(v));
    in[v] = 1;
  }
  std::vector<Vertex> del;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in[v]) del.push_back(v);
  return subgraph(g, del, {});
}

Graph delete_edge(const Graph& g, const EdgePair& e) { return subgraph(g, {}, {e}).graph; }

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph h(g.order());
  for (const auto& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

std::vector<std::vector<Vertex>> enumerate_cycles(const Graph& g, std::optional<int> max_length,
                                                  std::size_t cap) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.order();
  std::vector<char> on(n, 0);
  std::vector<Vertex> path;
  int limit = max_length.value_or(n);

  auto dfs = [&](auto&& self, Vertex s, Vertex x) -> void {
    for (Vertex y : g.neighbors(x)) {
      if (y == s) {
        if (path.size() >= 3 && path[1] < path.back()) {
          if (out.size() >= cap)
            throw BudgetExceeded("cycle enumeration exceeded cap of " + std::to_string(cap));
          out.push_back(path);
        }
        continue;
      }
      if (y < s || on[y] || static_cast<int>(path.size()) >= limit) continue;
      on[y] = 1;
      path.push_back(y);
      self(self, s, y);
      path.pop_back();
      on[y] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = 1;
    path.assign(1, s);
    dfs(dfs, s, s);
    on[s] = 0;
  }
  return out;
}

bool is_matching_cut(const Graph& g, const std::vector<EdgePair>& cut) {
  std::vector<int> seen(g.order(), 0);
  for (const auto& e : cut) {
    if (!g.has_edge(e.u, e.v)) return false;
    if (seen[e.u]++ || seen[e.v]++) return false;
  }
  if (g.order() < 2) return false;
  return !is_connected(subgraph(g, {}, cut).graph);
}

std::optional<std::vector<EdgePair>> has_matching_cut(const Graph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  if (!is_connected(g)) return std::vector<EdgePair>{};

  std::vector<Vertex> order;
  {
    auto d = bfs_distances(g, 0);
    order.resize(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return d[a] < d[b]; });
  }
  std::vector<int> side(n, -1), cross(n, 0);
  int ones = 0;
  std::optional<std::vector<EdgePair>> found;

  auto place = [&](Vertex x, int s) {
    side[x] = s;
    ones += s;
    bool ok = true;
    for (Vertex y : g.neighbors(x))
      if (side[y] >= 0 && side[y] != s) {
        if (++cross[x] > 1) ok = false;
        if (++cross[y] > 1) ok = false;
      }
    return ok;
  };
  auto unplace = [&](Vertex x) {
    for (Vertex y : g.neighbors(x))
      if (side[y] >= 0 && side[y] != side[x]) {
        --cross[x];
        --cross[y];
      }
    ones -= side[x];
    side[x] = -1;
  };
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) {
      if (ones == 0) return false;
      std::vector<EdgePair> cut;
      for (const auto& e : g.edges())
        if (side[e.u] != side[e.v]) cut.push_back(e);
      found = cut;
      return true;
    }
    Vertex x = order[i];
    for (int s = 0; s < 2; ++s) {
      if (i == 0 && s == 1) break;
      bool ok = place(x, s);
      if (ok && self(self, i + 1)) return true;
      unplace(x);
    }
    return false;
  };
  rec(rec, 0);
  if (found && !is_matching_cut(g, *found))
    throw PostconditionError("matching cut search returned an invalid cut");
  return found;
}

ForbiddenReport forbidden_subgraph_scan(const Graph& g) {
  ForbiddenReport r;
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      int common = 0;
      const auto& na = g.neighbors(a);
      const auto& nb = g.neighbors(b);
      std::size_t i = 0, j = 0;
      while (i < na.size() && j < nb.size()) {
        if (na[i] == nb[j]) {
          ++common;
          ++i;
          ++j;
        } else if (na[i] < nb[j]) {
          ++i;
        } else {
          ++j;
        }
      }
      if (common >= 1 && g.has_edge(a, b)) r.has_c3 = true;
      if (common >= 3) r.has_k23 = true;
    }
  return r;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

Graph theta_graph(int paths, int len) {
  Graph g(2);
  for (int p = 0; p < paths; ++p) {
    Vertex prev = 0;
    for (int i = 1; i < len; ++i) {
      Vertex x = g.add_vertex();
      g.add_edge(prev, x);
      prev = x;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

}  // namespace gel
