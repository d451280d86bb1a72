#include "gel/canon.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace gel {

ColoredDigraph::ColoredDigraph(int n) : n(n), color(n, 0), arc(n, std::vector<char>(n, 0)) {}

ColoredDigraph as_digraph(const Graph& g) {
  ColoredDigraph d(g.order());
  for (const auto& e : g.edges()) {
    d.add_arc(e.u, e.v);
    d.add_arc(e.v, e.u);
  }
  return d;
}

namespace {

using Cells = std::vector<int>;

int renumber(Cells& cell, const std::vector<std::vector<int>>& sig) {
  std::vector<int> idx(cell.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
  int k = -1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i == 0 || sig[idx[i]] != sig[idx[i - 1]]) ++k;
    cell[idx[i]] = k;
  }
  return k + 1;
}

void refine(const ColoredDigraph& d, Cells& cell) {
  const int n = d.n;
  std::vector<std::vector<int>> sig(n);
  int count = -1;
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(cell[v]);
      std::vector<int> out, in;
      for (int x = 0; x < n; ++x) {
        if (d.arc[v][x]) out.push_back(cell[x]);
        if (d.arc[x][v]) in.push_back(cell[x]);
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      s.push_back(static_cast<int>(out.size()));
      s.insert(s.end(), out.begin(), out.end());
      s.push_back(-1);
      s.insert(s.end(), in.begin(), in.end());
    }
    int k = renumber(cell, sig);
    if (k == count) break;
    count = k;
  }
}

bool twins(const ColoredDigraph& d, int u, int v) {
  if (d.color[u] != d.color[v] || d.arc[u][v] != d.arc[v][u]) return false;
  for (int x = 0; x < d.n; ++x) {
    if (x == u || x == v) continue;
    if (d.arc[u][x] != d.arc[v][x] || d.arc[x][u] != d.arc[x][v]) return false;
  }
  return true;
}

std::string code_of(const ColoredDigraph& d, const std::vector<int>& pos) {
  std::vector<int> inv(d.n);
  for (int v = 0; v < d.n; ++v) inv[pos[v]] = v;
  std::string code;
  for (int p = 0; p < d.n; ++p) {
    code += std::to_string(d.color[inv[p]]);
    code += ',';
  }
  code += '|';
  for (int p = 0; p < d.n; ++p)
    for (int q = 0; q < d.n; ++q) code += d.arc[inv[p]][inv[q]] ? '1' : '0';
  return code;
}

struct Searcher {
  const ColoredDigraph& d;
  CanonicalForm best;
  bool have = false;

  void run(Cells cell) {
    refine(d, cell);
    int cells = *std::max_element(cell.begin(), cell.end()) + 1;
    if (cells == d.n) {
      std::string code = code_of(d, cell);
      if (!have || code < best.code) {
        best.code = std::move(code);
        best.position = cell;
        have = true;
      } else if (code == best.code) {
        // best.position^-1 composed with cell maps this leaf onto the best one
        std::vector<int> inv(d.n), aut(d.n);
        for (int v = 0; v < d.n; ++v) inv[best.position[v]] = v;
        for (int v = 0; v < d.n; ++v) aut[v] = inv[cell[v]];
        best.automorphisms.push_back(std::move(aut));
      }
      return;
    }
    std::vector<int> size(cells, 0);
    for (int c : cell) ++size[c];
    int target = -1;
    for (int c = 0; c < cells; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    std::vector<int> tried;
    for (int v = 0; v < d.n; ++v) {
      if (cell[v] != target) continue;
      bool skip = false;
      for (int u : tried)
        if (twins(d, u, v)) {
          std::vector<int> swap(d.n);
          std::iota(swap.begin(), swap.end(), 0);
          std::swap(swap[u], swap[v]);
          best.automorphisms.push_back(std::move(swap));
          skip = true;
          break;
        }
      if (skip) continue;
      tried.push_back(v);
      Cells next(d.n);
      for (int x = 0; x < d.n; ++x) next[x] = 2 * cell[x] + ((cell[x] == target && x != v) ? 1 : 0);
      std::vector<std::vector<int>> sig(d.n);
      for (int x = 0; x < d.n; ++x) sig[x] = {next[x]};
      renumber(next, sig);
      run(std::move(next));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const ColoredDigraph& d) {
  Searcher s{d, {}, false};
  if (d.n == 0) return {};
  Cells cell(d.n);
  std::vector<std::vector<int>> sig(d.n);
  for (int v = 0; v < d.n; ++v) sig[v] = {d.color[v]};
  renumber(cell, sig);
  s.run(cell);
  return s.best;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_form(as_digraph(g)); }

bool isomorphic(const ColoredDigraph& a, const ColoredDigraph& b) {
  if (a.n != b.n) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

std::vector<int> edge_orbits(const Graph& g) {
  auto cf = canonical_form(g);
  std::vector<int> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& aut : cf.automorphisms)
    for (int id = 0; id < g.size(); ++id) {
      const auto& e = g.edge(id);
      int img = g.edge_id(aut[e.u], aut[e.v]);
      if (img < 0) continue;  // not an automorphism of g; ignore defensively
      int a = find(id), b = find(img);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> orbit(g.size());
  for (int id = 0; id < g.size(); ++id) orbit[id] = find(id);
  return orbit;
}

}  // namespace gel
