#include "gel/labeling.hpp"

#include <span>

#include "gel/minima.hpp"

namespace gel {

std::vector<Rational> aligned_labels(const Graph& g, const Labeling& phi) {
  std::vector<Rational> out(g.size());
  for (int id = 0; id < g.size(); ++id) {
    auto it = phi.find(g.edge(id));
    if (it == phi.end())
      throw LabelError("no label for edge " + std::to_string(g.edge(id).u) + "-" +
                       std::to_string(g.edge(id).v));
    out[id] = it->second;
  }
  return out;
}

Labeling labeling_from(const Graph& g, const std::vector<Rational>& by_edge_id) {
  Labeling phi;
  for (int id = 0; id < g.size(); ++id) phi[g.edge(id)] = by_edge_id[id];
  return phi;
}

Labeling affine(const Labeling& phi, const Rational& a, const Rational& b) {
  Labeling out;
  for (const auto& [e, x] : phi) out[e] = a * x + b;
  return out;
}

namespace {

std::vector<LocalMinimum> to_minima(const std::vector<Rational>& x, const std::vector<Run>& runs,
                                    bool cyclic) {
  std::vector<LocalMinimum> out;
  const int len = static_cast<int>(x.size());
  for (const Run& r : runs) {
    LocalMinimum m;
    for (int i = 0; i < r.count; ++i) m.positions.push_back((r.first + i) % len);
    m.value = x[r.first];
    m.touches_endpoint = !cyclic && touches_endpoint(r, x.size());
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<LocalMinimum> cycle_minima(const std::vector<Rational>& labels) {
  return to_minima(labels, cycle_minimum_runs<Rational>(labels), true);
}

std::vector<LocalMinimum> path_minima(const std::vector<Rational>& labels) {
  return to_minima(labels, path_minimum_runs<Rational>(labels), false);
}

std::vector<LocalMinimum> path_imins(const std::vector<Rational>& labels) {
  std::vector<LocalMinimum> out;
  for (auto& m : path_minima(labels))
    if (m.is_imin()) out.push_back(std::move(m));
  return out;
}

std::vector<Rational> labels_along(const Graph& g, const Labeling& phi,
                                   const std::vector<Vertex>& walk, bool closed) {
  std::vector<Rational> out;
  const std::size_t k = walk.size();
  std::size_t steps = closed ? k : (k ? k - 1 : 0);
  for (std::size_t i = 0; i < steps; ++i) {
    Vertex a = walk[i], b = walk[(i + 1) % k];
    if (!g.has_edge(a, b))
      throw LabelError("walk uses non-edge " + std::to_string(a) + "-" + std::to_string(b));
    auto it = phi.find(EdgePair(a, b));
    if (it == phi.end())
      throw LabelError("no label for edge " + std::to_string(a) + "-" + std::to_string(b));
    out.push_back(it->second);
  }
  return out;
}

bool is_nondecreasing_path(const Graph& g, const Labeling& phi, const std::vector<Vertex>& path) {
  if (path.size() < 2) return false;
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : path) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  auto x = labels_along(g, phi, path);
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] < x[i - 1]) return false;
  return true;
}

GoodnessWitness is_good_paths(const Graph& g, const Labeling& phi) {
  const auto lab = aligned_labels(g, phi);
  const int n = g.order();
  std::vector<char> on(n, 0);
  std::vector<std::vector<Vertex>> first_path(n);
  std::vector<char> reached(n, 0);
  std::vector<Vertex> path;
  std::optional<PathConflict> conflict;

  // Explores nondecreasing continuations of `path` whose last edge has label `last`.
  auto dfs = [&](auto&& self, Vertex x, const Rational* last) -> bool {
    const auto& nb = g.neighbors(x);
    const auto& ids = g.incident(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex y = nb[i];
      if (on[y]) continue;
      const Rational& l = lab[ids[i]];
      if (last && l < *last) continue;
      path.push_back(y);
      if (reached[y]) {
        conflict = PathConflict{path.front(), y, first_path[y], path};
        return true;
      }
      reached[y] = 1;
      first_path[y] = path;
      on[y] = 1;
      if (self(self, y, &l)) return true;
      on[y] = 0;
      path.pop_back();
    }
    return false;
  };

  for (Vertex s = 0; s < n; ++s) {
    std::fill(reached.begin(), reached.end(), 0);
    std::fill(on.begin(), on.end(), 0);
    on[s] = 1;
    reached[s] = 1;  // a path never returns to its start
    path.assign(1, s);
    if (dfs(dfs, s, nullptr)) return {*conflict};
  }
  return {};
}

GoodnessWitness is_good_cycles(const Graph& g, const Labeling& phi, std::size_t cycle_cap) {
  aligned_labels(g, phi);
  for (const auto& c : enumerate_cycles(g, std::nullopt, cycle_cap)) {
    auto x = labels_along(g, phi, c, true);
    auto runs = cycle_minimum_runs<Rational>(x);
    if (runs.size() < 2) return {CycleDeficit{c, static_cast<int>(runs.size())}};
  }
  return {};
}

}  // namespace gel
