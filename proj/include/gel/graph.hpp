#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace gel {

using Vertex = int;

struct EdgePair {
  Vertex u = 0;
  Vertex v = 0;

  EdgePair() = default;
  EdgePair(Vertex a, Vertex b);  // stored as (min, max); throws on a == b

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }
  auto operator<=>(const EdgePair&) const = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<EdgePair>& edges);

  // Returns the new edge id. Throws GraphError on loops, duplicates, bad ids.
  int add_edge(Vertex a, Vertex b);
  int add_vertex();

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<EdgePair>& edges() const { return edges_; }
  const EdgePair& edge(int id) const { return edges_[id]; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  // Edge ids parallel to neighbors(v).
  const std::vector<int>& incident(Vertex v) const { return inc_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b) >= 0; }
  bool has_edge(const EdgePair& e) const { return has_edge(e.u, e.v); }
  int edge_id(Vertex a, Vertex b) const;  // -1 when absent
  int edge_id(const EdgePair& e) const { return edge_id(e.u, e.v); }

  bool operator==(const Graph& o) const;

 private:
  std::vector<EdgePair> edges_;
  std::vector<std::vector<Vertex>> adj_;  // sorted
  std::vector<std::vector<int>> inc_;
};

// Sorted edge list, handy for comparisons independent of insertion order.
std::vector<EdgePair> sorted_edges(const Graph& g);

std::vector<int> bfs_distances(const Graph& g, Vertex src);  // -1 = unreachable
bool is_connected(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);

// nullopt for forests.
std::optional<int> girth(const Graph& g);

struct Subgraph {
  Graph graph;
  std::vector<Vertex> old_to_new;  // -1 for deleted vertices
  std::vector<Vertex> new_to_old;
};

// Unknown vertices or edges throw GraphError.
Subgraph subgraph(const Graph& g, const std::vector<Vertex>& delete_vertices,
                  const std::vector<EdgePair>& delete_edges);
Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);
Graph delete_edge(const Graph& g, const EdgePair& e);
// perm[old] = new.
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

// Each simple cycle once, as a vertex sequence starting at its smallest vertex.
std::vector<std::vector<Vertex>> enumerate_cycles(const Graph& g,
                                                  std::optional<int> max_length = std::nullopt,
                                                  std::size_t cap = kDefaultCycleCap);

std::optional<std::vector<EdgePair>> has_matching_cut(const Graph& g);
bool is_matching_cut(const Graph& g, const std::vector<EdgePair>& cut);

struct ForbiddenReport {
  bool has_c3 = false;
  bool has_k23 = false;
};
ForbiddenReport forbidden_subgraph_scan(const Graph& g);

// Named small graphs used by tests and the CLI.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
// Two hubs joined by `paths` internally disjoint paths of length `len`.
Graph theta_graph(int paths, int len);

}  // namespace gel
