#pragma once

#include <string>
#include <vector>

#include "gel/graph.hpp"

namespace gel {

// Vertex-colored directed graph; undirected graphs use symmetric arcs.
struct ColoredDigraph {
  int n = 0;
  std::vector<int> color;
  std::vector<std::vector<char>> arc;

  explicit ColoredDigraph(int n = 0);
  void add_arc(int a, int b) { arc[a][b] = 1; }
};

ColoredDigraph as_digraph(const Graph& g);

struct CanonicalForm {
  std::vector<int> position;  // vertex -> canonical position
  std::string code;           // equal codes <=> isomorphic
  // Automorphisms met during the search (not necessarily generating the group).
  std::vector<std::vector<int>> automorphisms;
};

// Individualization/refinement with twin pruning.
CanonicalForm canonical_form(const ColoredDigraph& d);
CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const ColoredDigraph& a, const ColoredDigraph& b);
bool isomorphic(const Graph& a, const Graph& b);

// Orbit id per edge under the automorphisms discovered by canonical_form.
std::vector<int> edge_orbits(const Graph& g);

}  // namespace gel
