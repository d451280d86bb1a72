#pragma once

#include <random>
#include <string>
#include <vector>

#include "gel/graph.hpp"

namespace gel {

// A windmill with axis 0 whose flags follow the allowed patterns. Vertices
// that need more degree get pendant leaves.
struct SyntheticWindmill {
  Graph graph;
  Vertex axis = 0;
  int k = 0;
  bool irregular = false;
  bool evil = false;  // contains an all-length-2 C4 with a type-1 axis
  std::string plan;   // e.g. "U(S+ 2) U(C4 2,3) A(2) B(3)"
};

struct WindmillPlanOptions {
  int max_components = 3;
  int max_rules = 3;
  bool allow_c4 = true;
  bool allow_irregular = true;
  bool force_evil = false;
};

// Retries until the axis carries a complete windmill with a clean flag audit
// and the graph has girth at least 5.
SyntheticWindmill random_windmill(std::mt19937_64& rng, const WindmillPlanOptions& opt = {});

// Erdos-Renyi style graph with n vertices and m edges, optionally of girth at
// least `min_girth` (edges that would close a short cycle are skipped).
Graph random_graph(std::mt19937_64& rng, int n, int m, int min_girth = 3);

}  // namespace gel
