#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gel/graph.hpp"
#include "gel/labeling.hpp"
#include "gel/minima.hpp"

namespace gel {

struct TypedGraph {
  Graph graph;
  std::vector<int> tau;

  TypedGraph() = default;
  TypedGraph(Graph g, std::vector<int> t);  // checks tau is total and in {0,1,2}
};

struct GluQuad {
  TypedGraph typed;
  Labeling phi;
  Vertex root = 0;

  const Graph& graph() const { return typed.graph; }
  int tau(Vertex v) const { return typed.tau[v]; }
};

// How gluable condition (d) chooses between (d2.*) and (d3) for a path P
// from a type-2 vertex w to the root. by_length: |P| = 2 uses (d2.*), longer
// paths use (d3). by_distance: d(w,y) = 2 uses (d2.*) for every path,
// d(w,y) >= 3 uses (d3). either: as by_distance, except that a longer path
// to a vertex at distance two may satisfy (d3) instead.
enum class DSplit { by_length, by_distance, either };

struct Violation {
  std::string condition;
  std::vector<Vertex> path;        // witness, oriented as the condition reads it
  std::vector<Rational> values;    // labels along the witness
  std::vector<Vertex> other_path;  // second path of a goodness conflict
};

using Verdict = std::optional<Violation>;  // nullopt means the property holds

Thresholds<Rational> rational_thresholds();

inline constexpr std::size_t kDefaultPathCap = 5'000'000;

using VertexPredicate = std::function<bool(Vertex)>;
// Visits every simple path whose ends satisfy the predicates and whose interior
// vertices have type < t. Return false from the callback to stop.
void for_each_t_simple_path(const TypedGraph& tg, int t, const VertexPredicate& from,
                            const VertexPredicate& to,
                            const std::function<bool(const std::vector<Vertex>&)>& visit,
                            std::size_t cap = kDefaultPathCap);
std::vector<std::vector<Vertex>> t_simple_paths(const TypedGraph& tg, int t,
                                                const VertexPredicate& from,
                                                const VertexPredicate& to,
                                                std::size_t cap = kDefaultPathCap);

Verdict verify_decent(const TypedGraph& tg, const Labeling& phi);

bool is_locked(const GluQuad& q, Vertex w);
// The locking path (root, u, w) when w is locked.
std::optional<std::vector<Vertex>> locking_path(const GluQuad& q, Vertex w);

Verdict verify_gluable(const GluQuad& q, DSplit split = DSplit::either);

// Re-checks the cited condition on the witness; true iff the failure reproduces.
bool violation_reproduces(const GluQuad& q, const Violation& v, DSplit split = DSplit::either);
bool violation_reproduces(const TypedGraph& tg, const Labeling& phi, const Violation& v);

std::string describe(const Violation& v);

}  // namespace gel
