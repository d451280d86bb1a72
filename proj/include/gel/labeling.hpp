#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gel/graph.hpp"
#include "gel/rational.hpp"

namespace gel {

using Labeling = std::map<EdgePair, Rational>;

struct LabelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Labels indexed by edge id; throws LabelError if phi misses an edge of g.
std::vector<Rational> aligned_labels(const Graph& g, const Labeling& phi);
Labeling labeling_from(const Graph& g, const std::vector<Rational>& by_edge_id);
Labeling affine(const Labeling& phi, const Rational& a, const Rational& b);

struct LocalMinimum {
  std::vector<int> positions;  // indices into the edge sequence
  Rational value;
  bool touches_endpoint = false;

  bool is_imin() const { return value < 0 || !touches_endpoint; }
};

// Edge sequences are given by their labels, in order.
std::vector<LocalMinimum> cycle_minima(const std::vector<Rational>& labels);
std::vector<LocalMinimum> path_minima(const std::vector<Rational>& labels);
std::vector<LocalMinimum> path_imins(const std::vector<Rational>& labels);

// Labels along a vertex walk; throws LabelError on a non-edge.
std::vector<Rational> labels_along(const Graph& g, const Labeling& phi,
                                   const std::vector<Vertex>& walk, bool closed = false);

struct PathConflict {
  Vertex from = 0;
  Vertex to = 0;
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

struct CycleDeficit {
  std::vector<Vertex> cycle;
  int minima = 0;
};

struct GoodnessWitness {
  std::variant<std::monostate, PathConflict, CycleDeficit> detail;

  bool ok() const { return std::holds_alternative<std::monostate>(detail); }
  explicit operator bool() const { return ok(); }
};

GoodnessWitness is_good_paths(const Graph& g, const Labeling& phi);
GoodnessWitness is_good_cycles(const Graph& g, const Labeling& phi,
                               std::size_t cycle_cap = kDefaultCycleCap);

bool is_nondecreasing_path(const Graph& g, const Labeling& phi, const std::vector<Vertex>& path);

}  // namespace gel
