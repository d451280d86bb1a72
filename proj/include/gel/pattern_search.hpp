#pragma once

// Complete search over label patterns: weak orders of the edges interleaved
// with a fixed set of constants. Every typed condition compares labels only
// with each other and with those constants, so a pattern decides them.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gel/rational.hpp"

namespace gel {

enum class ConstraintKind {
  cycle_good,       // cycle with >= 2 local minima
  decent_a,         // 2-simple path between type-2 vertices
  decent_b,         // 1-simple path, type-1 end first
  glu_a,            // (root v1 v2)
  glu_b,            // 1-simple path from a type-1 vertex to the root
  glu_d2,           // root-first path satisfying (d2.i) or (d2.ii)
  glu_d2_lockable,  // as glu_d2, or locking
  glu_d3,           // root-first path satisfying (d3)
  glu_d2_or_d3,     // root-first path satisfying (d2.i), (d2.ii) or (d3)
};

struct PatternConstraint {
  ConstraintKind kind;
  std::vector<int> edges;  // edge ids along the path or cycle
};

struct PatternProblem {
  int edge_count = 0;
  std::vector<Rational> constants;  // strictly increasing
  std::vector<int> pinned;          // per edge: constant index or -1 (may be empty)
  std::vector<PatternConstraint> constraints;
  std::vector<int> order;           // assignment order; empty means 0..m-1
  int zero = -1, half = -1, two_thirds = -1, three_quarters = -1;  // constant indices
};

struct PatternStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t prunes = 0;
  std::uint64_t rejected_leaves = 0;  // constraint-feasible leaves the final check refused
};

// Called with labels by edge id; return true to accept the solution.
using PatternAccept = std::function<bool(const std::vector<Rational>&)>;

// Throws BudgetExceeded after `budget` nodes.
std::optional<std::vector<Rational>> solve_pattern(const PatternProblem& problem,
                                                   std::uint64_t budget, PatternStats& stats,
                                                   const PatternAccept& accept);

// Adds the constant if missing and returns its index; keeps indices sorted,
// shifting any previously returned indices stored in `problem`.
int add_constant(PatternProblem& problem, const Rational& value);

}  // namespace gel
