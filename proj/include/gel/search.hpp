#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gel/graph.hpp"
#include "gel/labeling.hpp"
#include "gel/pattern_search.hpp"
#include "gel/typed.hpp"

namespace gel {

enum class CertKind {
  GoodLabeling,
  BadExhausted,
  Criticality,
  NotCritical,
  DecentLabeling,
  NoDecentLabeling,
  GluableLabeling,
  NoGluableLabeling,
};

const char* cert_kind_name(CertKind k);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  std::uint64_t memo_hits = 0;
  // Goodness search: total orders accounted for by pruned or finished
  // branches. Equals m! after an exhaustion.
  std::uint64_t orderings_covered = 0;
  std::uint64_t orderings_total = 0;
  std::uint64_t leaves = 0;
  std::uint64_t rejected_leaves = 0;
};

struct Certificate {
  CertKind kind = CertKind::GoodLabeling;
  Graph graph;
  std::optional<Labeling> labeling;
  std::optional<std::vector<int>> types;
  std::optional<Vertex> root;
  std::optional<EdgePair> deleted_edge;  // set on sub-certificates of a bundle
  SearchStats stats;
  std::vector<Certificate> parts;
  std::string note;
};

inline constexpr std::uint64_t kDefaultBudget = 2'000'000'000ULL;

struct GoodSearchOptions {
  std::uint64_t budget = kDefaultBudget;
  int threads = 1;
  bool symmetry = true;  // restrict the first edge to orbit representatives
};

// Branch and bound over total orders of E(g); labels 1..m in insertion order.
// Throws BudgetExceeded. Needs n, m <= 64.
Certificate find_good_labeling(const Graph& g, const GoodSearchOptions& opt = {});

// Criticality or NotCritical (note says why). Every sub-certificate is
// re-verified before the bundle is returned.
Certificate is_critical(const Graph& g, const GoodSearchOptions& opt = {});

// Re-checks a certificate: labelings re-verified, exhaustion counts complete,
// bundles structurally complete. Returns a reason on failure.
std::optional<std::string> recheck(const Certificate& c);

// Weak-order goodness search through the pattern engine (no constants).
std::optional<Labeling> find_good_weak(const Graph& g, std::uint64_t budget = kDefaultBudget);

// Existence with distinct labels equals existence with ties.
bool certify_equivalence_distinct_vs_weak(const Graph& g);

struct PatternOptions {
  std::uint64_t budget = kDefaultBudget;
  DSplit split = DSplit::either;
  std::map<EdgePair, Rational> pins;  // edges forced to a value
};

Certificate find_decent_labeling(const TypedGraph& tg, const PatternOptions& opt = {});
Certificate find_gluable_labeling(const TypedGraph& tg, Vertex root, const PatternOptions& opt = {});

// The constraint system handed to the pattern engine, exposed for tests.
PatternProblem decent_problem(const TypedGraph& tg);
PatternProblem gluable_problem(const TypedGraph& tg, Vertex root, const PatternOptions& opt,
                               bool& infeasible);

}  // namespace gel
