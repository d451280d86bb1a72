#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gel/search.hpp"

namespace gel {

struct HuntOptions {
  int n = 9;
  int m = 13;
  int girth = 4;  // exact girth of emitted candidates
  int threads = 1;
  std::uint64_t budget = kDefaultBudget;  // per search
  std::string checkpoint;  // JSON file; resumed when it exists
  bool stop_after_first = false;
  // Stop certifying after this many candidates (0 = all), for smoke runs.
  std::size_t max_candidates = 0;
};

struct HuntStats {
  std::vector<std::size_t> per_level;  // non-isomorphic graphs kept at each edge count
  std::size_t candidates = 0;          // passed every filter
  std::size_t certified = 0;           // candidates run through is_critical
  std::size_t good = 0;                // candidates with a good labeling
  std::size_t bad_not_critical = 0;
  std::size_t budget_exceeded = 0;
  std::size_t found = 0;
};

// Filters applied to the final graphs (hereditary ones prune during growth):
// connected, girth exactly opt.girth, no C3, no K2,3, minimum degree at least
// two, no two adjacent 2-vertices, no matching cut, the cycle and path
// neighbour checks. Survivors go through is_critical.
bool hunt_filter(const Graph& g, int girth, std::string* why = nullptr);

// Non-isomorphic graphs with n vertices and m edges, no C3 and no K2,3,
// grown one edge at a time with canonical deduplication.
std::vector<Graph> enumerate_c3_k23_free(int n, int m, std::vector<std::size_t>* per_level = nullptr);

using HuntCallback = std::function<void(const Certificate&)>;
using HuntProgress = std::function<void(const HuntStats&)>;

// Emits each critical graph found with its re-verified certificate bundle.
HuntStats counterexample_hunt(const HuntOptions& opt, const HuntCallback& found,
                              const HuntProgress& progress = {});

}  // namespace gel
