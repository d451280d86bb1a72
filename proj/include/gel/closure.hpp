#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gel/typed.hpp"
#include "gel/windmill.hpp"

namespace gel {

// Types deg_G(v) - deg_S(v) on the induced set S, with `flags` typed 2.
// Throws PreconditionError if some non-flag vertex would exceed type 2.
std::vector<int> closure_types(const Graph& g, const std::vector<Vertex>& set,
                               const std::vector<Vertex>& flags);

struct ClosureResult {
  // Set when the regular part contains an evil wheel; nothing else is built.
  bool obstruction = false;
  std::string obstruction_detail;

  FlagGraph flag_graph;
  ConstructionScript script;

  // The windmill plus its regular flags, with a gluable labeling rooted at the
  // axis. Local vertex i is regular_vertices[i] of g.
  GluQuad regular;
  std::vector<Vertex> regular_vertices;

  // The closure (regular part plus the irregular flag, if any), decent.
  TypedGraph closure;
  Labeling phi;
  std::vector<Vertex> closure_vertices;
  std::optional<Vertex> irregular_flag;  // id in g
  // "none" (no irregular flag), "stock" (-10 on the axis edge, +1 elsewhere),
  // "pinned-search" (regular labels kept, flag edges searched),
  // "sail-search" (sails at the flag searched too) or "search".
  std::string extension = "none";
  std::string stock_extension_violation;  // set when the -10/+1 extension is not decent

  // Irregular-flag path checks that failed (empty when they all hold).
  std::vector<std::string> spot_check_failures;
  std::vector<std::string> advisories;
};

// Throws PreconditionError when the flag audit is not clean or a sail does not
// fit its piece, and PostconditionError when an assembled labeling fails its
// verifier.
ClosureResult build_closure_labeling(const Graph& g, const Windmill& w,
                                     DSplit split = DSplit::either,
                                     std::uint64_t repair_budget = 50'000'000);

}  // namespace gel
