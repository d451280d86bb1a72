#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gel/catalog.hpp"
#include "gel/gluing.hpp"

namespace gel {

enum class ScriptOp { piece, sum1, sum2, edge, lock };

const char* script_op_name(ScriptOp op);
ScriptOp script_op_from_name(const std::string& name);  // throws PreconditionError

// piece: start from `operand`. sum1: 1-sum with `operand`. sum2: 2-sum of the
// current w1 with the operand's w2. edge / lock: attach a cycle with the
// given sail length along `path` (root first).
struct ScriptStep {
  ScriptOp op = ScriptOp::piece;
  std::optional<CatalogParams> operand;
  Vertex w1 = -1;
  Vertex w2 = -1;
  std::array<Vertex, 3> path{};
  int sail_length = 2;
};

struct CompositionScript {
  DSplit split = DSplit::either;
  std::vector<ScriptStep> steps;  // the first one is a piece
};

struct ScriptTrace {
  std::vector<GluQuad> quads;  // state after each step
};

// Replays every step, re-running verify_gluable and verify_decent after each.
// Throws PreconditionError for malformed scripts and PostconditionError
// (naming the step) when a state fails verification.
ScriptTrace replay_script(const CompositionScript& s);

struct ScriptGenOptions {
  int min_steps = 2;
  int max_steps = 5;
  int max_order = 40;  // stop growing past this many vertices
};

// A script whose every step satisfies its operation's preconditions.
CompositionScript random_script(std::mt19937_64& rng, const ScriptGenOptions& opt = {});

std::string describe(const CompositionScript& s);

}  // namespace gel
