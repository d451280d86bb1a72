#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gel/graph.hpp"

namespace gel {

// x0..xl with deg(x0) = 2, interior degrees 3, deg(xl) >= 4.
struct Sail {
  std::vector<Vertex> path;

  Vertex start() const { return path.front(); }
  Vertex end() const { return path.back(); }
  int length() const { return static_cast<int>(path.size()) - 1; }
  EdgePair tip() const { return {path[0], path[1]}; }
  // The 3-vertex next to the end; equals start() for edge sails.
  Vertex near_end() const { return path[path.size() - 2]; }
};

// For each tip (a 2-vertex and one of its edges), every minimum-length
// internally shortest 3-path to a 4+-vertex. Ordered by tip, then path.
std::vector<Sail> find_sails(const Graph& g);

struct Windmill {
  Vertex axis = 0;
  std::vector<Sail> sails;
  std::vector<Vertex> vertices;  // sorted union of the sails
  bool complete = false;
  std::string degree_branch;  // "max(4,k)", "k+1" or "both"

  int k() const { return static_cast<int>(sails.size()); }
  bool contains(Vertex v) const;
};

inline constexpr std::size_t kDefaultWindmillCap = 200'000;

// Every axis/sail-set combination; throws BudgetExceeded past `cap`.
std::vector<Windmill> find_windmills(const Graph& g, bool complete_only = false,
                                     std::size_t cap = kDefaultWindmillCap);

struct FlagInfo {
  Vertex vertex = 0;
  int degree = 0;
  std::vector<Vertex> h_neighbors;     // sorted
  std::vector<int> neighbor_degrees;   // ascending, parallel to nothing
  bool irregular = false;

  std::string signature() const;  // "(4|2,2,2,2)"
};

struct AuditIssue {
  std::string code;
  std::vector<Vertex> witness;
  std::string detail;
};

struct FlagReport {
  std::vector<FlagInfo> flags;  // ordered by vertex
  std::vector<AuditIssue> issues;
  std::vector<std::string> advisories;

  bool clean() const { return issues.empty(); }
  const FlagInfo* irregular() const;
};

FlagReport flags_of(const Graph& g, const Windmill& w);

enum class NodeKind { sail, flag };

struct FlagNode {
  NodeKind kind = NodeKind::sail;
  bool degenerate = false;
  Vertex vertex = -1;          // the 2-vertex or the flag, -1 after replay
  std::vector<int> sails;      // indices into Windmill::sails (sail nodes)
};

// 2-arcs go sail -> flag, 3-arcs flag -> sail, so the arc type is implied.
struct FlagGraph {
  std::vector<FlagNode> nodes;
  std::vector<std::pair<int, int>> arcs;

  int out_degree(int v) const;
  int in_degree(int v) const;
  std::vector<int> out(int v) const;
  std::vector<int> in(int v) const;
};

// Empty when all degree bounds hold, otherwise one message per violated clause.
std::vector<std::string> flag_graph_violations(const FlagGraph& f);

// Throws PreconditionError when the flag audit is not clean and
// PostconditionError if the built graph breaks a degree bound.
FlagGraph build_flag_graph(const Graph& g, const Windmill& w);

enum class Basic { S, S_minus, S_plus, C2, C4 };
enum class Rule { U, A, B };

const char* basic_name(Basic b);
const char* rule_name(Rule r);

struct ConstructionStep {
  Rule rule = Rule::U;
  Basic basic = Basic::S;  // U only
  // U: the element's nodes (cycles alternate sail, flag along the arcs);
  // A: {new sail}; B: {new flag, new sail}.
  std::vector<int> nodes;
  int target = -1;  // A: flag node; B: sail node
};

struct ConstructionScript {
  std::vector<ConstructionStep> steps;
};

// Throws PreconditionError naming the violated clause.
ConstructionScript decompose_flag_graph(const FlagGraph& f);

// Node i of the result is the i-th node introduced by the script.
FlagGraph replay(const ConstructionScript& s);

bool same_flag_graph(const FlagGraph& a, const FlagGraph& b);

std::string to_dot(const FlagGraph& f);

}  // namespace gel
