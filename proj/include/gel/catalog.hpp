#pragma once

#include <map>
#include <string>
#include <vector>

#include "gel/typed.hpp"

namespace gel {

enum class Family {
  path_to_type2,    // y ... x, w with w type 2
  path_to_type1,    // y followed by type-1 vertices
  plain_cycle,      // cycle through y without type-2 vertices
  fish,             // cycle with a flag, hung from y by one edge
  alphabeta_cycle,  // cycle through y, pendant edge u v
  alpha_cycle,      // cycle through y with a locked flag
  wheel,            // center y, rim split into segments
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // throws PreconditionError

enum class WheelKind { benign, almost_evil, evil, other };

struct CatalogParams {
  Family family = Family::path_to_type2;
  int length = 2;     // path length; cycle length; fish sail length; cycle sail length
  int root_type = 1;  // 0 or 1
  int special = 1;    // plain_cycle: index of the type-0 vertex (0 means none besides y)
  Rational alpha{17, 24};
  Rational beta{1};
  Rational gamma{-1};
  std::vector<int> segments;  // wheel: distances between consecutive anchors
  int center_type = 1;        // wheel
};

struct CatalogPiece {
  GluQuad quad;
  bool decent = true;      // false only for evil wheels
  std::string provenance;  // "text", "formula" or "synthesized"
  std::map<std::string, Vertex> marks;
};

WheelKind wheel_kind(const std::vector<int>& segments, int center_type);

// Builds and verifies the piece. Throws PreconditionError on invalid
// parameters and PostconditionError if a verifier rejects the result.
CatalogPiece catalog(const CatalogParams& params);

// Typed graph of a wheel with center 0; rim vertices follow the segments in
// order: anchor, bogey, spectator, then boobies.
TypedGraph wheel_graph(const std::vector<int>& segments, int center_type);

}  // namespace gel
