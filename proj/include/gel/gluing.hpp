#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gel/typed.hpp"

namespace gel {

// Pairs (vertex of the first graph, vertex of the second graph) to identify.
using GlueMap = std::vector<std::pair<Vertex, Vertex>>;

// Vertices of the first input keep their ids; the remaining vertices of the
// second input are appended in increasing order.
struct Glued {
  TypedGraph typed;
  Labeling phi;
  std::vector<Vertex> map1, map2;  // input vertex -> output vertex
};

// Gluing along the induced subgraph spanned by the identified vertices, with
// tau = min on identified vertices. Shared edges must carry equal labels.
Glued glue_along(const TypedGraph& t1, const Labeling& p1, const TypedGraph& t2,
                 const Labeling& p2, const GlueMap& ident);

struct GlueResult {
  GluQuad quad;
  std::vector<Vertex> map1, map2;
};

// All four operations check their preconditions (PreconditionError) and
// re-verify gluability of the result (PostconditionError).
GlueResult glue_1sum(const GluQuad& q1, const GluQuad& q2, DSplit split = DSplit::either);
GlueResult glue_2sum(const GluQuad& q1, Vertex w1, const GluQuad& q2, Vertex w2,
                     DSplit split = DSplit::either);
// Attaches an alphabeta cycle whose sail has the given length along (y, u, v).
GlueResult glue_edge_cycle(const GluQuad& q, std::array<Vertex, 3> path, int sail_length,
                           DSplit split = DSplit::either);
// Attaches an alpha cycle whose sail has the given length along the locking
// path (y, u, w).
GlueResult glue_lock_cycle(const GluQuad& q, std::array<Vertex, 3> path, int sail_length,
                           DSplit split = DSplit::either);

// h as a typed graph whose vertex i is vertex to_g[i] of the host.
struct SwellEmbedding {
  TypedGraph h;
  std::vector<Vertex> to_g;
};

struct SwellViolation {
  std::string condition;  // "embedding", "proper", "type", "induced", "a", "b", "c"
  std::vector<Vertex> witness;  // host vertex ids
};

std::optional<SwellViolation> verify_swell(const Graph& g, const SwellEmbedding& e);

// g minus the type-0 and type-1 vertices of h.
Subgraph swell_rest(const Graph& g, const SwellEmbedding& e);

// phi_h is on h's vertex ids, phi_rest on host ids covering the edges of
// swell_rest. Throws PreconditionError on a swell violation, a labeling that is
// not decent on h, or not good on the rest; PostconditionError if the
// combined labeling is not good.
Labeling swell_combine(const Graph& g, const SwellEmbedding& e, const Labeling& phi_h,
                       const Labeling& phi_rest);

}  // namespace gel
