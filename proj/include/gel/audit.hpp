#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gel/graph.hpp"

namespace gel {

// One structural property every critical graph has. A failed check means the
// graph is not critical.
struct CandidateCheck {
  std::string name;
  bool applicable = true;  // false for the C3 and K2,3 exceptions or when skipped
  bool passed = true;
  std::vector<Vertex> witness;
  std::string detail;
};

struct CandidateAudit {
  std::vector<CandidateCheck> checks;
  std::vector<std::string> advisories;

  bool passed() const;
  const CandidateCheck* find(const std::string& name) const;
};

struct CandidateAuditOptions {
  // Cycle count and path search step cap; checks that hit it are marked not
  // applicable.
  std::size_t cap = 200'000;
  bool matching_cut = true;
};

// Checks, in order:
//   min-degree           minimum degree at least two
//   adjacent-2-vertices  no two adjacent 2-vertices unless g is C3
//   matching-cut         no matching cut
//   cycle-neighbour      every cycle of 3- vertices has two vertices with a
//                        common neighbour outside it (not for C3, K2,3)
//   path-neighbour       same for paths between 2-vertices with 3- interior,
//                        when the path leaves some vertex uncovered
//   shortest-2-2-path    no internally shortest 3-path between 2-vertices
//                        (girth at least five only)
//   sails-disjoint       two sails share a tip or are internally disjoint
//                        (girth at least five only)
CandidateAudit audit_critical_candidate(const Graph& g, const CandidateAuditOptions& opt = {});

}  // namespace gel
