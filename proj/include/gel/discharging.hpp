#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gel/graph.hpp"
#include "gel/rational.hpp"
#include "gel/windmill.hpp"

namespace gel {

struct Transfer {
  Vertex from = 0;  // the 2-vertex
  EdgePair tip;
  Vertex to = 0;  // the 4+-vertex ending the sail
  Rational amount;
  std::vector<Vertex> sail;
};

struct ChargeLedger {
  std::vector<Rational> initial;
  std::vector<Transfer> transfers;
  std::vector<Rational> final_charge;
  // (2-vertex, neighbour) tips heading no sail; their unit stays put.
  std::vector<std::pair<Vertex, Vertex>> silent_tips;
  bool discharged = false;

  Rational total_initial() const;
  Rational total_final() const;
  Rational sent(Vertex v) const;
  Rational received(Vertex v) const;
};

// 6 - 2 deg(v) everywhere, final = initial.
ChargeLedger initial_charges(const Graph& g);

// Each 2-vertex sends 1/k along each of the k sails with a given tip.
ChargeLedger discharge(const Graph& g);

struct PositiveVertex {
  Vertex vertex = 0;
  int degree = 0;
  Rational charge;
  int sails_ending = 0;
  int complete_windmills = 0;  // complete windmills with this axis
  bool undischarged = false;  // a 2-vertex that kept charge
};

struct PositiveReport {
  std::vector<PositiveVertex> positive;
  // Broken ledger identities or forced properties (empty on every graph).
  std::vector<std::string> violations;
};

PositiveReport audit_positive(const ChargeLedger& ledger, const Graph& g);

// The largest charge any vertex receives through a single incident edge.
Rational max_edge_inflow(const ChargeLedger& ledger, const Graph& g, Vertex v);

std::string ledger_table(const ChargeLedger& ledger, const Graph& g);

}  // namespace gel
