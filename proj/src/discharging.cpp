#include "gel/discharging.hpp"

#include <iomanip>
#include <map>
#include <sstream>

namespace gel {

Rational ChargeLedger::total_initial() const {
  Rational t = 0;
  for (const auto& c : initial) t += c;
  return t;
}

Rational ChargeLedger::total_final() const {
  Rational t = 0;
  for (const auto& c : final_charge) t += c;
  return t;
}

Rational ChargeLedger::sent(Vertex v) const {
  Rational t = 0;
  for (const auto& x : transfers)
    if (x.from == v) t += x.amount;
  return t;
}

Rational ChargeLedger::received(Vertex v) const {
  Rational t = 0;
  for (const auto& x : transfers)
    if (x.to == v) t += x.amount;
  return t;
}

ChargeLedger initial_charges(const Graph& g) {
  ChargeLedger l;
  for (Vertex v = 0; v < g.order(); ++v) l.initial.push_back(Rational(6 - 2 * g.degree(v)));
  l.final_charge = l.initial;
  return l;
}

ChargeLedger discharge(const Graph& g) {
  ChargeLedger l = initial_charges(g);
  std::map<EdgePair, std::vector<const Sail*>> by_tip;
  const auto sails = find_sails(g);
  for (const auto& s : sails) by_tip[s.tip()].push_back(&s);

  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 2) continue;
    for (Vertex v : g.neighbors(u)) {
      const EdgePair tip(u, v);
      auto it = by_tip.find(tip);
      if (it == by_tip.end()) {
        l.silent_tips.emplace_back(u, v);
        continue;
      }
      const Rational share(1, static_cast<std::int64_t>(it->second.size()));
      for (const Sail* s : it->second) {
        l.transfers.push_back({u, tip, s->end(), share, s->path});
        l.final_charge[u] -= share;
        l.final_charge[s->end()] += share;
      }
    }
  }
  l.discharged = true;
  return l;
}

Rational max_edge_inflow(const ChargeLedger& ledger, const Graph& g, Vertex v) {
  std::map<Vertex, Rational> via;
  for (const auto& x : ledger.transfers)
    if (x.to == v) via[x.sail[x.sail.size() - 2]] += x.amount;
  Rational best = 0;
  for (Vertex u : g.neighbors(v))
    if (via.count(u) && via[u] > best) best = via[u];
  return best;
}

PositiveReport audit_positive(const ChargeLedger& ledger, const Graph& g) {
  PositiveReport r;
  const int n = g.order();
  if (!ledger.discharged) r.violations.push_back("ledger has not been discharged");
  if (static_cast<int>(ledger.initial.size()) != n ||
      static_cast<int>(ledger.final_charge.size()) != n) {
    r.violations.push_back("ledger size does not match the graph");
    return r;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (ledger.initial[v] != Rational(6 - 2 * g.degree(v)))
      r.violations.push_back("initial charge of " + std::to_string(v) + " is not 6-2deg");
    if (ledger.final_charge[v] != ledger.initial[v] - ledger.sent(v) + ledger.received(v))
      r.violations.push_back("final charge of " + std::to_string(v) +
                             " is not initial - sent + received");
  }
  if (ledger.total_final() != ledger.total_initial())
    r.violations.push_back("charge not conserved");

  std::vector<int> ending(n, 0);
  for (const auto& x : ledger.transfers) ++ending[x.to];
  std::vector<int> windmills(n, 0);
  bool have_windmills = false;
  for (Vertex v = 0; v < n; ++v)
    if (ledger.final_charge[v] > 0 && g.degree(v) >= 4) have_windmills = true;
  if (have_windmills) {
    try {
      for (const auto& w : find_windmills(g, true)) ++windmills[w.axis];
    } catch (const std::exception&) {
      r.violations.push_back("windmill enumeration exceeded its cap");
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (ledger.final_charge[v] <= 0) continue;
    PositiveVertex p;
    p.vertex = v;
    p.degree = g.degree(v);
    p.charge = ledger.final_charge[v];
    p.sails_ending = ending[v];
    p.complete_windmills = windmills[v];
    p.undischarged = g.degree(v) == 2;
    if (p.degree == 3)
      r.violations.push_back("3-vertex " + std::to_string(v) + " has positive charge");
    if (p.degree >= 4 && p.sails_ending < 3)
      r.violations.push_back("positive " + std::to_string(p.degree) + "-vertex " +
                             std::to_string(v) + " has only " + std::to_string(p.sails_ending) +
                             " sails ending there");
    r.positive.push_back(p);
  }
  return r;
}

std::string ledger_table(const ChargeLedger& ledger, const Graph& g) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "vertex" << std::setw(6) << "deg" << std::setw(10)
     << "initial" << std::setw(10) << "sent" << std::setw(10) << "received" << "final\n";
  for (Vertex v = 0; v < g.order(); ++v)
    os << std::setw(8) << v << std::setw(6) << g.degree(v) << std::setw(10)
       << short_rational(ledger.initial[v]) << std::setw(10) << short_rational(ledger.sent(v))
       << std::setw(10) << short_rational(ledger.received(v))
       << short_rational(ledger.final_charge[v]) << '\n';
  os << "total " << short_rational(ledger.total_initial()) << " -> "
     << short_rational(ledger.total_final()) << '\n';
  for (const auto& t : ledger.silent_tips)
    os << "silent tip " << t.first << '-' << t.second << '\n';
  return os.str();
}

}  // namespace gel
