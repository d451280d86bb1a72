#include "gel/pattern_search.hpp"

#include <algorithm>
#include <span>
#include <string>

#include "gel/errors.hpp"
#include "gel/minima.hpp"

namespace gel {

int add_constant(PatternProblem& p, const Rational& value) {
  auto it = std::lower_bound(p.constants.begin(), p.constants.end(), value);
  int idx = static_cast<int>(it - p.constants.begin());
  if (it != p.constants.end() && *it == value) return idx;
  p.constants.insert(it, value);
  auto shift = [&](int& x) {
    if (x >= idx) ++x;
  };
  shift(p.zero);
  shift(p.half);
  shift(p.two_thirds);
  shift(p.three_quarters);
  for (int& x : p.pinned) shift(x);
  return idx;
}

namespace {

struct Engine {
  const PatternProblem& p;
  std::uint64_t budget;
  PatternStats& stats;
  const PatternAccept& accept;

  int C = 0;                        // constants are levels 0..C-1
  std::vector<int> seq;             // level ids, ascending
  std::vector<int> rank;            // level id -> position in seq
  std::vector<int> level_of;        // edge -> level id or -1
  std::vector<int> order;
  std::vector<std::vector<int>> due;  // position in order -> constraints completed there
  std::vector<int> free_levels;     // stack of recycled level ids
  int next_level = 0;
  std::vector<int> keys;
  std::optional<std::vector<Rational>> solution;

  Engine(const PatternProblem& p, std::uint64_t budget, PatternStats& stats,
         const PatternAccept& accept)
      : p(p), budget(budget), stats(stats), accept(accept) {
    C = static_cast<int>(p.constants.size());
    for (int i = 0; i < C; ++i) seq.push_back(i);
    next_level = C;
    rank.assign(C + p.edge_count + 1, -1);
    level_of.assign(p.edge_count, -1);
    order = p.order;
    if (order.empty())
      for (int e = 0; e < p.edge_count; ++e) order.push_back(e);
    std::vector<int> pos(p.edge_count, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    due.assign(order.size(), {});
    for (int c = 0; c < static_cast<int>(p.constraints.size()); ++c) {
      int last = -1;
      for (int e : p.constraints[c].edges) last = std::max(last, pos[e]);
      if (last >= 0) due[last].push_back(c);
    }
    keys.assign(p.edge_count, 0);
  }

  void reindex() {
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) rank[seq[i]] = i;
  }

  Thresholds<int> thresholds() const {
    Thresholds<int> t;
    if (p.zero >= 0) t.zero = rank[p.zero];
    if (p.half >= 0) t.half = rank[p.half];
    if (p.two_thirds >= 0) t.two_thirds = rank[p.two_thirds];
    if (p.three_quarters >= 0) t.three_quarters = rank[p.three_quarters];
    return t;
  }

  bool holds(const PatternConstraint& c, const Thresholds<int>& t) {
    std::vector<int> x;
    x.reserve(c.edges.size());
    for (int e : c.edges) x.push_back(rank[level_of[e]]);
    std::span<const int> s(x);
    switch (c.kind) {
      case ConstraintKind::cycle_good: return cycle_minimum_runs<int>(s).size() >= 2;
      case ConstraintKind::decent_a: return cond::decent_a<int>(s, t);
      case ConstraintKind::decent_b: return cond::decent_b<int>(s, t);
      case ConstraintKind::glu_a: return cond::glu_a<int>(s, t);
      case ConstraintKind::glu_b: return cond::glu_b<int>(s, t);
      case ConstraintKind::glu_d2: return cond::d2i<int>(s, t) || cond::d2ii<int>(s, t);
      case ConstraintKind::glu_d2_lockable:
        return cond::locks<int>(s, t) || cond::d2i<int>(s, t) || cond::d2ii<int>(s, t);
      case ConstraintKind::glu_d3: return cond::d3<int>(s, t);
      case ConstraintKind::glu_d2_or_d3:
        return cond::d2i<int>(s, t) || cond::d2ii<int>(s, t) || cond::d3<int>(s, t);
    }
    return false;
  }

  std::vector<Rational> instantiate() const {
    std::vector<Rational> value(next_level + 1);
    const int L = static_cast<int>(seq.size());
    int i = 0;
    std::optional<Rational> lo;
    while (i < L) {
      if (seq[i] < C) {
        lo = p.constants[seq[i]];
        value[seq[i]] = *lo;
        ++i;
        continue;
      }
      int j = i;
      while (j < L && seq[j] >= C) ++j;
      int k = j - i;
      std::optional<Rational> hi;
      if (j < L) hi = p.constants[seq[j]];
      for (int t = 0; t < k; ++t) {
        Rational v;
        if (lo && hi) v = *lo + (*hi - *lo) * Rational(t + 1, k + 1);
        else if (hi) v = ceil_of(*hi) - (k - t);
        else if (lo) v = floor_of(*lo) + 1 + t;
        else v = Rational(t + 1);
        value[seq[i + t]] = v;
      }
      i = j;
    }
    std::vector<Rational> out(p.edge_count);
    for (int e = 0; e < p.edge_count; ++e) out[e] = value[level_of[e]];
    return out;
  }

  int new_level() {
    if (!free_levels.empty()) {
      int id = free_levels.back();
      free_levels.pop_back();
      return id;
    }
    return next_level++;
  }

  // Returns true when a solution has been accepted.
  bool rec(int depth) {
    if (++stats.nodes > budget)
      throw BudgetExceeded("pattern search exceeded " + std::to_string(budget) + " nodes");
    if (depth == static_cast<int>(order.size())) {
      ++stats.leaves;
      auto labels = instantiate();
      if (accept(labels)) {
        solution = std::move(labels);
        return true;
      }
      ++stats.rejected_leaves;
      return false;
    }
    const int e = order[depth];
    const int pin = p.pinned.empty() ? -1 : p.pinned[e];
    auto check = [&]() {
      reindex();
      auto t = thresholds();
      for (int c : due[depth])
        if (!holds(p.constraints[c], t)) {
          ++stats.prunes;
          return false;
        }
      return true;
    };
    if (pin >= 0) {
      level_of[e] = pin;
      bool done = check() && rec(depth + 1);
      level_of[e] = -1;
      return done;
    }
    const int L = static_cast<int>(seq.size());
    // Top-down: a fresh level above position g, then joining the level at g-1.
    for (int g = L; g >= 0; --g) {
      {
        int id = new_level();
        seq.insert(seq.begin() + g, id);
        level_of[e] = id;
        bool done = check() && rec(depth + 1);
        level_of[e] = -1;
        seq.erase(seq.begin() + g);
        free_levels.push_back(id);
        if (done) return true;
      }
      if (g > 0) {
        level_of[e] = seq[g - 1];
        bool done = check() && rec(depth + 1);
        level_of[e] = -1;
        if (done) return true;
      }
    }
    reindex();
    return false;
  }
};

}  // namespace

std::optional<std::vector<Rational>> solve_pattern(const PatternProblem& problem,
                                                   std::uint64_t budget, PatternStats& stats,
                                                   const PatternAccept& accept) {
  for (std::size_t i = 1; i < problem.constants.size(); ++i)
    if (!(problem.constants[i - 1] < problem.constants[i]))
      throw PreconditionError("pattern constants must be strictly increasing");
  Engine eng(problem, budget, stats, accept);
  eng.rec(0);
  return eng.solution;
}

}  // namespace gel
