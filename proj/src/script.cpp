#include "gel/script.hpp"

#include <sstream>

#include "gel/errors.hpp"

namespace gel {

namespace {

constexpr const char* kOpNames[] = {"piece", "1sum", "2sum", "edge", "lock"};

GluQuad apply_step(const GluQuad* cur, const ScriptStep& s, DSplit split) {
  if (s.op == ScriptOp::piece) {
    if (!s.operand) throw PreconditionError("piece step without operand");
    return catalog(*s.operand).quad;
  }
  if (!cur) throw PreconditionError("script must start with a piece");
  switch (s.op) {
    case ScriptOp::sum1:
      if (!s.operand) throw PreconditionError("1sum step without operand");
      return glue_1sum(*cur, catalog(*s.operand).quad, split).quad;
    case ScriptOp::sum2:
      if (!s.operand) throw PreconditionError("2sum step without operand");
      return glue_2sum(*cur, s.w1, catalog(*s.operand).quad, s.w2, split).quad;
    case ScriptOp::edge:
      return glue_edge_cycle(*cur, s.path, s.sail_length, split).quad;
    case ScriptOp::lock:
      return glue_lock_cycle(*cur, s.path, s.sail_length, split).quad;
    default:
      throw PreconditionError("unknown script op");
  }
}

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

CatalogParams random_piece(std::mt19937_64& rng) {
  CatalogParams p;
  switch (pick(rng, 0, 5)) {
    case 0:
      p.family = Family::path_to_type2;
      p.length = pick(rng, 2, 5);
      break;
    case 1:
      p.family = Family::path_to_type1;
      p.length = pick(rng, 1, 4);
      break;
    case 2:
      p.family = Family::plain_cycle;
      p.length = pick(rng, 5, 7);
      p.special = pick(rng, 0, p.length - 1);
      break;
    case 3:
      p.family = Family::fish;
      p.length = pick(rng, 4, 6);
      break;
    case 4:
      p.family = Family::alphabeta_cycle;
      p.length = pick(rng, 2, 4);
      break;
    default:
      p.family = Family::alpha_cycle;
      p.length = pick(rng, 2, 4);
      break;
  }
  p.root_type = pick(rng, 0, 1);
  return p;
}

std::vector<Vertex> connectable(const GluQuad& q) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < q.graph().order(); ++v)
    if (q.tau(v) == 2 && !is_locked(q, v)) out.push_back(v);
  return out;
}

std::vector<std::array<Vertex, 3>> edge_paths(const GluQuad& q) {
  std::vector<std::array<Vertex, 3>> out;
  const Graph& g = q.graph();
  const Vertex y = q.root;
  for (Vertex u : g.neighbors(y)) {
    if (q.tau(u) != 1) continue;
    Rational a = q.phi.at(EdgePair(y, u));
    if (!(Rational(2, 3) < a && a <= Rational(3, 4))) continue;
    for (Vertex v : g.neighbors(u))
      if (v != y && q.tau(v) <= 1 && q.phi.at(EdgePair(u, v)) > Rational(3, 4))
        out.push_back({y, u, v});
  }
  return out;
}

std::vector<std::array<Vertex, 3>> lock_paths(const GluQuad& q) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex w = 0; w < q.graph().order(); ++w) {
    if (q.tau(w) != 2) continue;
    auto p = locking_path(q, w);
    if (!p) continue;
    Rational a = q.phi.at(EdgePair((*p)[0], (*p)[1]));
    Rational c = q.phi.at(EdgePair((*p)[1], (*p)[2]));
    if (Rational(2, 3) < a && a < Rational(3, 4) && c < 0) out.push_back({(*p)[0], (*p)[1], w});
  }
  return out;
}

}  // namespace

const char* script_op_name(ScriptOp op) { return kOpNames[static_cast<int>(op)]; }

ScriptOp script_op_from_name(const std::string& name) {
  for (int i = 0; i < 5; ++i)
    if (name == kOpNames[i]) return static_cast<ScriptOp>(i);
  throw PreconditionError("unknown script op '" + name + "'");
}

ScriptTrace replay_script(const CompositionScript& s) {
  ScriptTrace t;
  if (s.steps.empty()) throw PreconditionError("empty script");
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const GluQuad* cur = t.quads.empty() ? nullptr : &t.quads.back();
    if (i > 0 && s.steps[i].op == ScriptOp::piece)
      throw PreconditionError("piece may only start a script");
    GluQuad q = apply_step(cur, s.steps[i], s.split);
    if (auto v = verify_gluable(q, s.split))
      throw PostconditionError("step " + std::to_string(i) + " not gluable: " + describe(*v));
    if (auto v = verify_decent(q.typed, q.phi))
      throw PostconditionError("step " + std::to_string(i) + " not decent: " + describe(*v));
    t.quads.push_back(std::move(q));
  }
  return t;
}

CompositionScript random_script(std::mt19937_64& rng, const ScriptGenOptions& opt) {
  CompositionScript s;
  ScriptStep first;
  first.operand = random_piece(rng);
  s.steps.push_back(first);
  GluQuad cur = catalog(*first.operand).quad;
  const int target = pick(rng, opt.min_steps, opt.max_steps);

  for (int attempts = 0; static_cast<int>(s.steps.size()) < target && attempts < 50; ++attempts) {
    if (cur.graph().order() >= opt.max_order) break;
    ScriptStep step;
    const int kind = pick(rng, 0, 3);
    if (kind == 0) {
      step.op = ScriptOp::sum1;
      step.operand = random_piece(rng);
    } else if (kind == 1) {
      auto mine = connectable(cur);
      if (mine.empty()) continue;
      step.op = ScriptOp::sum2;
      step.w1 = mine[pick(rng, 0, static_cast<int>(mine.size()) - 1)];
      const int d1 = bfs_distances(cur.graph(), cur.root)[step.w1];
      std::vector<Vertex> fits;
      for (int tries = 0; tries < 8 && fits.empty(); ++tries) {
        step.operand = random_piece(rng);
        GluQuad other = catalog(*step.operand).quad;
        const auto dist = bfs_distances(other.graph(), other.root);
        for (Vertex w : connectable(other))
          if (d1 + dist[w] >= 5) fits.push_back(w);
      }
      if (fits.empty()) continue;
      step.w2 = fits[pick(rng, 0, static_cast<int>(fits.size()) - 1)];
    } else {
      auto paths = kind == 2 ? edge_paths(cur) : lock_paths(cur);
      if (paths.empty()) continue;
      step.op = kind == 2 ? ScriptOp::edge : ScriptOp::lock;
      step.path = paths[pick(rng, 0, static_cast<int>(paths.size()) - 1)];
      step.sail_length = pick(rng, 2, 4);
    }
    cur = apply_step(&cur, step, s.split);
    s.steps.push_back(step);
  }
  return s;
}

std::string describe(const CompositionScript& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const auto& st = s.steps[i];
    if (i) os << ' ';
    os << script_op_name(st.op);
    if (st.operand) os << '(' << family_name(st.operand->family) << ' ' << st.operand->length << ')';
    if (st.op == ScriptOp::sum2) os << '[' << st.w1 << ',' << st.w2 << ']';
    if (st.op == ScriptOp::edge || st.op == ScriptOp::lock)
      os << '[' << st.path[0] << ',' << st.path[1] << ',' << st.path[2] << " l=" << st.sail_length
         << ']';
  }
  return os.str();
}

}  // namespace gel
