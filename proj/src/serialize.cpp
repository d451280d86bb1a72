#include "gel/serialize.hpp"

#include "gel/errors.hpp"

namespace gel {

namespace {

Json vertices(const std::vector<Vertex>& vs) { return Json(vs); }

const char* split_name(DSplit s) {
  switch (s) {
    case DSplit::by_length: return "by-length";
    case DSplit::by_distance: return "by-distance";
    case DSplit::either: return "either";
  }
  return "either";
}

DSplit split_from_name(const std::string& s) {
  if (s == "by-length") return DSplit::by_length;
  if (s == "by-distance") return DSplit::by_distance;
  if (s == "either") return DSplit::either;
  throw ParseError(0, "unknown split '" + s + "'");
}

Json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"prunes", s.prunes},
          {"memo_hits", s.memo_hits},
          {"orderings_covered", s.orderings_covered},
          {"orderings_total", s.orderings_total},
          {"leaves", s.leaves},
          {"rejected_leaves", s.rejected_leaves}};
}

SearchStats stats_from_json(const Json& j) {
  SearchStats s;
  s.nodes = j.value("nodes", std::uint64_t{0});
  s.prunes = j.value("prunes", std::uint64_t{0});
  s.memo_hits = j.value("memo_hits", std::uint64_t{0});
  s.orderings_covered = j.value("orderings_covered", std::uint64_t{0});
  s.orderings_total = j.value("orderings_total", std::uint64_t{0});
  s.leaves = j.value("leaves", std::uint64_t{0});
  s.rejected_leaves = j.value("rejected_leaves", std::uint64_t{0});
  return s;
}

}  // namespace

Json document(const std::string& type, Json body) {
  body["schema"] = kSchemaVersion;
  body["type"] = type;
  return body;
}

void expect_document(const Json& j, const std::string& type) {
  if (!j.is_object() || j.value("schema", "") != kSchemaVersion)
    throw ParseError(0, std::string("expected schema ") + kSchemaVersion);
  if (j.value("type", "") != type) throw ParseError(0, "expected a " + type + " document");
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  try {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
  } catch (const Json::exception& ex) {
    throw ParseError(0, std::string("bad graph: ") + ex.what());
  }
}

Json labeling_json(const Labeling& phi) {
  Json out = Json::array();
  for (const auto& [e, x] : phi) out.push_back({e.u, e.v, format_rational(x)});
  return out;
}

Labeling labeling_from_json(const Json& j) {
  Labeling phi;
  try {
    for (const auto& t : j)
      phi[EdgePair(t.at(0).get<int>(), t.at(1).get<int>())] =
          parse_rational(t.at(2).get<std::string>());
  } catch (const Json::exception& ex) {
    throw ParseError(0, std::string("bad labeling: ") + ex.what());
  }
  return phi;
}

CertKind cert_kind_from_name(const std::string& name) {
  for (int k = 0; k <= static_cast<int>(CertKind::NoGluableLabeling); ++k)
    if (name == cert_kind_name(static_cast<CertKind>(k))) return static_cast<CertKind>(k);
  throw ParseError(0, "unknown certificate kind '" + name + "'");
}

Json certificate_json(const Certificate& c) {
  Json j{{"kind", cert_kind_name(c.kind)}, {"graph", graph_json(c.graph)},
         {"stats", stats_json(c.stats)}};
  if (c.labeling) j["labeling"] = labeling_json(*c.labeling);
  if (c.types) j["types"] = *c.types;
  if (c.root) j["root"] = *c.root;
  if (c.deleted_edge) j["deleted_edge"] = {c.deleted_edge->u, c.deleted_edge->v};
  if (!c.note.empty()) j["note"] = c.note;
  if (!c.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : c.parts) parts.push_back(certificate_json(p));
    j["parts"] = parts;
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  try {
    c.kind = cert_kind_from_name(j.at("kind").get<std::string>());
    c.graph = graph_from_json(j.at("graph"));
    if (j.contains("stats")) c.stats = stats_from_json(j.at("stats"));
    if (j.contains("labeling")) c.labeling = labeling_from_json(j.at("labeling"));
    if (j.contains("types")) c.types = j.at("types").get<std::vector<int>>();
    if (j.contains("root")) c.root = j.at("root").get<int>();
    if (j.contains("deleted_edge"))
      c.deleted_edge = EdgePair(j.at("deleted_edge").at(0).get<int>(),
                                j.at("deleted_edge").at(1).get<int>());
    c.note = j.value("note", "");
    if (j.contains("parts"))
      for (const auto& p : j.at("parts")) c.parts.push_back(certificate_from_json(p));
  } catch (const Json::exception& ex) {
    throw ParseError(0, std::string("bad certificate: ") + ex.what());
  }
  return c;
}

Json violation_json(const Violation& v) {
  Json values = Json::array();
  for (const auto& x : v.values) values.push_back(format_rational(x));
  Json j{{"condition", v.condition}, {"path", vertices(v.path)}, {"values", values}};
  if (!v.other_path.empty()) j["other_path"] = vertices(v.other_path);
  return j;
}

Json quad_json(const GluQuad& q) {
  return {{"graph", graph_json(q.graph())},
          {"types", q.typed.tau},
          {"root", q.root},
          {"labeling", labeling_json(q.phi)}};
}

Json params_json(const CatalogParams& p) {
  Json j{{"family", family_name(p.family)}, {"root_type", p.root_type}};
  switch (p.family) {
    case Family::wheel:
      j["segments"] = p.segments;
      j["center_type"] = p.center_type;
      break;
    case Family::plain_cycle:
      j["length"] = p.length;
      j["special"] = p.special;
      break;
    case Family::alphabeta_cycle:
      j["length"] = p.length;
      j["alpha"] = format_rational(p.alpha);
      j["beta"] = format_rational(p.beta);
      break;
    case Family::alpha_cycle:
      j["length"] = p.length;
      j["alpha"] = format_rational(p.alpha);
      j["gamma"] = format_rational(p.gamma);
      break;
    default:
      j["length"] = p.length;
  }
  return j;
}

CatalogParams params_from_json(const Json& j) {
  CatalogParams p;
  try {
    p.family = family_from_name(j.at("family").get<std::string>());
    p.root_type = j.value("root_type", 1);
    p.length = j.value("length", p.length);
    p.special = j.value("special", p.special);
    if (j.contains("alpha")) p.alpha = parse_rational(j.at("alpha").get<std::string>());
    if (j.contains("beta")) p.beta = parse_rational(j.at("beta").get<std::string>());
    if (j.contains("gamma")) p.gamma = parse_rational(j.at("gamma").get<std::string>());
    if (j.contains("segments")) p.segments = j.at("segments").get<std::vector<int>>();
    p.center_type = j.value("center_type", p.center_type);
  } catch (const Json::exception& ex) {
    throw ParseError(0, std::string("bad piece parameters: ") + ex.what());
  }
  return p;
}

Json script_json(const CompositionScript& s) {
  Json steps = Json::array();
  for (const auto& st : s.steps) {
    Json j{{"op", script_op_name(st.op)}};
    if (st.operand) j["operand"] = params_json(*st.operand);
    if (st.op == ScriptOp::sum2) j["attach"] = {st.w1, st.w2};
    if (st.op == ScriptOp::edge || st.op == ScriptOp::lock) {
      j["attach"] = {st.path[0], st.path[1], st.path[2]};
      j["sail_length"] = st.sail_length;
    }
    steps.push_back(j);
  }
  return {{"split", split_name(s.split)}, {"steps", steps}};
}

CompositionScript script_from_json(const Json& j) {
  CompositionScript s;
  try {
    s.split = split_from_name(j.value("split", "either"));
    for (const auto& js : j.at("steps")) {
      ScriptStep st;
      st.op = script_op_from_name(js.at("op").get<std::string>());
      if (js.contains("operand")) st.operand = params_from_json(js.at("operand"));
      if (st.op == ScriptOp::sum2) {
        st.w1 = js.at("attach").at(0).get<int>();
        st.w2 = js.at("attach").at(1).get<int>();
      }
      if (st.op == ScriptOp::edge || st.op == ScriptOp::lock) {
        for (int i = 0; i < 3; ++i) st.path[i] = js.at("attach").at(i).get<int>();
        st.sail_length = js.at("sail_length").get<int>();
      }
      s.steps.push_back(st);
    }
  } catch (const Json::exception& ex) {
    throw ParseError(0, std::string("bad script: ") + ex.what());
  } catch (const PreconditionError& ex) {
    throw ParseError(0, ex.what());
  }
  return s;
}

Json ledger_json(const ChargeLedger& l, const Graph& g) {
  Json verts = Json::array();
  for (Vertex v = 0; v < g.order(); ++v)
    verts.push_back({{"vertex", v},
                     {"degree", g.degree(v)},
                     {"initial", format_rational(l.initial[v])},
                     {"sent", format_rational(l.sent(v))},
                     {"received", format_rational(l.received(v))},
                     {"final", format_rational(l.final_charge[v])}});
  Json transfers = Json::array();
  for (const auto& t : l.transfers)
    transfers.push_back({{"from", t.from},
                         {"tip", {t.tip.u, t.tip.v}},
                         {"to", t.to},
                         {"amount", format_rational(t.amount)},
                         {"sail", vertices(t.sail)}});
  Json silent = Json::array();
  for (const auto& [u, v] : l.silent_tips) silent.push_back({u, v});
  return {{"vertices", verts},
          {"transfers", transfers},
          {"silent_tips", silent},
          {"total_initial", format_rational(l.total_initial())},
          {"total_final", format_rational(l.total_final())},
          {"expected_total", 6 * g.order() - 4 * g.size()}};
}

Json positive_json(const PositiveReport& r) {
  Json pos = Json::array();
  for (const auto& p : r.positive)
    pos.push_back({{"vertex", p.vertex},
                   {"degree", p.degree},
                   {"charge", format_rational(p.charge)},
                   {"sails_ending", p.sails_ending},
                   {"complete_windmills", p.complete_windmills},
                   {"undischarged", p.undischarged}});
  return {{"positive", pos}, {"violations", r.violations}};
}

Json audit_json(const CandidateAudit& a) {
  Json checks = Json::array();
  for (const auto& c : a.checks)
    checks.push_back({{"name", c.name},
                      {"applicable", c.applicable},
                      {"passed", c.passed},
                      {"witness", vertices(c.witness)},
                      {"detail", c.detail}});
  return {{"passed", a.passed()}, {"checks", checks}, {"advisories", a.advisories}};
}

Json windmill_json(const Windmill& w) {
  Json sails = Json::array();
  for (const auto& s : w.sails) sails.push_back(vertices(s.path));
  return {{"axis", w.axis},
          {"k", w.k()},
          {"complete", w.complete},
          {"degree_branch", w.degree_branch},
          {"sails", sails},
          {"vertices", vertices(w.vertices)}};
}

Json flag_report_json(const FlagReport& r) {
  Json flags = Json::array();
  for (const auto& f : r.flags)
    flags.push_back({{"vertex", f.vertex},
                     {"signature", f.signature()},
                     {"windmill_neighbours", vertices(f.h_neighbors)},
                     {"irregular", f.irregular}});
  Json issues = Json::array();
  for (const auto& i : r.issues)
    issues.push_back({{"code", i.code}, {"witness", vertices(i.witness)}, {"detail", i.detail}});
  return {{"flags", flags}, {"issues", issues}, {"advisories", r.advisories}, {"clean", r.clean()}};
}

Json flag_graph_json(const FlagGraph& f) {
  Json nodes = Json::array();
  for (const auto& n : f.nodes)
    nodes.push_back({{"kind", n.kind == NodeKind::sail ? "sail" : "flag"},
                     {"degenerate", n.degenerate},
                     {"vertex", n.vertex},
                     {"sails", n.sails}});
  Json arcs = Json::array();
  for (const auto& [a, b] : f.arcs)
    arcs.push_back({{"from", a}, {"to", b}, {"type", f.nodes[a].kind == NodeKind::sail ? 2 : 3}});
  return {{"nodes", nodes}, {"arcs", arcs}};
}

Json construction_json(const ConstructionScript& s) {
  Json steps = Json::array();
  for (const auto& st : s.steps) {
    Json j{{"rule", rule_name(st.rule)}, {"nodes", st.nodes}};
    if (st.rule == Rule::U) j["basic"] = basic_name(st.basic);
    if (st.target >= 0) j["target"] = st.target;
    steps.push_back(j);
  }
  return steps;
}

Json closure_json(const ClosureResult& r) {
  Json j{{"obstruction", r.obstruction}};
  if (r.obstruction) {
    j["detail"] = r.obstruction_detail;
    j["flag_graph"] = flag_graph_json(r.flag_graph);
    j["construction"] = construction_json(r.script);
    return j;
  }
  j["flag_graph"] = flag_graph_json(r.flag_graph);
  j["construction"] = construction_json(r.script);
  j["closure"] = {{"graph", graph_json(r.closure.graph)},
                  {"types", r.closure.tau},
                  {"vertices", vertices(r.closure_vertices)},
                  {"labeling", labeling_json(r.phi)}};
  j["regular_vertices"] = vertices(r.regular_vertices);
  j["extension"] = r.extension;
  if (r.irregular_flag) j["irregular_flag"] = *r.irregular_flag;
  if (!r.stock_extension_violation.empty())
    j["stock_extension_violation"] = r.stock_extension_violation;
  j["spot_check_failures"] = r.spot_check_failures;
  j["advisories"] = r.advisories;
  return j;
}

}  // namespace gel
