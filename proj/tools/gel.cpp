// gel: command-line front end for the labeling toolkit.
// Exit codes: 0 property holds / object found, 1 fails / not found, 2 error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "gel/audit.hpp"
#include "gel/closure.hpp"
#include "gel/discharging.hpp"
#include "gel/errors.hpp"
#include "gel/gluing.hpp"
#include "gel/hunt.hpp"
#include "gel/io.hpp"
#include "gel/script.hpp"
#include "gel/search.hpp"
#include "gel/serialize.hpp"
#include "gel/windmill.hpp"

using namespace gel;

namespace {

struct Common {
  std::string graph, labels, types, cert, script, rest, checkpoint, split = "either";
  int root = -1;
  bool json = false, dot = false, deterministic = false, all = false, first = false;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  int threads = 1;
  int count = 1;
  int n = 9, m = 13, girth = 4;
  std::size_t max_candidates = 0;
};

struct Outcome {
  int code = 0;
  Json json;
  std::string text;
};

Graph load_graph(const Common& c) {
  if (c.graph.empty()) throw PreconditionError("--graph is required");
  return graph_of(read_document(c.graph));
}

Labeling load_labels(const std::string& path, const Graph& g) {
  Labeling phi = read_document(path).labels;
  for (const auto& [e, x] : phi)
    if (!g.has_edge(e))
      throw PreconditionError("label on non-edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  return phi;
}

TypedGraph load_typed(const Common& c, const Graph& g) {
  Document doc = read_document(c.types.empty() ? c.graph : c.types);
  return typed_of(doc, g);
}

Vertex load_root(const Common& c) {
  if (c.root >= 0) return c.root;
  Document doc = read_document(c.types.empty() ? c.graph : c.types);
  if (!doc.root) throw PreconditionError("--root is required");
  return *doc.root;
}

DSplit parse_split(const std::string& s) {
  if (s == "by-length") return DSplit::by_length;
  if (s == "by-distance") return DSplit::by_distance;
  if (s == "either") return DSplit::either;
  throw PreconditionError("unknown --split '" + s + "'");
}

std::string path_text(const std::vector<Vertex>& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "-" : "") << p[i];
  return os.str();
}

Json witness_json(const GoodnessWitness& w) {
  if (auto* p = std::get_if<PathConflict>(&w.detail))
    return {{"conflict", "two nondecreasing paths"},
            {"from", p->from},
            {"to", p->to},
            {"first", p->first},
            {"second", p->second}};
  if (auto* c = std::get_if<CycleDeficit>(&w.detail))
    return {{"conflict", "cycle with fewer than two local minima"},
            {"cycle", c->cycle},
            {"minima", c->minima}};
  return nullptr;
}

std::string witness_text(const GoodnessWitness& w) {
  if (auto* p = std::get_if<PathConflict>(&w.detail))
    return "two nondecreasing paths from " + std::to_string(p->from) + " to " +
           std::to_string(p->to) + ": " + path_text(p->first) + " and " + path_text(p->second);
  if (auto* c = std::get_if<CycleDeficit>(&w.detail))
    return "cycle " + path_text(c->cycle) + " has " + std::to_string(c->minima) + " local minima";
  return "good";
}

std::string cert_text(const Certificate& c) {
  std::ostringstream os;
  os << cert_kind_name(c.kind);
  if (!c.note.empty()) os << " (" << c.note << ")";
  os << "\nnodes " << c.stats.nodes << " prunes " << c.stats.prunes;
  if (c.stats.orderings_total)
    os << " orderings " << c.stats.orderings_covered << "/" << c.stats.orderings_total;
  os << '\n';
  if (c.labeling) os << format_labeling(*c.labeling);
  for (const auto& p : c.parts) {
    os << "part";
    if (p.deleted_edge) os << " without " << p.deleted_edge->u << "-" << p.deleted_edge->v;
    os << ": " << cert_kind_name(p.kind) << '\n';
  }
  return os.str();
}

Outcome cert_outcome(const Certificate& c, int code) {
  return {code, document("certificate", certificate_json(c)), cert_text(c)};
}

GoodSearchOptions search_options(const Common& c) {
  GoodSearchOptions o;
  o.budget = c.budget;
  o.threads = c.deterministic ? 1 : c.threads;
  return o;
}

Outcome run_verify(const Common& c, bool cycles_only) {
  if (!c.cert.empty()) {
    Json j = Json::parse(read_file(c.cert));
    expect_document(j, "certificate");
    Certificate cert = certificate_from_json(j);
    auto why = recheck(cert);
    Json out = document("recheck", {{"kind", cert_kind_name(cert.kind)}, {"valid", !why}});
    if (why) out["reason"] = *why;
    return {why ? 1 : 0, out,
            std::string(cert_kind_name(cert.kind)) + (why ? ": INVALID, " + *why : ": valid") + "\n"};
  }
  Graph g = load_graph(c);
  if (c.labels.empty()) throw PreconditionError("--labels or --cert is required");
  Labeling phi = load_labels(c.labels, g);
  if (phi.size() != static_cast<std::size_t>(g.size()))
    throw PreconditionError("labeling does not cover every edge");
  GoodnessWitness w = cycles_only ? is_good_cycles(g, phi) : is_good_paths(g, phi);
  Json out = document("verdict", {{"good", w.ok()}});
  if (!w.ok()) out["witness"] = witness_json(w);
  return {w.ok() ? 0 : 1, out, (w.ok() ? "good\n" : "bad: " + witness_text(w) + "\n")};
}

Outcome run_search(const Common& c) {
  Certificate cert = find_good_labeling(load_graph(c), search_options(c));
  return cert_outcome(cert, cert.kind == CertKind::GoodLabeling ? 0 : 1);
}

Outcome run_critical(const Common& c) {
  Certificate cert = is_critical(load_graph(c), search_options(c));
  return cert_outcome(cert, cert.kind == CertKind::Criticality ? 0 : 1);
}

PatternOptions pattern_options(const Common& c) {
  PatternOptions o;
  o.budget = c.budget;
  o.split = parse_split(c.split);
  return o;
}

Outcome run_decent(const Common& c) {
  Graph g = load_graph(c);
  TypedGraph tg = load_typed(c, g);
  if (!c.labels.empty()) {
    Labeling phi = load_labels(c.labels, g);
    auto v = verify_decent(tg, phi);
    Json out = document("verdict", {{"decent", !v}});
    if (v) out["violation"] = violation_json(*v);
    return {v ? 1 : 0, out, v ? "not decent: " + describe(*v) + "\n" : "decent\n"};
  }
  Certificate cert = find_decent_labeling(tg, pattern_options(c));
  return cert_outcome(cert, cert.kind == CertKind::DecentLabeling ? 0 : 1);
}

Outcome run_gluable(const Common& c) {
  Graph g = load_graph(c);
  TypedGraph tg = load_typed(c, g);
  Vertex root = load_root(c);
  if (!c.labels.empty()) {
    GluQuad q{tg, load_labels(c.labels, g), root};
    auto v = verify_gluable(q, parse_split(c.split));
    Json out = document("verdict", {{"gluable", !v}});
    if (v) out["violation"] = violation_json(*v);
    return {v ? 1 : 0, out, v ? "not gluable: " + describe(*v) + "\n" : "gluable\n"};
  }
  Certificate cert = find_gluable_labeling(tg, root, pattern_options(c));
  return cert_outcome(cert, cert.kind == CertKind::GluableLabeling ? 0 : 1);
}

Outcome run_glue(const Common& c) {
  std::vector<CompositionScript> scripts;
  if (!c.script.empty()) {
    Json j = Json::parse(read_file(c.script));
    expect_document(j, "script");
    scripts.push_back(script_from_json(j));
  } else {
    std::mt19937_64 rng(c.seed);
    for (int i = 0; i < c.count; ++i) scripts.push_back(random_script(rng));
  }
  Json list = Json::array();
  std::ostringstream text;
  int failures = 0;
  for (const auto& s : scripts) {
    Json entry{{"script", script_json(s)}};
    text << describe(s) << ": ";
    try {
      auto trace = replay_script(s);
      entry["ok"] = true;
      entry["quad"] = quad_json(trace.quads.back());
      text << "gluable and decent at every step (" << trace.quads.back().graph().order()
           << " vertices)\n";
    } catch (const PostconditionError& e) {
      ++failures;
      entry["ok"] = false;
      entry["error"] = e.what();
      text << "FAILED " << e.what() << '\n';
    }
    list.push_back(entry);
  }
  if (scripts.size() == 1 && c.script.empty() && c.json)
    return {failures ? 1 : 0, document("script", script_json(scripts[0])), text.str()};
  return {failures ? 1 : 0, document("glue-run", {{"runs", list}, {"failures", failures}}), text.str()};
}

Outcome run_swell(const Common& c) {
  Graph g = load_graph(c);
  if (c.types.empty()) throw PreconditionError("--types naming the swell subgraph is required");
  Document td = read_document(c.types);
  SwellEmbedding e;
  std::vector<int> tau;
  for (const auto& [v, t] : td.types) {
    e.to_g.push_back(v);
    tau.push_back(t);
  }
  Subgraph sub = induced_subgraph(g, e.to_g);
  // induced_subgraph orders kept vertices by id.
  std::vector<int> sorted_tau(sub.new_to_old.size());
  for (std::size_t i = 0; i < e.to_g.size(); ++i) sorted_tau[sub.old_to_new[e.to_g[i]]] = tau[i];
  e.to_g = sub.new_to_old;
  e.h = TypedGraph(sub.graph, sorted_tau);
  if (auto v = verify_swell(g, e)) {
    Json out = document("verdict", {{"swell", false}, {"condition", v->condition}, {"witness", v->witness}});
    return {1, out, "not swell: condition " + v->condition + " at " + path_text(v->witness) + "\n"};
  }
  if (c.labels.empty() || c.rest.empty())
    return {0, document("verdict", {{"swell", true}}), "swell\n"};
  Labeling host_h = load_labels(c.labels, g);
  Labeling phi_h;
  for (const auto& [edge, x] : host_h) {
    Vertex a = sub.old_to_new[edge.u], b = sub.old_to_new[edge.v];
    if (a < 0 || b < 0) throw PreconditionError("--labels must only label edges of h");
    phi_h[EdgePair(a, b)] = x;
  }
  Labeling rest = load_labels(c.rest, g);
  Labeling out = swell_combine(g, e, phi_h, rest);
  bool good = is_good_paths(g, out).ok();
  return {good ? 0 : 1, document("labeling", {{"graph", graph_json(g)}, {"labeling", labeling_json(out)}, {"good", good}}),
          format_labeling(out)};
}

std::vector<Windmill> pick_windmills(const Common& c, const Graph& g) {
  auto ws = find_windmills(g, !c.all);
  if (c.root >= 0)
    std::erase_if(ws, [&](const Windmill& w) { return w.axis != c.root; });
  return ws;
}

Outcome run_windmill(const Common& c) {
  Graph g = load_graph(c);
  auto ws = pick_windmills(c, g);
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& w : ws) {
    FlagReport fr = flags_of(g, w);
    list.push_back({{"windmill", windmill_json(w)}, {"flags", flag_report_json(fr)}});
    text << "axis " << w.axis << " k=" << w.k() << (w.complete ? " complete" : "") << " ("
         << w.degree_branch << ")\n";
    for (const auto& s : w.sails) text << "  sail " << path_text(s.path) << '\n';
    for (const auto& f : fr.flags)
      text << "  flag " << f.vertex << ' ' << f.signature() << (f.irregular ? " irregular" : "") << '\n';
    for (const auto& i : fr.issues) text << "  issue " << i.code << ": " << i.detail << '\n';
    for (const auto& a : fr.advisories) text << "  advisory: " << a << '\n';
  }
  if (ws.empty()) text << "no windmill\n";
  return {ws.empty() ? 1 : 0, document("windmills", {{"windmills", list}}), text.str()};
}

Outcome run_flaggraph(const Common& c) {
  Graph g = load_graph(c);
  auto ws = pick_windmills(c, g);
  if (ws.empty()) return {1, document("flag-graph", {{"windmill", nullptr}}), "no windmill\n"};
  const Windmill& w = ws.front();
  FlagReport fr = flags_of(g, w);
  if (!fr.clean()) {
    Json out = document("flag-graph", {{"windmill", windmill_json(w)}, {"flags", flag_report_json(fr)}});
    std::string t;
    for (const auto& i : fr.issues) t += "issue " + i.code + ": " + i.detail + "\n";
    return {1, out, t};
  }
  FlagGraph f = build_flag_graph(g, w);
  ConstructionScript s = decompose_flag_graph(f);
  if (c.dot) return {0, nullptr, to_dot(f)};
  std::ostringstream text;
  text << "windmill at " << w.axis << ", " << f.nodes.size() << " nodes, " << f.arcs.size()
       << " arcs\n";
  for (const auto& st : s.steps) {
    text << rule_name(st.rule);
    if (st.rule == Rule::U) text << '(' << basic_name(st.basic) << ')';
    text << " nodes";
    for (int n : st.nodes) text << ' ' << n;
    if (st.target >= 0) text << " target " << st.target;
    text << '\n';
  }
  return {0,
          document("flag-graph", {{"windmill", windmill_json(w)},
                                  {"flag_graph", flag_graph_json(f)},
                                  {"construction", construction_json(s)},
                                  {"replay_matches", same_flag_graph(replay(s), f)}}),
          text.str()};
}

Outcome run_closure(const Common& c) {
  Graph g = load_graph(c);
  auto ws = pick_windmills(c, g);
  if (ws.empty()) return {1, document("closure", {{"windmill", nullptr}}), "no windmill\n"};
  ClosureResult r = build_closure_labeling(g, ws.front(), parse_split(c.split), c.budget);
  Json out = document("closure", {{"windmill", windmill_json(ws.front())}, {"result", closure_json(r)}});
  if (r.obstruction) return {1, out, "EvilObstruction: " + r.obstruction_detail + "\n"};
  if (c.dot) {
    DotStyle st;
    st.labels = &r.phi;
    st.types = &r.closure.tau;
    return {0, nullptr, to_dot(r.closure.graph, st)};
  }
  std::ostringstream text;
  text << "decent closure labeling, " << r.closure.graph.order() << " vertices, extension "
       << r.extension << '\n';
  if (!r.stock_extension_violation.empty())
    text << "-10/+1 extension rejected: " << r.stock_extension_violation << '\n';
  for (const auto& a : r.advisories) text << "advisory: " << a << '\n';
  text << format_labeling(r.phi);
  return {0, out, text.str()};
}

Outcome run_discharge(const Common& c) {
  Graph g = load_graph(c);
  ChargeLedger l = discharge(g);
  PositiveReport r = audit_positive(l, g);
  Json out = document("ledger", {{"ledger", ledger_json(l, g)}, {"positive", positive_json(r)}});
  std::string text = ledger_table(l, g);
  for (const auto& p : r.positive)
    text += "positive " + std::to_string(p.vertex) + " (" + short_rational(p.charge) + ")" +
            (p.undischarged ? " undischarged" : "") + "\n";
  for (const auto& v : r.violations) text += "violation: " + v + "\n";
  return {r.violations.empty() ? 0 : 1, out, text};
}

Outcome run_audit(const Common& c) {
  Graph g = load_graph(c);
  CandidateAudit a = audit_critical_candidate(g);
  std::ostringstream text;
  for (const auto& ch : a.checks)
    text << (ch.applicable ? (ch.passed ? "pass " : "FAIL ") : "n/a  ") << ch.name
         << (ch.detail.empty() ? "" : ": " + ch.detail) << '\n';
  for (const auto& ad : a.advisories) text << "advisory: " << ad << '\n';
  return {a.passed() ? 0 : 1, document("audit", audit_json(a)), text.str()};
}

Outcome run_hunt(const Common& c) {
  HuntOptions o;
  o.n = c.n;
  o.m = c.m;
  o.girth = c.girth;
  o.threads = c.deterministic ? 1 : c.threads;
  o.budget = c.budget;
  o.checkpoint = c.checkpoint;
  o.stop_after_first = c.first;
  o.max_candidates = c.max_candidates;
  std::vector<Certificate> found;
  auto stats = counterexample_hunt(o, [&](const Certificate& cert) { found.push_back(cert); });
  Json certs = Json::array();
  std::ostringstream text;
  text << "candidates " << stats.candidates << ", certified " << stats.certified << ", good "
       << stats.good << ", bad but not critical " << stats.bad_not_critical << ", over budget "
       << stats.budget_exceeded << ", critical " << stats.found << '\n';
  for (const auto& cert : found) {
    certs.push_back(certificate_json(cert));
    text << "critical graph:\n" << format_graph(cert.graph);
  }
  Json out = document("hunt", {{"candidates", stats.candidates},
                               {"certified", stats.certified},
                               {"per_level", stats.per_level},
                               {"found", certs}});
  return {found.empty() ? 1 : 0, out, text.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gel: good edge-labelings, typed graphs, windmills and discharging"};
  app.require_subcommand(1);
  Common c;

  auto common = [&](CLI::App* s) {
    s->add_option("--graph", c.graph, "graph file");
    s->add_option("--labels", c.labels, "labeling file");
    s->add_option("--types", c.types, "vertex types file");
    s->add_option("--root", c.root, "root vertex (axis for windmill commands)");
    s->add_flag("--json", c.json, "JSON output");
    s->add_flag("--dot", c.dot, "DOT output where supported");
    s->add_option("--budget", c.budget, "search node budget");
    s->add_flag("--deterministic", c.deterministic, "single-threaded canonical order");
    s->add_option("--seed", c.seed, "random seed");
    return s;
  };

  struct Sub {
    const char* name;
    const char* help;
    std::function<Outcome()> run;
  };
  std::vector<Sub> subs = {
      {"verify", "check a labeling (or --cert certificate)", [&] { return run_verify(c, false); }},
      {"verify-cycles", "check a labeling with the cycle criterion", [&] { return run_verify(c, true); }},
      {"search", "find a good labeling or prove none exists", [&] { return run_search(c); }},
      {"critical", "decide criticality with a certificate bundle", [&] { return run_critical(c); }},
      {"decent", "verify (--labels) or synthesize a decent labeling", [&] { return run_decent(c); }},
      {"gluable", "verify (--labels) or synthesize a gluable labeling", [&] { return run_gluable(c); }},
      {"glue", "replay a composition script (--script) or random ones", [&] { return run_glue(c); }},
      {"swell", "check a swell subgraph and combine labelings", [&] { return run_swell(c); }},
      {"windmill", "list windmills and their flags", [&] { return run_windmill(c); }},
      {"flaggraph", "flag graph and its construction", [&] { return run_flaggraph(c); }},
      {"closure-label", "decent closure labeling of a windmill", [&] { return run_closure(c); }},
      {"discharge", "charge ledger and positive-vertex audit", [&] { return run_discharge(c); }},
      {"audit", "critical-candidate audit", [&] { return run_audit(c); }},
      {"hunt", "search for critical graphs", [&] { return run_hunt(c); }},
  };
  std::map<CLI::App*, std::size_t> index;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    CLI::App* s = common(app.add_subcommand(subs[i].name, subs[i].help));
    index[s] = i;
    const std::string name = subs[i].name;
    if (name == "verify" || name == "verify-cycles") s->add_option("--cert", c.cert, "certificate JSON");
    if (name == "search" || name == "hunt") s->add_option("--threads", c.threads, "worker threads");
    if (name == "gluable" || name == "decent" || name == "closure-label")
      s->add_option("--split", c.split, "reading of (d): by-length, by-distance, either");
    if (name == "glue") {
      s->add_option("--script", c.script, "composition script JSON");
      s->add_option("--count", c.count, "number of random scripts");
    }
    if (name == "swell") s->add_option("--rest", c.rest, "labeling of the rest of the graph");
    if (name == "windmill" || name == "flaggraph" || name == "closure-label")
      s->add_flag("--all", c.all, "include windmills that are not complete");
    if (name == "hunt") {
      s->add_option("--n", c.n, "vertices");
      s->add_option("--m", c.m, "edges");
      s->add_option("--girth", c.girth, "exact girth");
      s->add_option("--checkpoint", c.checkpoint, "checkpoint file");
      s->add_option("--max-candidates", c.max_candidates, "stop after this many candidates");
      s->add_flag("--first", c.first, "stop at the first critical graph");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::size_t which = 0;
  for (auto* s : app.get_subcommands()) which = index.at(s);
  try {
    Outcome o = subs[which].run();
    if (c.json && !o.json.is_null())
      std::cout << o.json.dump(2) << '\n';
    else
      std::cout << o.text;
    return o.code;
  } catch (const std::exception& e) {
    std::string kind = "error";
    if (dynamic_cast<const BudgetExceeded*>(&e)) kind = "budget-exceeded";
    else if (dynamic_cast<const ParseError*>(&e)) kind = "parse-error";
    else if (dynamic_cast<const PreconditionError*>(&e)) kind = "precondition";
    else if (dynamic_cast<const Json::exception*>(&e)) kind = "parse-error";
    if (c.json)
      std::cout << document("error", {{"kind", kind}, {"message", e.what()}}).dump(2) << '\n';
    else
      std::cerr << kind << ": " << e.what() << '\n';
    return 2;
  }
}
