#include "gel/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gel/errors.hpp"

namespace gel {

namespace {

std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

int to_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

}  // namespace

Document parse_document(std::string_view text) {
  Document doc;
  std::istringstream is{std::string(text)};
  std::string line;
  int no = 0;
  std::set<EdgePair> seen;
  std::set<Vertex> typed;
  std::vector<int> edge_line;
  while (std::getline(is, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto w = words(line);
    if (w.empty()) continue;
    const std::string& tag = w[0];
    auto need = [&](std::size_t k) {
      if (w.size() != k) throw ParseError(no, "malformed '" + tag + "' line");
    };
    if (tag == "n") {
      need(2);
      if (doc.n) throw ParseError(no, "repeated vertex count");
      doc.n = to_int(w[1], no);
      if (*doc.n < 0) throw ParseError(no, "negative vertex count");
    } else if (tag == "e") {
      need(3);
      int a = to_int(w[1], no), b = to_int(w[2], no);
      if (a < 0 || b < 0) throw ParseError(no, "negative vertex id");
      if (a == b) throw ParseError(no, "loop at vertex " + w[1]);
      EdgePair e(a, b);
      if (!seen.insert(e).second) throw ParseError(no, "duplicate edge " + w[1] + " " + w[2]);
      doc.edges.push_back(e);
      edge_line.push_back(no);
    } else if (tag == "v") {
      need(3);
      int v = to_int(w[1], no), t = to_int(w[2], no);
      if (v < 0) throw ParseError(no, "negative vertex id");
      if (t < 0 || t > 2) throw ParseError(no, "type must be 0, 1 or 2");
      if (!typed.insert(v).second) throw ParseError(no, "vertex " + w[1] + " typed twice");
      doc.types.emplace_back(v, t);
    } else if (tag == "root") {
      need(2);
      if (doc.root) throw ParseError(no, "repeated root");
      doc.root = to_int(w[1], no);
    } else if (tag == "l") {
      need(4);
      int a = to_int(w[1], no), b = to_int(w[2], no);
      if (a == b) throw ParseError(no, "label on a loop");
      Rational r;
      try {
        r = parse_rational(w[3]);
      } catch (const std::exception& ex) {
        throw ParseError(no, ex.what());
      }
      if (!doc.labels.emplace(EdgePair(a, b), r).second)
        throw ParseError(no, "edge " + w[1] + " " + w[2] + " labeled twice");
    } else {
      throw ParseError(no, "unknown line tag '" + tag + "'");
    }
  }
  if (doc.n) {
    for (std::size_t i = 0; i < doc.edges.size(); ++i)
      if (doc.edges[i].v >= *doc.n)
        throw ParseError(edge_line[i], "edge endpoint " + std::to_string(doc.edges[i].v) +
                                           " >= n = " + std::to_string(*doc.n));
  }
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Document read_document(const std::string& path) { return parse_document(read_file(path)); }

Graph graph_of(const Document& doc) {
  int n = doc.n.value_or(0);
  if (!doc.n) {
    for (const auto& e : doc.edges) n = std::max(n, e.v + 1);
    for (const auto& [v, t] : doc.types) n = std::max(n, v + 1);
    if (doc.root) n = std::max(n, *doc.root + 1);
  }
  return Graph(n, doc.edges);
}

Graph parse_graph(std::string_view text) { return graph_of(parse_document(text)); }

TypedGraph typed_of(const Document& doc, const Graph& g, std::optional<int> fallback) {
  std::vector<int> tau(g.order(), -1);
  for (const auto& [v, t] : doc.types) {
    if (v >= g.order()) throw PreconditionError("typed vertex " + std::to_string(v) + " not in graph");
    tau[v] = t;
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (tau[v] < 0) {
      if (!fallback) throw PreconditionError("vertex " + std::to_string(v) + " has no type");
      tau[v] = *fallback;
    }
  return TypedGraph(g, tau);
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (const auto& e : g.edges()) os << "e " << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string format_labeling(const Labeling& phi) {
  std::ostringstream os;
  for (const auto& [e, r] : phi) os << "l " << e.u << ' ' << e.v << ' ' << short_rational(r) << '\n';
  return os.str();
}

std::string format_typed(const TypedGraph& tg) {
  std::ostringstream os;
  os << format_graph(tg.graph);
  for (Vertex v = 0; v < tg.graph.order(); ++v) os << "v " << v << ' ' << tg.tau[v] << '\n';
  return os.str();
}

std::string format_quad(const GluQuad& q) {
  return format_typed(q.typed) + "root " + std::to_string(q.root) + "\n" + format_labeling(q.phi);
}

std::string to_dot(const Graph& g, const DotStyle& style) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v << " [label=\"" << v;
    if (style.types) os << " [" << (*style.types)[v] << "]";
    os << "\"";
    if (style.root && *style.root == v) os << ", shape=doublecircle";
    if (style.types && (*style.types)[v] == 2) os << ", style=filled, fillcolor=lightgray";
    os << "];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v;
    if (style.labels) {
      auto it = style.labels->find(e);
      if (it != style.labels->end()) os << " [label=\"" << short_rational(it->second) << "\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace gel
