#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gel/graph.hpp"
#include "gel/labeling.hpp"
#include "gel/typed.hpp"

namespace gel {

// One text format for graphs, types, roots and labels:
//   n <count>        (optional)
//   e <u> <v>
//   v <id> <type>
//   root <id>
//   l <u> <v> <p>/<q> | <int>
//   # comment
struct Document {
  std::optional<int> n;
  std::vector<EdgePair> edges;
  std::vector<std::pair<Vertex, int>> types;
  std::optional<Vertex> root;
  Labeling labels;
};

Document parse_document(std::string_view text);
Document read_document(const std::string& path);

Graph parse_graph(std::string_view text);
Graph graph_of(const Document& doc);
// Types default to `fallback` for vertices the document does not mention.
TypedGraph typed_of(const Document& doc, const Graph& g, std::optional<int> fallback = std::nullopt);

std::string format_graph(const Graph& g);
std::string format_labeling(const Labeling& phi);
std::string format_typed(const TypedGraph& tg);
std::string format_quad(const GluQuad& q);

struct DotStyle {
  const Labeling* labels = nullptr;
  const std::vector<int>* types = nullptr;
  std::optional<Vertex> root;
};
std::string to_dot(const Graph& g, const DotStyle& style = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace gel
