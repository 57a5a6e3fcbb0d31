#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mesp/generators.hpp"
#include "mesp/graph.hpp"

namespace mesp {

// Edge-list text: "n m" header, then m lines "u v". '#' starts a comment
// line; blank lines are ignored. Recognised comments carry instance metadata:
//   # instance <name>
//   # label <name> <id>
//   # path <name> <id> <id> ...
//   # claim <quantity> <value> [subject]
struct EdgeListDocument {
  Graph graph;
  std::string name;
  std::map<std::string, Vertex> labels;
  std::map<std::string, std::vector<Vertex>> paths;
  std::vector<Claim> claims;
};

// Errors carry the 1-based line number.
EdgeListDocument parse_edge_list_document(std::string_view text);
Graph parse_edge_list(std::string_view text);

// Canonical form: edges sorted, u < v on every line.
std::string serialize_edge_list(const Graph& g);
std::string serialize_instance(const NamedInstance& inst);
NamedInstance to_instance(const EdgeListDocument& doc);

struct Highlight {
  Path path;
  std::string color;  // any Graphviz colour name
};

// Deterministic DOT. Highlighted edges are drawn thick in their colour; an
// edge on several highlights takes the first. Throws if a path is not a walk
// in g.
std::string write_dot(const Graph& g, const std::vector<Highlight>& highlights,
                      const std::map<std::string, Vertex>& labels = {});

std::string read_text_file(const std::string& path);  // "-" reads stdin
void write_text_file(const std::string& path, const std::string& text);  // "-" writes stdout

}  // namespace mesp
