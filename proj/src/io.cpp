#include "mesp/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

namespace mesp {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw GraphError("line " + std::to_string(line) + ": " + msg);
}

std::int64_t to_int(std::string_view tok, std::size_t line) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) fail(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

Vertex to_vertex(std::string_view tok, std::size_t line) {
  const std::int64_t v = to_int(tok, line);
  if (v < 0 || v > std::numeric_limits<Vertex>::max()) fail(line, "vertex id out of range: " + std::string(tok));
  return static_cast<Vertex>(v);
}

void parse_comment(const std::vector<std::string_view>& t, std::size_t line, EdgeListDocument& doc) {
  // t[0] is "#" or "#word"; normalise so w[0] is the keyword
  std::vector<std::string_view> w(t.begin(), t.end());
  if (w[0] == "#") {
    w.erase(w.begin());
  } else {
    w[0].remove_prefix(1);
  }
  if (w.empty()) return;
  if (w[0] == "instance" && w.size() == 2) {
    doc.name = std::string(w[1]);
  } else if (w[0] == "label" && w.size() == 3) {
    doc.labels[std::string(w[1])] = to_vertex(w[2], line);
  } else if (w[0] == "path" && w.size() >= 3) {
    auto& p = doc.paths[std::string(w[1])];
    p.clear();
    for (std::size_t i = 2; i < w.size(); ++i) p.push_back(to_vertex(w[i], line));
  } else if (w[0] == "claim" && (w.size() == 3 || w.size() == 4)) {
    doc.claims.push_back({std::string(w[1]), to_int(w[2], line), w.size() == 4 ? std::string(w[3]) : ""});
  }
  // anything else is a free-form comment
}

}  // namespace

EdgeListDocument parse_edge_list_document(std::string_view text) {
  EdgeListDocument doc;
  bool have_header = false;
  std::int64_t n = 0, m = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    const auto t = split_ws(line);
    if (t.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (t[0][0] == '#') {
      parse_comment(t, lineno, doc);
    } else if (!have_header) {
      if (t.size() != 2) fail(lineno, "header must be 'n m'");
      n = to_int(t[0], lineno);
      m = to_int(t[1], lineno);
      if (n < 1) fail(lineno, "vertex count must be at least 1");
      if (m < 0) fail(lineno, "edge count must be non-negative");
      have_header = true;
    } else {
      if (t.size() != 2) fail(lineno, "edge line must be 'u v'");
      if (static_cast<std::int64_t>(edges.size()) == m) fail(lineno, "more edge lines than the header's m = " + std::to_string(m));
      const Vertex u = to_vertex(t[0], lineno), v = to_vertex(t[1], lineno);
      if (u >= n || v >= n) fail(lineno, "vertex id outside [0, " + std::to_string(n) + ")");
      if (u == v) fail(lineno, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(u, v);
    }
    if (end == text.size()) break;
  }
  if (!have_header) fail(lineno, "missing 'n m' header");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    fail(lineno, "header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  doc.graph = build_graph(static_cast<Vertex>(n), edges);
  for (const auto& [name, id] : doc.labels) {
    if (id >= doc.graph.n()) throw GraphError("label " + name + " points outside the graph");
  }
  for (const auto& [name, vs] : doc.paths) {
    try {
      make_path(doc.graph, vs);
    } catch (const GraphError& e) {
      throw GraphError("path " + name + ": " + e.what());
    }
  }
  return doc;
}

Graph parse_edge_list(std::string_view text) { return parse_edge_list_document(text).graph; }

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string serialize_instance(const NamedInstance& inst) {
  std::ostringstream os;
  os << "# instance " << inst.name << '\n';
  for (const auto& [name, id] : inst.labels) os << "# label " << name << ' ' << id << '\n';
  for (const auto& [name, p] : inst.paths) {
    os << "# path " << name;
    for (Vertex v : p) os << ' ' << v;
    os << '\n';
  }
  for (const Claim& c : inst.claims) {
    os << "# claim " << c.quantity << ' ' << c.value;
    if (!c.subject.empty()) os << ' ' << c.subject;
    os << '\n';
  }
  os << serialize_edge_list(inst.graph);
  return os.str();
}

NamedInstance to_instance(const EdgeListDocument& doc) {
  return {doc.name, doc.graph, doc.labels, doc.paths, doc.claims};
}

std::string write_dot(const Graph& g, const std::vector<Highlight>& highlights,
                      const std::map<std::string, Vertex>& labels) {
  std::map<std::pair<Vertex, Vertex>, std::string> colour;
  for (const Highlight& h : highlights) {
    const auto& p = h.path.vertices;
    if (p.empty()) throw GraphError("highlighted path is empty");
    for (Vertex v : p) check_vertex(g, v);
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (!g.adjacent(p[i - 1], p[i])) {
        throw GraphError("highlighted path uses a non-edge " + std::to_string(p[i - 1]) + " - " + std::to_string(p[i]));
      }
      colour.emplace(std::minmax(p[i - 1], p[i]), h.color);
    }
  }
  std::map<Vertex, std::string> name_of;
  for (const auto& [name, id] : labels) name_of.emplace(id, name);  // first name in key order wins

  std::ostringstream os;
  os << "graph G {\n  node [shape=circle, fontsize=10];\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    os << "  " << v;
    auto it = name_of.find(v);
    if (it != name_of.end()) os << " [label=\"" << it->second << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) {
    os << "  " << u << " -- " << v;
    auto it = colour.find({u, v});
    if (it != colour.end()) os << " [color=\"" << it->second << "\", penwidth=3]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write " + path);
  out << text;
}

}  // namespace mesp
