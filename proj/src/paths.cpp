#include "mesp/paths.hpp"

namespace mesp {

std::string pair_name(Vertex u, Vertex v) { return "(" + std::to_string(u) + ", " + std::to_string(v) + ")"; }

std::vector<Path> enumerate_shortest_paths(const Graph& g, Vertex u, Vertex v, std::int64_t cap) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (cap < 1) throw GraphError("path cap must be at least 1");
  const auto to_v = bfs(g, v).dist;
  std::vector<Path> out;
  walk_shortest_paths(g, to_v, nullptr, u, v, cap, [&out](std::span<const Vertex> p, std::int32_t) {
    out.push_back(Path{{p.begin(), p.end()}, true});
  });
  return out;
}

}  // namespace mesp
