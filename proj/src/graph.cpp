#include "mesp/graph.hpp"

#include <algorithm>
#include <string>

#include "mesp/kernels.hpp"

namespace mesp {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.n()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(g.n()) + ")");
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(m()));
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 1) throw GraphError("graph must have at least one vertex");
  std::vector<std::pair<Vertex, Vertex>> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has an id outside [0, " +
                       std::to_string(n) + ")");
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.targets_.reserve(arcs.size());
  for (auto [u, v] : arcs) {
    ++g.offsets_[u + 1];
    g.targets_.push_back(v);
  }
  for (Vertex i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

  BfsWorkspace ws(g);
  const Vertex zero = 0;
  ws.run({&zero, 1}, false);
  auto d = ws.dist();
  auto it = std::find(d.begin(), d.end(), -1);
  if (it != d.end()) {
    throw GraphError("graph is disconnected: vertex " + std::to_string(it - d.begin()) +
                     " is unreachable from vertex 0");
  }
  return g;
}

Path make_path(const Graph& g, std::vector<Vertex> vertices) {
  if (vertices.empty()) throw GraphError("path must contain at least one vertex");
  for (Vertex v : vertices) check_vertex(g, v);
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (!g.adjacent(vertices[i - 1], vertices[i])) {
      throw GraphError("path step " + std::to_string(vertices[i - 1]) + " -> " + std::to_string(vertices[i]) +
                       " is not an edge");
    }
  }
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GraphError("path repeats a vertex");
  }
  Path p{std::move(vertices), false};
  p.shortest = distance(g, p.front(), p.back()) == p.length();
  return p;
}

BfsWorkspace::BfsWorkspace(const Graph& g)
    : g_(&g), dist_(static_cast<std::size_t>(g.n()), -1), parent_(static_cast<std::size_t>(g.n()), kNoVertex) {
  queue_.reserve(static_cast<std::size_t>(g.n()));
}

void BfsWorkspace::run(std::span<const Vertex> sources, bool with_parent) {
  std::fill(dist_.begin(), dist_.end(), -1);
  if (with_parent) std::fill(parent_.begin(), parent_.end(), kNoVertex);
  queue_.clear();
  for (Vertex s : sources) {
    if (dist_[s] != 0) {
      dist_[s] = 0;
      queue_.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const Vertex u = queue_[head];
    const std::int32_t du = dist_[u] + 1;
    for (Vertex w : g_->neighbors(u)) {
      if (dist_[w] == -1) {
        dist_[w] = du;
        if (with_parent) parent_[w] = u;
        queue_.push_back(w);
      } else if (with_parent && dist_[w] == du && u < parent_[w]) {
        // A later dequeue from the previous layer may have a smaller id.
        parent_[w] = u;
      }
    }
  }
}

std::vector<Vertex> BfsWorkspace::path_to(Vertex target) const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(dist_[target]) + 1);
  for (Vertex v = target; v != kNoVertex; v = parent_[v]) out.push_back(v);
  std::reverse(out.begin(), out.end());
  return out;
}

BfsLayers bfs(const Graph& g, Vertex source) {
  check_vertex(g, source);
  BfsWorkspace ws(g);
  ws.run({&source, 1}, true);
  return {source, {ws.dist().begin(), ws.dist().end()}, {ws.parent().begin(), ws.parent().end()}};
}

std::vector<std::int32_t> multi_source_bfs(const Graph& g, std::span<const Vertex> sources) {
  if (sources.empty()) throw GraphError("multi-source BFS needs at least one source");
  for (Vertex s : sources) check_vertex(g, s);
  BfsWorkspace ws(g);
  ws.run(sources, false);
  return {ws.dist().begin(), ws.dist().end()};
}

std::int32_t distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, v);
  return bfs(g, u).dist[v];
}

Vertex farthest_vertex(const Graph& g, Vertex source) {
  check_vertex(g, source);
  BfsWorkspace ws(g);
  ws.run({&source, 1}, false);
  return static_cast<Vertex>(kernels::argmax_first(ws.dist()).index);
}

Path extract_shortest_path(const Graph& g, const BfsLayers& layers, Vertex target) {
  check_vertex(g, target);
  std::vector<Vertex> out;
  for (Vertex v = target; v != kNoVertex; v = layers.parent[v]) out.push_back(v);
  std::reverse(out.begin(), out.end());
  return Path{std::move(out), true};
}

EccReport set_eccentricity(const Graph& g, std::span<const Vertex> vertices) {
  auto d = multi_source_bfs(g, vertices);
  auto am = kernels::argmax_first(d);
  return {am.value, static_cast<Vertex>(am.index)};
}

EccReport path_eccentricity(const Graph& g, const Path& p) { return set_eccentricity(g, p.vertices); }

bool is_shortest_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  return distance(g, p.front(), p.back()) == p.length();
}

std::vector<std::int32_t> all_pairs_distances(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.n());
  std::vector<std::int32_t> out(n * n);
  BfsWorkspace ws(g);
  for (Vertex s = 0; s < g.n(); ++s) {
    ws.run({&s, 1}, false);
    std::copy(ws.dist().begin(), ws.dist().end(), out.begin() + static_cast<std::ptrdiff_t>(s * n));
  }
  return out;
}

}  // namespace mesp
