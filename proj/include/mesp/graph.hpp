#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mesp {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

// Thrown for invalid inputs and exceeded enumeration caps / size limits.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable simple connected undirected graph in CSR form. Neighbour lists are
// sorted ascending, which is what makes every traversal below deterministic.
class Graph {
 public:
  Graph() = default;

  Vertex n() const { return static_cast<Vertex>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::int64_t m() const { return static_cast<std::int64_t>(targets_.size() / 2); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::int32_t degree(Vertex v) const { return static_cast<std::int32_t>(offsets_[v + 1] - offsets_[v]); }
  bool adjacent(Vertex u, Vertex v) const;

  // Canonical edge list: u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph& o) const = default;

 private:
  friend Graph build_graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);
  std::vector<std::int64_t> offsets_;
  std::vector<Vertex> targets_;
};

// Validates and builds. Duplicate pairs collapse; self-loops, out-of-range ids
// and disconnected inputs are rejected with GraphError.
Graph build_graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);
inline Graph build_graph(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges));
}

struct Path {
  std::vector<Vertex> vertices;
  bool shortest = false;  // set only after validation against hop distance

  std::int32_t length() const { return static_cast<std::int32_t>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool operator==(const Path& o) const = default;
};

// Checks adjacency of consecutive vertices and distinctness, then sets the
// shortest flag from the actual distance. Throws on an invalid walk.
Path make_path(const Graph& g, std::vector<Vertex> vertices);

struct BfsLayers {
  Vertex source = 0;
  std::vector<std::int32_t> dist;
  std::vector<Vertex> parent;  // kNoVertex for the source
};

struct EccReport {
  std::int32_t value = 0;
  Vertex witness = 0;
  bool operator==(const EccReport& o) const = default;
};

// parent[v] is the smallest-id neighbour of v one layer closer to the source.
BfsLayers bfs(const Graph& g, Vertex source);

std::vector<std::int32_t> multi_source_bfs(const Graph& g, std::span<const Vertex> sources);
inline std::vector<std::int32_t> multi_source_bfs(const Graph& g, const std::vector<Vertex>& sources) {
  return multi_source_bfs(g, std::span<const Vertex>(sources));
}

std::int32_t distance(const Graph& g, Vertex u, Vertex v);
Vertex farthest_vertex(const Graph& g, Vertex source);
Path extract_shortest_path(const Graph& g, const BfsLayers& layers, Vertex target);
EccReport path_eccentricity(const Graph& g, const Path& p);
EccReport set_eccentricity(const Graph& g, std::span<const Vertex> vertices);
bool is_shortest_path(const Graph& g, const Path& p);

// Row-major n*n hop distances, one BFS per source. Desk-scale helper for the
// exhaustive oracles.
std::vector<std::int32_t> all_pairs_distances(const Graph& g);

// Reusable scratch buffers so hot loops (the recursive approximation, the
// large-graph sweeps) do not allocate per traversal.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(const Graph& g);

  // Fills dist (and parent when requested) from the given sources.
  void run(std::span<const Vertex> sources, bool with_parent);

  std::span<const std::int32_t> dist() const { return dist_; }
  std::span<const Vertex> parent() const { return parent_; }
  std::vector<Vertex> path_to(Vertex target) const;

 private:
  const Graph* g_;
  std::vector<std::int32_t> dist_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> queue_;
};

void check_vertex(const Graph& g, Vertex v);

}  // namespace mesp
