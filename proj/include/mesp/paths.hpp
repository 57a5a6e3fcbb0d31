#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mesp/graph.hpp"
#include "mesp/kernels.hpp"

namespace mesp {

// Raised when an enumeration would produce more than `cap` items. `partial` is
// how many were produced before giving up.
class CapExceeded : public GraphError {
 public:
  CapExceeded(const std::string& what, std::int64_t partial) : GraphError(what), partial(partial) {}
  std::int64_t partial;
};

// Dense hop-distance table for the exhaustive oracles (n^2 ints).
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g) : n_(g.n()), d_(all_pairs_distances(g)) {}
  Vertex n() const { return n_; }
  std::span<const std::int32_t> row(Vertex v) const {
    return {d_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  std::int32_t at(Vertex u, Vertex v) const { return row(u)[v]; }

 private:
  Vertex n_;
  std::vector<std::int32_t> d_;
};

std::string pair_name(Vertex u, Vertex v);

// Depth-first walk of the shortest-path DAG from u to v. Neighbours are tried
// in ascending order, so paths arrive in lexicographic order. When `rows` is
// given, the eccentricity of each path is maintained incrementally (one
// element-wise min per step) and passed to `visit`; otherwise -1 is passed.
// `dist_to_v` holds hop distances to v. Throws CapExceeded on path cap + 1.
template <class Visit>
std::int64_t walk_shortest_paths(const Graph& g, std::span<const std::int32_t> dist_to_v, const DistanceMatrix* rows,
                                 Vertex u, Vertex v, std::int64_t cap, Visit&& visit) {
  const std::size_t n = static_cast<std::size_t>(g.n());
  const std::int32_t len = dist_to_v[u];
  std::vector<Vertex> path;
  path.reserve(static_cast<std::size_t>(len) + 1);
  path.push_back(u);
  std::vector<std::size_t> cursor(static_cast<std::size_t>(len) + 1, 0);
  std::vector<std::int32_t> acc;
  if (rows != nullptr) {
    acc.resize((static_cast<std::size_t>(len) + 1) * n);
    auto r = rows->row(u);
    std::copy(r.begin(), r.end(), acc.begin());
  }
  auto layer = [&](std::size_t depth) { return std::span<std::int32_t>(acc.data() + depth * n, n); };

  std::int64_t count = 0;
  std::size_t depth = 0;
  while (true) {
    if (static_cast<std::int32_t>(depth) == len) {
      if (count == cap) {
        throw CapExceeded("more than " + std::to_string(cap) + " shortest paths between " + pair_name(u, v) +
                              "; raise the path cap",
                          count);
      }
      ++count;
      const std::int32_t ecc = rows != nullptr ? kernels::max_value(layer(depth)) : -1;
      visit(std::span<const Vertex>(path), ecc);
      if (depth == 0) break;
      path.pop_back();
      --depth;
      continue;
    }
    const Vertex a = path[depth];
    auto nb = g.neighbors(a);
    std::size_t& c = cursor[depth];
    bool descended = false;
    while (c < nb.size()) {
      const Vertex w = nb[c++];
      if (dist_to_v[w] == dist_to_v[a] - 1) {
        path.push_back(w);
        ++depth;
        cursor[depth] = 0;
        if (rows != nullptr) {
          auto prev = layer(depth - 1);
          auto cur = layer(depth);
          std::copy(prev.begin(), prev.end(), cur.begin());
          kernels::min_into(cur, rows->row(w));
        }
        descended = true;
        break;
      }
    }
    if (!descended) {
      if (depth == 0) break;
      path.pop_back();
      --depth;
    }
  }
  return count;
}

// Every shortest u-v path, lexicographic order. Throws CapExceeded beyond cap.
std::vector<Path> enumerate_shortest_paths(const Graph& g, Vertex u, Vertex v, std::int64_t cap);

}  // namespace mesp
