#pragma once

// Deliberately naive reference implementations used only by the tests. None of
// them share code with the library beyond reading the edge list.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "mesp/graph.hpp"

namespace oracle {

using mesp::Graph;
using mesp::Vertex;
using Matrix = std::vector<std::vector<int>>;

inline Matrix floyd_warshall(const Graph& g) {
  const int n = g.n();
  const int inf = std::numeric_limits<int>::max() / 4;
  Matrix d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> a(g.n(), std::vector<bool>(g.n(), false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// Every simple u-v path of length d(u, v), by plain backtracking over all
// simple paths that are not yet too long.
inline std::vector<std::vector<Vertex>> shortest_paths(const Graph& g, const Matrix& d, Vertex u, Vertex v) {
  const auto adj = adjacency(g);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur{u};
  std::vector<bool> used(g.n(), false);
  used[u] = true;
  std::function<void()> rec = [&] {
    const Vertex a = cur.back();
    if (static_cast<int>(cur.size()) - 1 == d[u][v]) {
      if (a == v) out.push_back(cur);
      return;
    }
    for (Vertex w = 0; w < g.n(); ++w) {
      if (adj[a][w] && !used[w]) {
        used[w] = true;
        cur.push_back(w);
        rec();
        cur.pop_back();
        used[w] = false;
      }
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

inline int set_ecc(const Matrix& d, const std::vector<Vertex>& s) {
  int worst = 0;
  for (std::size_t w = 0; w < d.size(); ++w) {
    int best = std::numeric_limits<int>::max();
    for (Vertex p : s) best = std::min(best, d[w][p]);
    worst = std::max(worst, best);
  }
  return worst;
}

inline int diameter(const Matrix& d) {
  int out = 0;
  for (const auto& row : d)
    for (int x : row) out = std::max(out, x);
  return out;
}

struct Mesp {
  int k;
  std::vector<Vertex> path;
};

inline Mesp mesp(const Graph& g) {
  const auto d = floyd_warshall(g);
  Mesp best{std::numeric_limits<int>::max(), {}};
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u; v < g.n(); ++v)
      for (const auto& p : shortest_paths(g, d, u, v)) {
        const int e = set_ecc(d, p);
        if (e < best.k || (e == best.k && p < best.path)) best = {e, p};
      }
  return best;
}

struct Diameters {
  int diam;
  std::vector<std::vector<Vertex>> paths;
  std::vector<int> ecc;
};

inline Diameters diameters(const Graph& g) {
  const auto d = floyd_warshall(g);
  Diameters out{diameter(d), {}, {}};
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u; v < g.n(); ++v)
      if (d[u][v] == out.diam)
        for (const auto& p : shortest_paths(g, d, u, v)) {
          out.paths.push_back(p);
          out.ecc.push_back(set_ecc(d, p));
        }
  return out;
}

}  // namespace oracle
