#include "mesp/search.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <string>

#include "mesp/kernels.hpp"
#include "mesp/paths.hpp"

namespace mesp {

namespace {

// Above this size a distance matrix gets too large; fall back to one BFS per
// enumerated path.
constexpr Vertex kMatrixLimit = 4096;

std::vector<Vertex> argmax_all(std::span<const std::int32_t> d) {
  const std::int32_t best = kernels::max_value(d);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == best) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

void require_shortest(const Graph& g, const Path& p, const char* what) {
  if (p.vertices.empty()) throw GraphError(std::string(what) + " path is empty");
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    if (!g.adjacent(p.vertices[i - 1], p.vertices[i])) throw GraphError(std::string(what) + " path is not a walk");
  }
  if (!p.shortest || !is_shortest_path(g, p)) throw GraphError(std::string(what) + " path is not a shortest path");
}

}  // namespace

std::pair<Vertex, Vertex> spread_pair(const Graph& g, Vertex r) {
  const Vertex x = farthest_vertex(g, r);
  return {x, farthest_vertex(g, x)};
}

SpreadResult spread_path(const Graph& g, Vertex r) {
  check_vertex(g, r);
  BfsWorkspace ws(g);
  ws.run({&r, 1}, false);
  const Vertex x = static_cast<Vertex>(kernels::argmax_first(ws.dist()).index);
  ws.run({&x, 1}, true);
  const Vertex y = static_cast<Vertex>(kernels::argmax_first(ws.dist()).index);
  SpreadResult out;
  out.start = r;
  out.x = x;
  out.y = y;
  out.path = Path{ws.path_to(y), true};
  ws.run(out.path.vertices, false);
  auto am = kernels::argmax_first(ws.dist());
  out.ecc = {am.value, static_cast<Vertex>(am.index)};
  return out;
}

std::vector<SpreadOutcome> enumerate_spread_outcomes(const Graph& g, Vertex r, std::int64_t cap) {
  check_vertex(g, r);
  if (cap < 1) throw GraphError("path cap must be at least 1");
  std::unique_ptr<DistanceMatrix> dm;
  if (g.n() <= kMatrixLimit) dm = std::make_unique<DistanceMatrix>(g);
  BfsWorkspace ws(g);

  ws.run({&r, 1}, false);
  const auto xs = argmax_all(ws.dist());
  std::vector<SpreadOutcome> out;
  for (Vertex x : xs) {
    ws.run({&x, 1}, false);
    const std::vector<std::int32_t> from_x(ws.dist().begin(), ws.dist().end());
    for (Vertex y : argmax_all(from_x)) {
      SpreadOutcome o{x, y, 0, 0, 0};
      o.min_ecc = std::numeric_limits<std::int32_t>::max();
      o.max_ecc = std::numeric_limits<std::int32_t>::min();
      ws.run({&y, 1}, false);
      const std::vector<std::int32_t> to_y(ws.dist().begin(), ws.dist().end());
      BfsWorkspace scratch(g);
      o.paths = walk_shortest_paths(g, to_y, dm.get(), x, y, cap, [&](std::span<const Vertex> p, std::int32_t ecc) {
        if (ecc < 0) {
          scratch.run(p, false);
          ecc = kernels::max_value(scratch.dist());
        }
        o.min_ecc = std::min(o.min_ecc, ecc);
        o.max_ecc = std::max(o.max_ecc, ecc);
      });
      out.push_back(o);
    }
  }
  std::sort(out.begin(), out.end(), [](const SpreadOutcome& a, const SpreadOutcome& b) {
    return std::pair(a.x, a.y) < std::pair(b.x, b.y);
  });
  return out;
}

PathProjection path_projection(const Graph& g, const Path& reference, std::int32_t k, const Path& q) {
  require_shortest(g, reference, "reference");
  require_shortest(g, q, "projected");
  if (k < 0) throw GraphError("k must be non-negative");
  const auto dq = multi_source_bfs(g, q.vertices);
  PathProjection out{-1, -1, k};
  for (std::size_t i = 0; i < reference.vertices.size(); ++i) {
    if (dq[reference.vertices[i]] <= k) {
      if (out.i_min < 0) out.i_min = static_cast<std::int32_t>(i);
      out.i_max = static_cast<std::int32_t>(i);
    }
  }
  if (out.i_min < 0) throw GraphError("no reference vertex lies within " + std::to_string(k) + " of the path");
  return out;
}

bool check_lemma1(const Graph& g, const Path& reference, std::int32_t k, const Path& q) {
  const PathProjection pr = path_projection(g, reference, k, q);
  if (path_eccentricity(g, reference).value > k) {
    throw GraphError("reference path has eccentricity above k = " + std::to_string(k));
  }
  const auto dq = multi_source_bfs(g, q.vertices);
  std::vector<Vertex> stretch(reference.vertices.begin() + pr.i_min, reference.vertices.begin() + pr.i_max + 1);
  for (Vertex v : stretch) {
    if (dq[v] > 2 * k) return false;
  }
  const auto ds = multi_source_bfs(g, stretch);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (ds[v] <= k && dq[v] > 3 * k) return false;
  }
  return true;
}

}  // namespace mesp
