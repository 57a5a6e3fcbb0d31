#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mesp/graph.hpp"

namespace mesp {

inline constexpr std::int64_t kDefaultSpreadCap = 10'000;

struct SpreadResult {
  Vertex start = 0;
  Vertex x = 0;
  Vertex y = 0;
  Path path;
  EccReport ecc;
};

// Double sweep: x farthest from r, y farthest from x (smallest id on ties).
std::pair<Vertex, Vertex> spread_pair(const Graph& g, Vertex r);
SpreadResult spread_path(const Graph& g, Vertex r);

struct SpreadOutcome {
  Vertex x = 0;
  Vertex y = 0;
  std::int32_t min_ecc = 0;
  std::int32_t max_ecc = 0;
  std::int64_t paths = 0;
  bool operator==(const SpreadOutcome&) const = default;
};

// Every outcome a double sweep from r could produce under any tie-breaking:
// all farthest x, all farthest y from x, and the eccentricity range over all
// shortest x-y paths. Sorted by (x, y). Throws CapExceeded per pair.
std::vector<SpreadOutcome> enumerate_spread_outcomes(const Graph& g, Vertex r, std::int64_t cap = kDefaultSpreadCap);

struct PathProjection {
  std::int32_t i_min = 0;
  std::int32_t i_max = 0;
  std::int32_t k = 0;
  bool operator==(const PathProjection&) const = default;
};

// Index interval of reference vertices within k of q.
PathProjection path_projection(const Graph& g, const Path& reference, std::int32_t k, const Path& q);

// For a shortest reference path of eccentricity <= k and a shortest path q:
// every reference vertex in [i_min, i_max] is within 2k of q, and every vertex
// within k of that stretch is within 3k of q. Rejects inputs that break the
// preconditions.
bool check_lemma1(const Graph& g, const Path& reference, std::int32_t k, const Path& q);

}  // namespace mesp
