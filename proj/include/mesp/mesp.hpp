#pragma once

#include <cstdint>

#include "mesp/graph.hpp"

namespace mesp {

inline constexpr int kMaxStep = 8;
inline constexpr std::int64_t kStepCalls = (std::int64_t{1} << (kMaxStep + 1)) - 1;  // 511

struct ApproxState {
  Path best_path;
  std::int32_t best_ecc = 0;
  std::int64_t calls = 0;

  static ApproxState fresh(const Graph& g) { return {Path{}, g.n(), 0}; }
};

struct Algorithm3kResult {
  Path path;
  std::int32_t ecc = 0;
  std::int64_t calls = 0;
  Vertex s = 0;  // spread pair the recursion started from
  Vertex l = 0;
};

// One literal step of the recursion: Q = parent-tree shortest x-y path, z its
// farthest vertex (smallest id), update on improvement, then recurse on
// (x, z) and (y, z) while step < 8.
void algorithm3k_step(const Graph& g, Vertex x, Vertex y, int step, ApproxState& state);

// Full run from the spread pair of vertex 0. Shares work between repeated
// (x, y) calls but performs and counts all 511 steps.
Algorithm3kResult algorithm3k(const Graph& g);

struct ExactLimits {
  Vertex max_n = 15;
  std::int64_t path_cap = 100'000;  // per vertex pair
};

struct MespResult {
  std::int32_t k = 0;
  Path path;
  std::int64_t pairs_scanned = 0;
  std::int64_t paths_enumerated = 0;
};

// Minimum eccentricity over every shortest path; ties go to the
// lexicographically smallest vertex sequence. Refuses graphs above max_n.
MespResult exact_mesp(const Graph& g, const ExactLimits& limits = {});

// Worst final eccentricity over every choice the recursion leaves open: any
// spread pair (any start vertex, any farthest vertices), any shortest path Q
// at each step and any farthest z.
std::int32_t adversarial_algorithm3k(const Graph& g, const ExactLimits& limits = {});

}  // namespace mesp
