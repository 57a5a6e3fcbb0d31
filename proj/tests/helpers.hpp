#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mesp/generators.hpp"
#include "mesp/graph.hpp"

namespace testing_support {

using mesp::Graph;
using mesp::Vertex;

inline Graph path_graph(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return mesp::build_graph(n, e);
}

inline Graph cycle_graph(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return mesp::build_graph(n, e);
}

inline Graph star_graph(Vertex leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return mesp::build_graph(leaves + 1, e);
}

// The shared random corpus: n cycles through 1..10, density through five
// levels, one seed per index.
inline Graph corpus_graph(int i) {
  static const double densities[] = {0.15, 0.25, 0.35, 0.5, 0.7};
  const Vertex n = 1 + i % 10;
  return mesp::gen_random_connected(n, densities[(i / 10) % 5], 1000 + static_cast<std::uint64_t>(i));
}

inline constexpr int kCorpusSize = 500;

inline std::vector<Vertex> ids(const mesp::NamedInstance& inst, const std::vector<std::string>& names) {
  std::vector<Vertex> out;
  for (const auto& n : names) out.push_back(inst.labels.at(n));
  return out;
}

}  // namespace testing_support
