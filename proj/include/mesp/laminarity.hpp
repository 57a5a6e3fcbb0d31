#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mesp/graph.hpp"
#include "mesp/mesp.hpp"

namespace mesp {

struct DiameterValue {
  std::int32_t value = 0;
  std::pair<Vertex, Vertex> witness;  // lexicographically smallest u <= v
};

// All-sources BFS, O(nm).
DiameterValue graph_diameter(const Graph& g);

struct DiameterSet {
  std::int32_t diam = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;  // u <= v
  std::vector<Path> paths;                       // in pair order, lexicographic within a pair
  std::vector<std::int32_t> eccentricities;      // parallel to paths
};

inline constexpr std::int64_t kDefaultDiameterCap = 100'000;

// Throws CapExceeded when there are more than cap diameters in total.
DiameterSet enumerate_diameters(const Graph& g, std::int64_t cap = kDefaultDiameterCap);

struct LaminarityValue {
  std::int32_t value = 0;
  Path witness;  // first diameter (enumeration order) attaining value
};

LaminarityValue strong_laminarity(const Graph& g, std::int64_t cap = kDefaultDiameterCap);
LaminarityValue laminarity(const Graph& g, std::int64_t cap = kDefaultDiameterCap);

struct BoundsCaps {
  ExactLimits exact;
  std::int64_t diameter_cap = kDefaultDiameterCap;
};

struct BoundsReport {
  std::int32_t k = 0;
  std::int32_t l = 0;
  std::int32_t s = 0;
  bool k_le_l = false;
  std::optional<bool> l_le_4k_minus_2;  // not evaluated when k = 0
  bool k_le_s = false;
  bool s_le_4k = false;
  std::optional<bool> zero_case;  // k = 0 forces l = s = 0
  bool all_pass() const;
};

BoundsReport bounds_report(const Graph& g, const BoundsCaps& caps = {});

}  // namespace mesp
