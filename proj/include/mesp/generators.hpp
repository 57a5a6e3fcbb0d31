#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mesp/graph.hpp"

namespace mesp {

// A checkable statement about an instance. `subject` names the root label for
// spread claims or the named path for path claims; empty otherwise.
//   k, l, s, diam, diameter_count, adversarial_approx3k
//   max_spread_ecc   (subject: root label)
//   path_ecc, path_length, path_shortest (subject: path name; shortest is 0/1)
struct Claim {
  std::string quantity;
  std::int64_t value = 0;
  std::string subject;
  bool operator==(const Claim&) const = default;
};

struct NamedInstance {
  std::string name;
  Graph graph;
  std::map<std::string, Vertex> labels;               // injective
  std::map<std::string, std::vector<Vertex>> paths;   // e.g. "red", "green"
  std::vector<Claim> claims;
};

NamedInstance gen_fig1();
NamedInstance gen_fig3();
// Path x0..x_{4k} with a pendant path of length k hanging off x_{2k}.
NamedInstance gen_gk(int k);
NamedInstance gen_jk(int k);
NamedInstance gen_hk(int k);

// G(n, p) made connected. Deterministic for a given (n, p, seed) on every
// platform; the exact procedure is spelled out in generators.cpp.
Graph gen_random_connected(Vertex n, double p, std::uint64_t seed);

}  // namespace mesp
