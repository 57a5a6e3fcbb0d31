#include "mesp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace mesp {

namespace {

using Edge = std::pair<Vertex, Vertex>;

std::string idx(const char* prefix, int i) { return prefix + std::to_string(i); }

void require_k(int k, const char* family) {
  if (k < 1) throw GraphError(std::string(family) + " needs k >= 1, got " + std::to_string(k));
}

// Lattice drawing: a set of integer points plus straight segments. A segment
// joins consecutive drawn points along its lattice line, which is how the
// grid-like families are read off their drawings.
class Lattice {
 public:
  using Pt = std::pair<int, int>;

  void node(int x, int y) { nodes_.insert({x, y}); }
  void seg(Pt a, Pt b) { segs_.emplace_back(a, b); }

  // Ids are handed out to `ordered` first (duplicates skipped), then to the
  // remaining points in (x, y) order.
  struct Built {
    Graph graph;
    std::map<Pt, Vertex> id;
  };
  Built build(const std::vector<Pt>& ordered) const {
    Built out;
    Vertex next = 0;
    for (const Pt& p : ordered) {
      if (!nodes_.count(p)) throw std::logic_error("labelled point missing from lattice");
      if (out.id.emplace(p, next).second) ++next;
    }
    for (const Pt& p : nodes_) {
      if (out.id.emplace(p, next).second) ++next;
    }
    std::vector<Edge> edges;
    for (auto [a, b] : segs_) {
      int dx = b.first - a.first, dy = b.second - a.second;
      int g = std::gcd(std::abs(dx), std::abs(dy));
      if (g == 0) continue;
      int sx = dx / g, sy = dy / g;
      Vertex prev = kNoVertex;
      for (int i = 0; i <= g; ++i) {
        Pt p{a.first + i * sx, a.second + i * sy};
        auto it = out.id.find(p);
        if (it == out.id.end()) continue;
        if (prev != kNoVertex) edges.emplace_back(prev, it->second);
        prev = it->second;
      }
    }
    out.graph = build_graph(next, edges);
    return out;
  }

 private:
  std::set<Pt> nodes_;
  std::vector<std::pair<Pt, Pt>> segs_;
};

std::vector<Vertex> to_ids(const Lattice::Built& b, const std::vector<Lattice::Pt>& pts) {
  std::vector<Vertex> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(b.id.at(p));
  return out;
}

void label_path(NamedInstance& inst, const char* prefix, const std::vector<Vertex>& path) {
  for (std::size_t i = 0; i < path.size(); ++i) inst.labels[idx(prefix, static_cast<int>(i))] = path[i];
}

// s-tightness family: red x0..x_{4k} is a diameter at distance 4k from z,
// green is another diameter of eccentricity k.
NamedInstance build_jk(int k) {
  Lattice L;
  using Pt = Lattice::Pt;
  // left triangle, its diagonal and the bottom row
  for (int x = 0; x <= k; ++x)
    for (int y = 0; y <= x; ++y) L.node(x, y);
  for (int x = k + 1; x <= 3 * k; ++x) L.node(x, 0);
  L.seg({0, 0}, {k, k});
  L.seg({0, 0}, {3 * k, 0});
  for (int x = 1; x < k; ++x) L.seg({x, 0}, {x, x});
  // ladder block hanging below the row
  for (int j = 0; j <= k; ++j)
    for (int y = -j; y <= k; ++y) L.node(k + j, y);
  for (int j = 0; j <= k; ++j) L.seg({k + j, -j}, {k + j, k});
  L.seg({k, 0}, {2 * k, -k});
  // top row
  for (int x = k; x <= 4 * k; ++x) L.node(x, k);
  L.seg({k, k}, {4 * k, k});
  // two fans of diagonals onto the bottom row
  for (int x = 0; x < k; ++x)
    for (int y = x; y < k; ++y) {
      L.node(2 * k + x, -y);
      L.node(3 * k + x, -y);
    }
  for (int x = 2 * k; x <= 4 * k; ++x) L.node(x, -k);
  for (int y = 1; y < k; ++y) L.node(3 * k, y);
  L.seg({2 * k, 0}, {3 * k, -k});
  L.seg({4 * k, -k}, {3 * k, 0});
  L.seg({3 * k, -k}, {3 * k, k});
  L.seg({2 * k, -k}, {4 * k, -k});
  for (int i = 1; i < k; ++i) {
    L.seg({2 * k, -i}, {3 * k - i, -k});
    L.seg({3 * k, -i}, {4 * k - i, -k});
  }
  // upper right: staircase triangle and a square grid
  for (int x = 0; x <= k; ++x)
    for (int y = 0; y <= x; ++y) L.node(2 * k + x, k + y);
  for (int x = 0; x <= k; ++x)
    for (int y = 0; y <= k; ++y) L.node(3 * k + x, k + y);
  L.seg({2 * k, k}, {3 * k, 2 * k});
  L.seg({4 * k, 2 * k}, {3 * k, 2 * k});
  L.seg({4 * k, 2 * k}, {4 * k, k});
  for (int i = 1; i < k; ++i) {
    L.seg({2 * k + i, k + i}, {4 * k, k + i});
    L.seg({2 * k + i, k + i}, {2 * k + i, k});
  }
  for (int j = 0; j < k; ++j) L.seg({3 * k + j, 2 * k}, {3 * k + j, k});

  std::vector<Pt> red, green;
  for (int x = 0; x <= k; ++x) red.push_back({x, 0});
  for (int i = 1; i <= k; ++i) red.push_back({k + i, -i});
  for (int x = 2 * k + 1; x <= 4 * k; ++x) red.push_back({x, -k});
  for (int x = k; x <= 3 * k; ++x) green.push_back({x, 0});
  for (int y = 1; y <= k; ++y) green.push_back({3 * k, y});
  for (int x = 3 * k + 1; x <= 4 * k; ++x) green.push_back({x, k});
  Pt z{4 * k, 2 * k};

  std::vector<Pt> order = red;
  order.insert(order.end(), green.begin(), green.end());
  order.push_back(z);
  auto b = L.build(order);

  NamedInstance inst;
  inst.name = "jk" + std::to_string(k);
  inst.graph = b.graph;
  inst.paths["red"] = to_ids(b, red);
  inst.paths["green"] = to_ids(b, green);
  label_path(inst, "x", inst.paths["red"]);
  inst.labels["z"] = b.id.at(z);
  return inst;
}

// The drawn pattern of the l-tightness family for k >= 2.
NamedInstance build_hk_pattern(int k) {
  Lattice L;
  using Pt = Lattice::Pt;
  L.node(0, 0);
  for (int x = 1; x <= k; ++x)
    for (int y = (x > 1 ? 0 : 1); y <= x; ++y) L.node(x, y);
  for (int x = k + 1; x <= 3 * k + 1; ++x) L.node(x, 0);
  L.seg({0, 0}, {1, 1});
  L.seg({1, 1}, {2, 0});
  L.seg({2, 0}, {3 * k + 1, 0});
  L.seg({1, 1}, {k, k});
  for (int x = 2; x <= k; ++x) L.seg({x, 0}, {x, x});
  // ladder block, columns k..2k+1
  for (int x = k; x <= 2 * k + 1; ++x)
    for (int y = -std::min(x - k, k); y <= k; ++y) L.node(x, y);
  for (int x = k + 1; x <= 2 * k + 1; ++x) L.seg({x, -std::min(x - k, k)}, {x, k});
  L.seg({k, 0}, {2 * k, -k});
  L.seg({k, k}, {2 * k, 0});
  // top row
  for (int x = k; x < 4 * k; ++x) L.node(x, k);
  L.seg({k, k}, {4 * k - 1, k});
  // lower right fans
  for (int x = 2 * k; x <= 4 * k; ++x) L.node(x, -k);
  for (int y = -k; y <= k; ++y) L.node(3 * k + 1, y);
  for (int x = 0; x < k - 1; ++x)
    for (int y = x; y < k - 1; ++y) {
      L.node(2 * k + 1 + x, -1 - y);
      L.node(3 * k + 1 + x, -1 - y);
    }
  L.seg({2 * k, -k}, {4 * k, -k});
  L.seg({3 * k + 1, -k}, {3 * k + 1, k});
  for (int i = 1; i < k; ++i) {
    L.seg({2 * k + 1, -i}, {3 * k + 1 - i, -k});
    L.seg({3 * k + 1, -i}, {4 * k + 1 - i, -k});
  }
  // upper right grid
  for (int x = 0; x <= k; ++x)
    for (int y = 0; y <= x; ++y) L.node(2 * k + 1 + x, k + y);
  for (int x = 3 * k + 1; x < 4 * k; ++x)
    for (int y = k; y <= 2 * k; ++y) L.node(x, y);
  L.seg({2 * k + 1, k}, {3 * k + 1, 2 * k});
  L.seg({4 * k - 1, 2 * k}, {3 * k + 1, 2 * k});
  L.seg({4 * k - 1, 2 * k}, {4 * k - 1, k});
  for (int i = 1; i < k; ++i) {
    L.seg({2 * k + 1 + i, k + i}, {4 * k - 1, k + i});
    L.seg({2 * k + 1 + i, k + i}, {2 * k + 1 + i, k});
  }
  for (int x = 3 * k + 1; x < 4 * k - 1; ++x) L.seg({x, 2 * k}, {x, k});

  std::vector<Pt> red{{0, 0}, {1, 1}}, green;
  for (int x = 2; x <= k; ++x) red.push_back({x, 0});
  for (int i = 1; i <= k; ++i) red.push_back({k + i, -i});
  for (int x = 2 * k + 1; x <= 4 * k; ++x) red.push_back({x, -k});
  for (int x = k; x <= 3 * k + 1; ++x) green.push_back({x, 0});
  for (int y = 1; y <= k; ++y) green.push_back({3 * k + 1, y});
  for (int x = 3 * k + 2; x < 4 * k; ++x) green.push_back({x, k});
  Pt z{4 * k - 1, 2 * k};

  std::vector<Pt> order = red;
  order.insert(order.end(), green.begin(), green.end());
  order.push_back(z);
  auto b = L.build(order);

  NamedInstance inst;
  inst.name = "hk" + std::to_string(k);
  inst.graph = b.graph;
  inst.paths["red"] = to_ids(b, red);
  inst.paths["green"] = to_ids(b, green);
  label_path(inst, "x", inst.paths["red"]);
  inst.labels["z"] = b.id.at(z);
  return inst;
}

std::vector<Vertex> iota_path(Vertex from, Vertex to) {
  std::vector<Vertex> out;
  for (Vertex v = from; v <= to; ++v) out.push_back(v);
  return out;
}

}  // namespace

NamedInstance gen_fig1() {
  enum : Vertex { v0, v1, v2, v3, v4, v5, v6, r, a, b, z, c, d, e, x, y };
  const std::vector<Edge> edges{
      {v0, v1}, {v1, v2}, {v2, v3}, {v3, v4}, {v4, v5}, {v5, v6}, {v2, b}, {a, b},  {b, r},  {v0, a}, {v1, a}, {v3, x},
      {r, v4},  {v6, y},  {z, v0},  {z, a},   {c, v4},  {c, x},   {d, r},  {d, v5}, {d, y},  {e, v5}, {e, c}};
  NamedInstance inst;
  inst.name = "fig1";
  inst.graph = build_graph(16, edges);
  for (int i = 0; i <= 6; ++i) inst.labels[idx("v", i)] = i;
  inst.labels.insert({{"r", r}, {"a", a}, {"b", b}, {"z", z}, {"c", c}, {"d", d}, {"e", e}, {"x", x}, {"y", y}});
  inst.paths["mesp"] = iota_path(v0, v6);
  inst.paths["thick"] = {x, c, e, v5, v6, y};
  inst.claims = {{"k", 1, ""},
                 {"path_ecc", 1, "mesp"},
                 {"path_ecc", 5, "thick"},
                 {"path_shortest", 1, "thick"},
                 {"max_spread_ecc", 5, "r"}};
  return inst;
}

NamedInstance gen_fig3() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4},  {4, 5},  {5, 6}, {0, 7}, {7, 8}, {8, 9},
                                {9, 10}, {10, 11}, {11, 6}, {3, 12}, {1, 8}, {2, 9}, {4, 9}, {5, 10}};
  NamedInstance inst;
  inst.name = "fig3";
  inst.graph = build_graph(13, edges);
  for (int i = 0; i <= 12; ++i) inst.labels[idx("v", i)] = i;
  inst.paths["mesp"] = iota_path(0, 6);
  inst.paths["top"] = {0, 7, 8, 9, 10, 11, 6};
  inst.claims = {{"k", 1, ""},
                 {"diam", 6, ""},
                 {"path_ecc", 1, "mesp"},
                 {"path_shortest", 1, "top"},
                 {"adversarial_approx3k", 3, ""}};
  return inst;
}

NamedInstance gen_gk(int k) {
  require_k(k, "gk");
  const Vertex spine = 4 * k;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < spine; ++i) edges.emplace_back(i, i + 1);
  // pendant vertices spine+1 .. spine+k, the first one hanging off x_{2k}
  Vertex prev = 2 * k;
  for (Vertex j = 1; j <= k; ++j) {
    edges.emplace_back(prev, spine + j);
    prev = spine + j;
  }
  NamedInstance inst;
  inst.name = "gk" + std::to_string(k);
  inst.graph = build_graph(5 * k + 1, edges);
  inst.paths["red"] = iota_path(0, spine);
  label_path(inst, "x", inst.paths["red"]);
  for (Vertex j = 1; j <= k; ++j) inst.labels[idx("p", j)] = spine + j;
  inst.claims = {{"k", k, ""},
                 {"l", k, ""},
                 {"s", k, ""},
                 {"diam", 4 * k, ""},
                 {"diameter_count", 1, ""},
                 {"path_ecc", k, "red"}};
  return inst;
}

NamedInstance gen_jk(int k) {
  require_k(k, "jk");
  NamedInstance inst = build_jk(k);
  inst.claims = {{"diam", 4 * k, ""},           {"path_length", 4 * k, "red"},  {"path_shortest", 1, "red"},
                 {"path_ecc", 4 * k, "red"},    {"path_length", 4 * k, "green"}, {"path_shortest", 1, "green"},
                 {"path_ecc", k, "green"},      {"k", k, ""},                    {"s", 4 * k, ""}};
  return inst;
}

NamedInstance gen_hk(int k) {
  require_k(k, "hk");
  if (k == 1) {
    // Small special case: two diameters of eccentricity 2 and a shortest
    // path of eccentricity 1.
    const std::vector<Edge> edges{{0, 1}, {0, 6}, {1, 2}, {1, 6}, {2, 3}, {2, 6}, {2, 7},
                                  {3, 4}, {3, 5}, {5, 7}, {5, 8}, {6, 7}, {7, 8}};
    NamedInstance inst;
    inst.name = "hk1";
    inst.graph = build_graph(9, edges);
    inst.paths["red"] = {0, 1, 2, 3, 4};
    inst.paths["green"] = {1, 2, 3, 5};
    label_path(inst, "x", inst.paths["red"]);
    inst.claims = {{"k", 1, ""},        {"l", 2, ""}, {"s", 2, ""}, {"diam", 4, ""}, {"diameter_count", 2, ""},
                   {"path_ecc", 1, "green"}, {"path_ecc", 2, "red"}};
    return inst;
  }
  if (k == 2) {
    // The drawn k=2 member has several diameters and laminarity 3, so this
    // is a repaired instance found by local search and then minimised:
    // x0..x9 is the unique diameter, v0..v7 the eccentricity-2 path.
    const std::vector<Edge> edges{
        {0, 1},   {1, 2},   {1, 17},  {2, 3},   {2, 17},  {3, 4},   {4, 5},   {4, 18},  {5, 6},
        {5, 18},  {6, 7},   {6, 19},  {7, 8},   {8, 9},   {8, 10},  {10, 11}, {10, 23}, {11, 12},
        {11, 19}, {12, 13}, {12, 18}, {12, 28}, {13, 14}, {14, 15}, {14, 25}, {15, 16}, {16, 17},
        {16, 21}, {18, 26}, {20, 23}, {20, 26}, {21, 24}, {22, 24}, {22, 28}, {25, 27}};
    NamedInstance inst;
    inst.name = "hk2";
    inst.graph = build_graph(29, edges);
    inst.paths["red"] = iota_path(0, 9);
    inst.paths["green"] = iota_path(10, 17);
    label_path(inst, "x", inst.paths["red"]);
    label_path(inst, "v", inst.paths["green"]);
    inst.labels["z"] = 27;
    inst.claims = {{"k", 2, ""},
                   {"l", 6, ""},
                   {"s", 6, ""},
                   {"diam", 9, ""},
                   {"diameter_count", 1, ""},
                   {"path_ecc", 6, "red"},
                   {"path_ecc", 2, "green"},
                   {"path_length", 7, "green"},
                   {"path_shortest", 1, "green"}};
    return inst;
  }
  // k >= 3 follows the drawn pattern. Only its structural statements hold;
  // no graph reaches laminarity 4k-2 at these k (see README).
  NamedInstance inst = build_hk_pattern(k);
  inst.claims = {{"diam", 4 * k, ""},
                 {"path_length", 4 * k, "red"},
                 {"path_shortest", 1, "red"},
                 {"path_ecc", 4 * k - 2, "red"},
                 {"path_length", 4 * k - 1, "green"},
                 {"path_shortest", 1, "green"},
                 {"path_ecc", k, "green"}};
  return inst;
}

// Procedure (reproducible from this description alone):
//  * engine: std::mt19937_64 seeded with `seed`; a uniform double in [0,1)
//    is (next() >> 11) * 2^-53.
//  * p <= 0: no edges; p >= 1: every pair. Otherwise pairs (w, v), w < v,
//    are visited in order v = 1..n-1, w = 0..v-1 with geometric skipping:
//    w += 1 + floor(log(1 - u) / log(1 - p)), carrying overflow into v.
//  * repair: components are ordered by their smallest vertex c; each one
//    except the first gets the edge (floor(u * c), c), which always lands in
//    an earlier component.
Graph gen_random_connected(Vertex n, double p, std::uint64_t seed) {
  if (n < 1) throw GraphError("random graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  std::vector<Edge> edges;
  if (p >= 1.0) {
    for (Vertex v = 1; v < n; ++v)
      for (Vertex w = 0; w < v; ++w) edges.emplace_back(w, v);
  } else if (p > 0.0) {
    const double lp = std::log(1.0 - p);
    std::int64_t v = 1, w = -1;
    while (v < n) {
      const double skip = std::floor(std::log(1.0 - uniform()) / lp);
      if (skip >= static_cast<double>(n) * n) break;  // past the last pair
      w += 1 + static_cast<std::int64_t>(skip);
      while (w >= v && v < n) {
        w -= v;
        ++v;
      }
      if (v < n) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
    }
  }

  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](Vertex a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto [a, b] : edges) {
    Vertex ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);  // root = smallest member
  }
  for (Vertex c = 1; c < n; ++c) {
    if (find(c) != c) continue;
    Vertex target = static_cast<Vertex>(std::floor(uniform() * c));
    edges.emplace_back(target, c);
    parent[c] = find(target);
  }
  return build_graph(n, edges);
}

}  // namespace mesp
