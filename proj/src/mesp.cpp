#include "mesp/mesp.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "mesp/kernels.hpp"
#include "mesp/paths.hpp"

namespace mesp {

namespace {

void require_small(const Graph& g, const ExactLimits& limits, const char* what) {
  if (g.n() > limits.max_n) {
    throw GraphError(std::string(what) + " refuses n = " + std::to_string(g.n()) + " (limit " +
                     std::to_string(limits.max_n) + "); raise the limit explicitly");
  }
  if (limits.path_cap < 1) throw GraphError("path cap must be at least 1");
}

// Runs the recursion. With memo on, the path and farthest vertex of an (x, y)
// pair are computed once; the step still executes (and counts) every time.
class Recursion {
 public:
  Recursion(const Graph& g, bool memo) : g_(g), memo_(memo), ws_(g) {}

  void step(Vertex x, Vertex y, int step, ApproxState& st) {
    ++st.calls;
    const Probe& p = probe(x, y);
    if (p.ecc < st.best_ecc) {
      const std::int32_t before = st.best_ecc;
      st.best_path = Path{p.path, true};
      st.best_ecc = p.ecc;
      if (st.best_ecc > before) throw std::logic_error("best eccentricity increased");
    }
    if (step < kMaxStep) {
      const Vertex z = p.z;  // `p` may move when the cache grows
      this->step(x, z, step + 1, st);
      this->step(y, z, step + 1, st);
    }
  }

 private:
  struct Probe {
    std::vector<Vertex> path;
    Vertex z;
    std::int32_t ecc;
  };

  const Probe& probe(Vertex x, Vertex y) {
    const std::uint64_t key = (static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint32_t>(y);
    if (memo_) {
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    Probe p;
    p.path = path_from(x, y);
    ws_.run(p.path, false);
    const auto am = kernels::argmax_first(ws_.dist());
    p.z = static_cast<Vertex>(am.index);
    p.ecc = am.value;
    if (!memo_) {
      scratch_ = std::move(p);
      return scratch_;
    }
    return cache_.emplace(key, std::move(p)).first->second;
  }

  // Parent trees are shared by every pair with the same first vertex; a run
  // touches few distinct sources, but the cache is bounded anyway.
  std::vector<Vertex> path_from(Vertex x, Vertex y) {
    if (!memo_) {
      ws_.run({&x, 1}, true);
      return ws_.path_to(y);
    }
    auto it = trees_.find(x);
    if (it == trees_.end()) {
      ws_.run({&x, 1}, true);
      if (trees_.size() >= kTreeCache) return ws_.path_to(y);
      it = trees_.emplace(x, std::vector<Vertex>(ws_.parent().begin(), ws_.parent().end())).first;
    }
    const std::vector<Vertex>& parent = it->second;
    std::vector<Vertex> out;
    for (Vertex v = y; v != kNoVertex; v = parent[v]) out.push_back(v);
    std::reverse(out.begin(), out.end());
    return out;
  }

  static constexpr std::size_t kTreeCache = 64;

  const Graph& g_;
  bool memo_;
  BfsWorkspace ws_;
  std::unordered_map<std::uint64_t, Probe> cache_;  // node-based: references stay valid
  std::unordered_map<Vertex, std::vector<Vertex>> trees_;
  Probe scratch_;
};

bool better(std::int32_t ecc, std::span<const Vertex> p, std::int32_t best_ecc, const std::vector<Vertex>& best) {
  if (ecc != best_ecc) return ecc < best_ecc;
  return std::lexicographical_compare(p.begin(), p.end(), best.begin(), best.end());
}

}  // namespace

void algorithm3k_step(const Graph& g, Vertex x, Vertex y, int step, ApproxState& state) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (step < 0 || step > kMaxStep) throw GraphError("step must lie in [0, 8]");
  Recursion(g, false).step(x, y, step, state);
}

Algorithm3kResult algorithm3k(const Graph& g) {
  const Vertex root = 0;
  BfsWorkspace ws(g);
  ws.run({&root, 1}, false);
  const Vertex s = static_cast<Vertex>(kernels::argmax_first(ws.dist()).index);
  ws.run({&s, 1}, false);
  const Vertex l = static_cast<Vertex>(kernels::argmax_first(ws.dist()).index);

  ApproxState st = ApproxState::fresh(g);
  Recursion(g, true).step(s, l, 0, st);
  if (st.calls != kStepCalls) {
    throw std::logic_error("recursion made " + std::to_string(st.calls) + " calls, expected 511");
  }
  return {st.best_path, st.best_ecc, st.calls, s, l};
}

MespResult exact_mesp(const Graph& g, const ExactLimits& limits) {
  require_small(g, limits, "exact MESP");
  const DistanceMatrix dm(g);
  MespResult out;
  out.k = std::numeric_limits<std::int32_t>::max();
  std::vector<Vertex> best;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u; v < g.n(); ++v) {
      ++out.pairs_scanned;
      out.paths_enumerated +=
          walk_shortest_paths(g, dm.row(v), &dm, u, v, limits.path_cap, [&](std::span<const Vertex> p, std::int32_t ecc) {
            if (best.empty() || better(ecc, p, out.k, best)) {
              out.k = ecc;
              best.assign(p.begin(), p.end());
            }
          });
    }
  }
  out.path = Path{best, true};
  return out;
}

std::int32_t adversarial_algorithm3k(const Graph& g, const ExactLimits& limits) {
  require_small(g, limits, "adversarial evaluation");
  const DistanceMatrix dm(g);
  const Vertex n = g.n();

  // For each ordered pair: every shortest path's eccentricity with the set of
  // vertices attaining it.
  struct Choice {
    std::int32_t ecc;
    std::vector<Vertex> far;
  };
  std::map<std::pair<Vertex, Vertex>, std::vector<Choice>> choices;
  auto choices_of = [&](Vertex x, Vertex y) -> const std::vector<Choice>& {
    auto it = choices.find({x, y});
    if (it != choices.end()) return it->second;
    std::vector<Choice> cs;
    std::vector<std::int32_t> acc(static_cast<std::size_t>(n));
    walk_shortest_paths(g, dm.row(y), nullptr, x, y, limits.path_cap, [&](std::span<const Vertex> p, std::int32_t) {
      auto r0 = dm.row(p[0]);
      std::copy(r0.begin(), r0.end(), acc.begin());
      for (Vertex w : p) kernels::min_into(acc, dm.row(w));
      Choice c{kernels::max_value(acc), {}};
      for (Vertex w = 0; w < n; ++w) {
        if (acc[w] == c.ecc) c.far.push_back(w);
      }
      cs.push_back(std::move(c));
    });
    return choices.emplace(std::pair(x, y), std::move(cs)).first->second;
  };

  // value[step][x*n+y]: worst reachable minimum over the subtree.
  std::vector<std::vector<std::int32_t>> value(kMaxStep + 1,
                                               std::vector<std::int32_t>(static_cast<std::size_t>(n) * n, -1));
  auto solve = [&](auto& self, Vertex x, Vertex y, int step) -> std::int32_t {
    std::int32_t& slot = value[step][static_cast<std::size_t>(x) * n + y];
    if (slot >= 0) return slot;
    std::int32_t worst = 0;
    for (const Choice& c : choices_of(x, y)) {
      if (step == kMaxStep || c.ecc <= worst) {
        worst = std::max(worst, c.ecc);
        continue;
      }
      for (Vertex z : c.far) {
        const std::int32_t sub = std::min({c.ecc, self(self, x, z, step + 1), self(self, y, z, step + 1)});
        worst = std::max(worst, sub);
        if (worst == c.ecc) break;
      }
    }
    return slot = worst;
  };

  std::int32_t worst = 0;
  for (Vertex r = 0; r < n; ++r) {
    auto dr = dm.row(r);
    const std::int32_t mr = kernels::max_value(dr);
    for (Vertex s = 0; s < n; ++s) {
      if (dr[s] != mr) continue;
      auto ds = dm.row(s);
      const std::int32_t ms = kernels::max_value(ds);
      for (Vertex l = 0; l < n; ++l) {
        if (ds[l] == ms) worst = std::max(worst, std::min(n, solve(solve, s, l, 0)));
      }
    }
  }
  return worst;
}

}  // namespace mesp
