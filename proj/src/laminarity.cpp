#include "mesp/laminarity.hpp"

#include <string>

#include "mesp/kernels.hpp"
#include "mesp/paths.hpp"

namespace mesp {

DiameterValue graph_diameter(const Graph& g) {
  BfsWorkspace ws(g);
  DiameterValue out{0, {0, 0}};
  for (Vertex u = 0; u < g.n(); ++u) {
    ws.run({&u, 1}, false);
    const auto am = kernels::argmax_first(ws.dist());
    // A farther pair (v, u) with v < u would have shown up from source v.
    if (am.value > out.value) out = {am.value, {u, static_cast<Vertex>(am.index)}};
  }
  return out;
}

DiameterSet enumerate_diameters(const Graph& g, std::int64_t cap) {
  if (cap < 1) throw GraphError("diameter cap must be at least 1");
  const DistanceMatrix dm(g);
  DiameterSet out;
  for (Vertex u = 0; u < g.n(); ++u) out.diam = std::max(out.diam, kernels::max_value(dm.row(u)));
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u; v < g.n(); ++v) {
      if (dm.at(u, v) != out.diam) continue;
      out.pairs.emplace_back(u, v);
      const std::int64_t room = cap - static_cast<std::int64_t>(out.paths.size());
      try {
        walk_shortest_paths(g, dm.row(v), &dm, u, v, room, [&](std::span<const Vertex> p, std::int32_t ecc) {
          out.paths.push_back(Path{{p.begin(), p.end()}, true});
          out.eccentricities.push_back(ecc);
        });
      } catch (const CapExceeded&) {
        throw CapExceeded("more than " + std::to_string(cap) + " diameters; raise the diameter cap",
                          static_cast<std::int64_t>(out.paths.size()));
      }
    }
  }
  return out;
}

namespace {

template <class Better>
LaminarityValue extreme(const Graph& g, std::int64_t cap, Better better) {
  const DiameterSet ds = enumerate_diameters(g, cap);
  std::size_t pick = 0;
  for (std::size_t i = 1; i < ds.paths.size(); ++i) {
    if (better(ds.eccentricities[i], ds.eccentricities[pick])) pick = i;
  }
  return {ds.eccentricities[pick], ds.paths[pick]};
}

}  // namespace

LaminarityValue strong_laminarity(const Graph& g, std::int64_t cap) {
  return extreme(g, cap, [](std::int32_t a, std::int32_t b) { return a > b; });
}

LaminarityValue laminarity(const Graph& g, std::int64_t cap) {
  return extreme(g, cap, [](std::int32_t a, std::int32_t b) { return a < b; });
}

bool BoundsReport::all_pass() const {
  return k_le_l && l_le_4k_minus_2.value_or(true) && k_le_s && s_le_4k && zero_case.value_or(true);
}

BoundsReport bounds_report(const Graph& g, const BoundsCaps& caps) {
  BoundsReport r;
  r.k = exact_mesp(g, caps.exact).k;
  const DiameterSet ds = enumerate_diameters(g, caps.diameter_cap);
  r.l = *std::min_element(ds.eccentricities.begin(), ds.eccentricities.end());
  r.s = *std::max_element(ds.eccentricities.begin(), ds.eccentricities.end());
  r.k_le_l = r.k <= r.l;
  r.k_le_s = r.k <= r.s;
  r.s_le_4k = r.s <= 4 * r.k;
  if (r.k >= 1) {
    r.l_le_4k_minus_2 = r.l <= 4 * r.k - 2;
  } else {
    r.zero_case = r.l == 0 && r.s == 0;
  }
  return r;
}

}  // namespace mesp
