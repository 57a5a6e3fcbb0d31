#include "mesp/report.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "mesp/paths.hpp"
#include "mesp/search.hpp"

namespace mesp {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }
std::string pass_fail(bool b) { return b ? "pass" : "fail"; }

std::vector<Vertex> named_path(const NamedInstance& inst, const std::string& name) {
  auto it = inst.paths.find(name);
  if (it == inst.paths.end()) throw GraphError("instance has no path named '" + name + "'");
  return it->second;
}

}  // namespace

std::string join(const std::vector<Vertex>& vs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(vs[i]);
  }
  return out;
}

std::string Report::render() const {
  std::ostringstream os;
  for (const auto& l : lines) os << l << '\n';
  os << "---\n";
  for (const auto& [k, v] : values) os << k << '=' << v << '\n';
  return os.str();
}

Report report_ecc(const Graph& g, const Path& p) {
  const EccReport e = path_eccentricity(g, p);
  Report r;
  r.line("path of " + str(p.length()) + " edges" + (p.shortest ? " (shortest)" : " (not shortest)") +
         ": eccentricity " + str(e.value) + ", farthest vertex " + str(e.witness));
  r.set("ecc", str(e.value));
  r.set("witness", str(e.witness));
  r.set("length", str(p.length()));
  r.set("shortest", p.shortest ? "1" : "0");
  return r;
}

Report report_spread(const Graph& g, Vertex root) {
  const SpreadResult s = spread_path(g, root);
  Report r;
  r.line("double sweep from " + str(root) + ": x=" + str(s.x) + " y=" + str(s.y) + ", path of " +
         str(s.path.length()) + " edges with eccentricity " + str(s.ecc.value) + " (farthest " + str(s.ecc.witness) +
         ")");
  r.set("root", str(root));
  r.set("x", str(s.x));
  r.set("y", str(s.y));
  r.set("spread_ecc", str(s.ecc.value));
  r.set("witness", str(s.ecc.witness));
  r.set("path", join(s.path.vertices));
  return r;
}

Report report_spread_adversarial(const Graph& g, Vertex root, std::int64_t cap) {
  const auto outs = enumerate_spread_outcomes(g, root, cap);
  Report r;
  std::int32_t lo = outs.front().min_ecc, hi = outs.front().max_ecc;
  for (const auto& o : outs) {
    r.line("x=" + str(o.x) + " y=" + str(o.y) + ": " + str(o.paths) + " shortest paths, eccentricity " +
           str(o.min_ecc) + ".." + str(o.max_ecc));
    lo = std::min(lo, o.min_ecc);
    hi = std::max(hi, o.max_ecc);
  }
  r.set("root", str(root));
  r.set("outcomes", str(static_cast<std::int64_t>(outs.size())));
  r.set("spread_ecc_min", str(lo));
  r.set("spread_ecc", str(hi));
  return r;
}

Report report_approx3k(const Graph& g) {
  const Algorithm3kResult a = algorithm3k(g);
  Report r;
  r.line("recursive approximation from spread pair (" + str(a.s) + ", " + str(a.l) + "): eccentricity " +
         str(a.ecc) + " over " + str(a.calls) + " steps, path of " + str(a.path.length()) + " edges");
  r.set("approx3k_ecc", str(a.ecc));
  r.set("calls", str(a.calls));
  r.set("start", str(a.s));  // spread endpoints; "s" is reserved for s(G)
  r.set("end", str(a.l));
  r.set("path", join(a.path.vertices));
  return r;
}

Report report_approx3k_adversarial(const Graph& g, const ExactLimits& limits) {
  const std::int32_t worst = adversarial_algorithm3k(g, limits);
  Report r;
  r.line("worst eccentricity over all choices of the recursive approximation: " + str(worst));
  r.set("approx3k_ecc", str(worst));
  return r;
}

Report report_exact(const Graph& g, const ExactLimits& limits) {
  const MespResult m = exact_mesp(g, limits);
  Report r;
  r.line("minimum eccentricity shortest path: eccentricity " + str(m.k) + ", path of " + str(m.path.length()) +
         " edges (" + str(m.paths_enumerated) + " paths over " + str(m.pairs_scanned) + " pairs)");
  r.set("k", str(m.k));
  r.set("path", join(m.path.vertices));
  r.set("pairs_scanned", str(m.pairs_scanned));
  r.set("paths_enumerated", str(m.paths_enumerated));
  return r;
}

Report report_laminarity(const Graph& g, const BoundsCaps& caps) {
  const BoundsReport b = bounds_report(g, caps);
  const DiameterSet ds = enumerate_diameters(g, caps.diameter_cap);
  Report r;
  r.ok = b.all_pass();
  r.line("diameter " + str(ds.diam) + ", " + str(static_cast<std::int64_t>(ds.paths.size())) + " diameter paths");
  r.line("k=" + str(b.k) + " l=" + str(b.l) + " s=" + str(b.s));
  r.line(std::string("k <= l: ") + pass_fail(b.k_le_l));
  r.line("l <= 4k-2: " + (b.l_le_4k_minus_2 ? pass_fail(*b.l_le_4k_minus_2) : std::string("skipped (k = 0)")));
  r.line(std::string("k <= s: ") + pass_fail(b.k_le_s));
  r.line(std::string("s <= 4k: ") + pass_fail(b.s_le_4k));
  if (b.zero_case) r.line(std::string("k = 0 forces l = s = 0: ") + pass_fail(*b.zero_case));
  r.set("k", str(b.k));
  r.set("l", str(b.l));
  r.set("s", str(b.s));
  r.set("diam", str(ds.diam));
  r.set("diameters", str(static_cast<std::int64_t>(ds.paths.size())));
  r.set("check_k_le_l", pass_fail(b.k_le_l));
  r.set("check_l_le_4k_minus_2", b.l_le_4k_minus_2 ? pass_fail(*b.l_le_4k_minus_2) : "skipped");
  r.set("check_k_le_s", pass_fail(b.k_le_s));
  r.set("check_s_le_4k", pass_fail(b.s_le_4k));
  return r;
}

ClaimCheck check_claim(const NamedInstance& inst, const Claim& c, const BoundsCaps& caps) {
  const Graph& g = inst.graph;
  std::int64_t got = 0;
  try {
    const std::string& q = c.quantity;
    if (q == "k") {
      if (g.n() > caps.exact.max_n) return {"skipped", "n above the exact limit"};
      got = exact_mesp(g, caps.exact).k;
    } else if (q == "l") {
      got = laminarity(g, caps.diameter_cap).value;
    } else if (q == "s") {
      got = strong_laminarity(g, caps.diameter_cap).value;
    } else if (q == "diam") {
      got = graph_diameter(g).value;
    } else if (q == "diameter_count") {
      got = static_cast<std::int64_t>(enumerate_diameters(g, caps.diameter_cap).paths.size());
    } else if (q == "adversarial_approx3k") {
      if (g.n() > caps.exact.max_n) return {"skipped", "n above the exact limit"};
      got = adversarial_algorithm3k(g, caps.exact);
    } else if (q == "max_spread_ecc") {
      auto it = inst.labels.find(c.subject);
      if (it == inst.labels.end()) throw GraphError("unknown root label '" + c.subject + "'");
      const auto outs = enumerate_spread_outcomes(g, it->second, kDefaultSpreadCap);
      std::int32_t hi = 0;
      for (const auto& o : outs) hi = std::max(hi, o.max_ecc);
      got = hi;
    } else if (q == "path_ecc" || q == "path_length" || q == "path_shortest") {
      const Path p = make_path(g, named_path(inst, c.subject));
      got = q == "path_ecc" ? path_eccentricity(g, p).value : q == "path_length" ? p.length() : (p.shortest ? 1 : 0);
    } else {
      return {"fail", "unknown claim quantity '" + q + "'"};
    }
  } catch (const CapExceeded& e) {
    return {"skipped", e.what()};
  }
  if (got == c.value) return {"pass", str(got)};
  return {"fail", "expected " + str(c.value) + ", got " + str(got)};
}

Report report_verify(const NamedInstance& inst, const BoundsCaps& caps) {
  const Graph& g = inst.graph;
  Report r;
  int passed = 0, failed = 0, skipped = 0;
  auto record = [&](const std::string& name, const std::string& status, const std::string& detail) {
    r.line(name + ": " + status + (detail.empty() ? "" : " (" + detail + ")"));
    r.set("check." + name, status);
    if (status == "pass") ++passed;
    if (status == "fail") ++failed;
    if (status == "skipped") ++skipped;
  };

  std::optional<std::int32_t> k;
  if (g.n() <= caps.exact.max_n) {
    try {
      k = exact_mesp(g, caps.exact).k;
    } catch (const CapExceeded& e) {
      record("exact", "skipped", e.what());
    }
  }
  if (k) {
    std::int32_t worst = 0;
    for (Vertex root = 0; root < g.n(); ++root) worst = std::max(worst, spread_path(g, root).ecc.value);
    record("spread_le_5k", worst <= 5 * *k ? "pass" : "fail", "worst " + str(worst) + ", k " + str(*k));
    const Algorithm3kResult a = algorithm3k(g);
    record("approx3k_le_3k", a.ecc <= 3 * *k ? "pass" : "fail", "got " + str(a.ecc) + ", k " + str(*k));
    try {
      const BoundsReport b = bounds_report(g, caps);
      record("k_le_l", pass_fail(b.k_le_l), "");
      record("l_le_4k_minus_2", b.l_le_4k_minus_2 ? pass_fail(*b.l_le_4k_minus_2) : "skipped",
             b.l_le_4k_minus_2 ? "" : "k = 0");
      record("k_le_s", pass_fail(b.k_le_s), "");
      record("s_le_4k", pass_fail(b.s_le_4k), "");
      if (b.zero_case) record("zero_case", pass_fail(*b.zero_case), "");
    } catch (const CapExceeded& e) {
      record("laminarity", "skipped", e.what());
    }
  } else {
    record("bounds", "skipped", "n = " + str(g.n()) + " above the exact limit " + str(caps.exact.max_n));
  }
  for (const Claim& c : inst.claims) {
    const ClaimCheck cc = check_claim(inst, c, caps);
    record("claim." + c.quantity + (c.subject.empty() ? "" : "." + c.subject), cc.status, cc.detail);
  }
  r.ok = failed == 0;
  r.set("passed", str(passed));
  r.set("failed", str(failed));
  r.set("skipped", str(skipped));
  return r;
}

}  // namespace mesp
