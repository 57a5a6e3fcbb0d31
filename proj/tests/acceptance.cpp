// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "mesp/generators.hpp"
#include "mesp/io.hpp"
#include "mesp/laminarity.hpp"
#include "mesp/mesp.hpp"
#include "mesp/paths.hpp"
#include "mesp/report.hpp"
#include "mesp/search.hpp"

namespace {

using namespace mesp;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

ExactLimits limit(Vertex n) {
  ExactLimits l;
  l.max_n = n;
  return l;
}

void sweep_tight(Outcome& o) {
  const auto f = gen_fig1();
  const auto t0 = Clock::now();
  const auto m = exact_mesp(f.graph, limit(16));
  const double dt = seconds_since(t0);
  std::int32_t hi = 0;
  for (const auto& e : enumerate_spread_outcomes(f.graph, f.labels.at("r"))) hi = std::max(hi, e.max_ecc);
  o.require(m.k == 1, "k = " + std::to_string(m.k));
  o.require(dt < 1.0, "exact took " + std::to_string(dt) + " s");
  o.require(hi == 5, "max spread ecc = " + std::to_string(hi));
  o.note << "k=" << m.k << " max_spread_ecc=" << hi << " exact_s=" << dt;
}

void recursion_tight(Outcome& o) {
  const auto f = gen_fig3();
  const auto t0 = Clock::now();
  const auto m = exact_mesp(f.graph);
  const auto adv = adversarial_algorithm3k(f.graph);
  const auto det = algorithm3k(f.graph);
  const double dt = seconds_since(t0);
  o.require(m.k == 1, "k");
  o.require(adv == 3, "adversarial = " + std::to_string(adv));
  o.require(det.ecc <= 3, "deterministic = " + std::to_string(det.ecc));
  o.require(dt < 5.0, "took " + std::to_string(dt) + " s");
  o.note << "k=" << m.k << " adversarial=" << adv << " deterministic=" << det.ecc << " s=" << dt;
}

struct CorpusEntry {
  Graph g;
  MespResult best;
};

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (int i = 0; i < testing_support::kCorpusSize; ++i) {
    Graph g = testing_support::corpus_graph(i);
    MespResult m = exact_mesp(g);
    out.push_back({std::move(g), std::move(m)});
  }
  return out;
}

void five_k(Outcome& o, const std::vector<CorpusEntry>& c) {
  const auto t0 = Clock::now();
  int violations = 0, runs = 0;
  for (const auto& e : c) {
    for (Vertex r = 0; r < e.g.n(); ++r, ++runs) violations += spread_path(e.g, r).ecc.value > 5 * e.best.k;
  }
  const double dt = seconds_since(t0);
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.require(dt < 60.0, "time");
  o.note << "graphs=" << c.size() << " roots=" << runs << " violations=" << violations << " s=" << dt;
}

void three_k(Outcome& o, const std::vector<CorpusEntry>& c) {
  const auto t0 = Clock::now();
  int violations = 0, bad_calls = 0;
  for (const auto& e : c) {
    const auto a = algorithm3k(e.g);
    violations += a.ecc > 3 * e.best.k;
    bad_calls += a.calls != 511;
  }
  const double dt = seconds_since(t0);
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.require(bad_calls == 0, std::to_string(bad_calls) + " runs without 511 calls");
  o.require(dt < 120.0, "time");
  o.note << "graphs=" << c.size() << " violations=" << violations << " calls=511 s=" << dt;
}

void projection(Outcome& o, const std::vector<CorpusEntry>& c) {
  std::int64_t checks = 0, violations = 0;
  for (const auto& e : c) {
    for (Vertex u = 0; u < e.g.n(); ++u)
      for (Vertex v = u; v < e.g.n(); ++v)
        for (const Path& q : enumerate_shortest_paths(e.g, u, v, 10'000)) {
          ++checks;
          violations += !check_lemma1(e.g, e.best.path, e.best.k, q);
        }
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.note << "checks=" << checks << " violations=" << violations;
}

void bounds(Outcome& o) {
  int failures = 0;
  for (int i = 0; i < testing_support::kCorpusSize; ++i) {
    failures += !bounds_report(testing_support::corpus_graph(i)).all_pass();
  }
  o.require(failures == 0, std::to_string(failures) + " corpus graphs fail");
  BoundsCaps caps;
  caps.exact.max_n = 64;
  for (int k = 1; k <= 4; ++k) {
    const auto r = bounds_report(gen_gk(k).graph, caps);
    o.require(r.k == k && r.l == k && r.s == k, "G_" + std::to_string(k));
  }
  for (int k = 1; k <= 2; ++k) {
    const auto j = bounds_report(gen_jk(k).graph, caps);
    o.require(j.s == 4 * k && j.k == k, "J_" + std::to_string(k) + " s=" + std::to_string(j.s));
    const auto h = bounds_report(gen_hk(k).graph, caps);
    o.require(h.l == 4 * k - 2 && h.k == k, "H_" + std::to_string(k) + " l=" + std::to_string(h.l));
  }
  o.note << "corpus_failures=" << failures << " G_1..4 tight, J_1..2 s=4k, H_1..2 l=4k-2";
}

void linear(Outcome& o) {
  const Vertex n = 100'000;
  const Graph g = gen_random_connected(n, 6.0 / n, 7);
  auto t0 = Clock::now();
  const auto s = spread_path(g, 0);
  const double ts = seconds_since(t0);
  t0 = Clock::now();
  const auto a = algorithm3k(g);
  const double ta = seconds_since(t0);
  o.require(ts < 5.0, "spread " + std::to_string(ts) + " s");
  o.require(ta < 5.0, "approx3k " + std::to_string(ta) + " s");
  o.require(a.calls == 511, "calls");
  o.note << "n=" << g.n() << " m=" << g.m() << " spread_s=" << ts << " approx3k_s=" << ta
         << " (ecc " << s.ecc.value << ", " << a.ecc << ")";
}

std::string run_cli(const std::string& cmd) {
  const std::string full = "MESP='" MESP_CLI_PATH "'; " + cmd + " 2>&1";
  FILE* p = popen(full.c_str(), "r");
  std::string out;
  if (p == nullptr) return "popen failed";
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  const int status = pclose(p);
  out += "\nexit=" + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
  return out;
}

void determinism(Outcome& o) {
  auto reports = [] {
    std::string all;
    const auto f1 = gen_fig1();
    const auto j2 = gen_jk(2);
    const Graph r = gen_random_connected(300, 0.02, 11);
    BoundsCaps caps;
    caps.exact.max_n = 64;
    all += serialize_instance(f1) + serialize_instance(gen_hk(3)) + serialize_edge_list(r);
    all += report_ecc(f1.graph, make_path(f1.graph, f1.paths.at("thick"))).render();
    for (Vertex v = 0; v < f1.graph.n(); ++v) all += report_spread(f1.graph, v).render();
    all += report_approx3k(j2.graph).render() + report_approx3k(r).render();
    all += report_exact(f1.graph, limit(16)).render();
    all += report_laminarity(j2.graph, caps).render();
    all += report_verify(f1, caps).render();
    all += write_dot(f1.graph, {{make_path(f1.graph, f1.paths.at("thick")), "red"}}, f1.labels);
    return all;
  };
  const std::string a = reports();
  const std::string b = reports();
  o.require(a == b, "in-process reports differ");
  int cli_diffs = 0;
  const char* cmds[] = {"$MESP gen random --n 500 --p 0.01 --seed 3", "$MESP gen fig1 | $MESP verify",
                        "$MESP gen jk --k 2 | $MESP approx3k", "$MESP gen hk --k 2 | $MESP laminarity",
                        "$MESP gen fig1 | $MESP spread --root r", "$MESP gen fig3 | $MESP exact",
                        "$MESP gen fig1 | $MESP dot"};
  for (const char* c : cmds) cli_diffs += run_cli(c) != run_cli(c);
  o.require(cli_diffs == 0, std::to_string(cli_diffs) + " CLI commands differ across processes");
  o.note << "report_bytes=" << a.size() << " cli_commands=" << std::size(cmds) << " differing=" << cli_diffs;
}

}  // namespace

int main() {
  int failed = 0;
  const std::vector<CorpusEntry> c = corpus();
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 spread tightness on the 16-vertex instance", sweep_tight},
      {"2 recursion tightness on the 13-vertex instance", recursion_tight},
      {"3 double sweep within 5k on the random corpus", [&](Outcome& o) { five_k(o, c); }},
      {"4 recursion within 3k with 511 calls on the random corpus", [&](Outcome& o) { three_k(o, c); }},
      {"5 projection lemma on every shortest path of the corpus", [&](Outcome& o) { projection(o, c); }},
      {"6 laminarity bounds and tight families", bounds},
      {"7 linear-time budget at n = 100000", linear},
      {"8 byte-identical reports across runs and processes", determinism},
  };
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " | " << o.note.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
