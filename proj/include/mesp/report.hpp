#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mesp/generators.hpp"
#include "mesp/graph.hpp"
#include "mesp/laminarity.hpp"
#include "mesp/mesp.hpp"

// Text reports shared by the command-line tool and the tests. Each report is
// a few human-readable lines followed by a "---" line and a key=value block
// whose keys are stable.
namespace mesp {

struct Report {
  std::vector<std::string> lines;
  std::vector<std::pair<std::string, std::string>> values;
  bool ok = true;  // false when a checked bound or claim failed

  void line(std::string s) { lines.push_back(std::move(s)); }
  void set(std::string key, std::string value) { values.emplace_back(std::move(key), std::move(value)); }
  std::string render() const;
};

std::string join(const std::vector<Vertex>& vs, char sep = ',');

Report report_ecc(const Graph& g, const Path& p);
Report report_spread(const Graph& g, Vertex r);
Report report_spread_adversarial(const Graph& g, Vertex r, std::int64_t cap);
Report report_approx3k(const Graph& g);
Report report_approx3k_adversarial(const Graph& g, const ExactLimits& limits);
Report report_exact(const Graph& g, const ExactLimits& limits);
Report report_laminarity(const Graph& g, const BoundsCaps& caps);

// Outcome of evaluating one claim: "pass", "fail" or "skipped" plus detail.
struct ClaimCheck {
  std::string status;
  std::string detail;
};
ClaimCheck check_claim(const NamedInstance& inst, const Claim& claim, const BoundsCaps& caps);

// Every bound that can be evaluated within the caps (5k for double sweeps
// from every root, 3k for the recursion, the four laminarity inequalities),
// then every claim carried by the instance.
Report report_verify(const NamedInstance& inst, const BoundsCaps& caps);

}  // namespace mesp
