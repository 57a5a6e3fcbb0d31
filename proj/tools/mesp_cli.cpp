// Command-line front end. Exit codes: 0 success, 1 algorithmic failure (cap,
// size limit, violated bound), 2 usage error.
#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <string>

#include "mesp/generators.hpp"
#include "mesp/io.hpp"
#include "mesp/report.hpp"
#include "mesp/search.hpp"

namespace {

using namespace mesp;

// "0,1,2", "v0,v1,v2" (labels) or the name of a path stored in the file.
Path parse_path_spec(const EdgeListDocument& doc, const std::string& spec) {
  auto named = doc.paths.find(spec);
  if (named != doc.paths.end()) return make_path(doc.graph, named->second);
  std::vector<Vertex> vs;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    const std::string tok = spec.substr(pos, end - pos);
    auto lab = doc.labels.find(tok);
    if (lab != doc.labels.end()) {
      vs.push_back(lab->second);
    } else {
      Vertex v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size()) throw GraphError("unknown vertex '" + tok + "' in path");
      vs.push_back(v);
    }
    pos = end + 1;
  }
  return make_path(doc.graph, std::move(vs));
}

Vertex resolve_vertex(const EdgeListDocument& doc, const std::string& tok) {
  auto lab = doc.labels.find(tok);
  if (lab != doc.labels.end()) return lab->second;
  Vertex v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) throw GraphError("unknown vertex '" + tok + "'");
  check_vertex(doc.graph, v);
  return v;
}

int emit(const Report& r) {
  std::cout << r.render();
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum eccentricity shortest paths: approximations, exact oracles, laminarity"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string out_file = "-";
  ExactLimits limits;
  BoundsCaps caps;
  caps.exact.max_n = 64;  // verify/laminarity default: the drawn families fit
  std::int64_t cap = kDefaultSpreadCap;

  auto* ecc = app.add_subcommand("ecc", "eccentricity of a path");
  std::string path_spec;
  ecc->add_option("file", file, "edge-list file, '-' for stdin")->required();
  ecc->add_option("path", path_spec, "comma-separated ids or labels, or a stored path name")->required();

  auto* spread = app.add_subcommand("spread", "double-sweep spread path");
  std::string root = "0";
  bool adversarial = false;
  spread->add_option("file", file, "edge-list file, '-' for stdin");
  spread->add_option("--root", root, "start vertex (id or label)");
  spread->add_flag("--adversarial", adversarial, "enumerate every outcome the sweep could produce");
  spread->add_option("--cap", cap, "shortest paths per pair before giving up");

  auto* approx = app.add_subcommand("approx3k", "recursive 3-approximation");
  approx->add_option("file", file, "edge-list file, '-' for stdin");
  approx->add_flag("--adversarial", adversarial, "worst case over every choice (small graphs only)");
  approx->add_option("--max-n", limits.max_n, "size limit for --adversarial");
  approx->add_option("--path-cap", limits.path_cap, "shortest paths per pair for --adversarial");

  auto* exact = app.add_subcommand("exact", "exact minimum eccentricity shortest path");
  exact->add_option("file", file, "edge-list file, '-' for stdin");
  exact->add_option("--max-n", limits.max_n, "refuse larger graphs");
  exact->add_option("--path-cap", limits.path_cap, "shortest paths per pair");

  auto* lam = app.add_subcommand("laminarity", "k, l, s and their inequalities");
  lam->add_option("file", file, "edge-list file, '-' for stdin");
  lam->add_option("--max-n", caps.exact.max_n, "size limit for the exact k");
  lam->add_option("--path-cap", caps.exact.path_cap, "shortest paths per pair");
  lam->add_option("--diameter-cap", caps.diameter_cap, "diameter paths in total");

  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string family;
  int k = 1;
  Vertex n = 10;
  double p = 0.3;
  std::uint64_t seed = 0;
  gen->add_option("family", family, "fig1, fig3, gk, hk, jk or random")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig3", "gk", "hk", "jk", "random"}));
  gen->add_option("--k", k, "family parameter");
  gen->add_option("--n", n, "vertex count (random)");
  gen->add_option("--p", p, "edge probability (random)");
  gen->add_option("--seed", seed, "seed (random)");
  gen->add_option("-o,--output", out_file, "output file, '-' for stdout");

  auto* verify = app.add_subcommand("verify", "check every applicable bound and stored claim");
  verify->add_option("file", file, "edge-list file, '-' for stdin");
  verify->add_option("--max-n", caps.exact.max_n, "size limit for the exact k");
  verify->add_option("--path-cap", caps.exact.path_cap, "shortest paths per pair");
  verify->add_option("--diameter-cap", caps.diameter_cap, "diameter paths in total");

  auto* dot = app.add_subcommand("dot", "Graphviz export with stored paths highlighted");
  dot->add_option("file", file, "edge-list file, '-' for stdin");
  dot->add_option("-o,--output", out_file, "output file, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      NamedInstance inst;
      if (family == "fig1") inst = gen_fig1();
      if (family == "fig3") inst = gen_fig3();
      if (family == "gk") inst = gen_gk(k);
      if (family == "hk") inst = gen_hk(k);
      if (family == "jk") inst = gen_jk(k);
      if (family == "random") {
        inst.name = "random_" + std::to_string(n) + "_" + std::to_string(seed);
        inst.graph = gen_random_connected(n, p, seed);
      }
      write_text_file(out_file, serialize_instance(inst));
      return 0;
    }

    const EdgeListDocument doc = parse_edge_list_document(read_text_file(file));
    const Graph& g = doc.graph;
    if (ecc->parsed()) return emit(report_ecc(g, parse_path_spec(doc, path_spec)));
    if (spread->parsed()) {
      const Vertex r = resolve_vertex(doc, root);
      return emit(adversarial ? report_spread_adversarial(g, r, cap) : report_spread(g, r));
    }
    if (approx->parsed()) return emit(adversarial ? report_approx3k_adversarial(g, limits) : report_approx3k(g));
    if (exact->parsed()) return emit(report_exact(g, limits));
    if (lam->parsed()) return emit(report_laminarity(g, caps));
    if (verify->parsed()) return emit(report_verify(to_instance(doc), caps));
    if (dot->parsed()) {
      static const char* colours[] = {"red", "darkgreen", "blue", "orange", "purple"};
      std::vector<Highlight> hl;
      std::size_t i = 0;
      for (const auto& [name, vs] : doc.paths) hl.push_back({make_path(g, vs), colours[i++ % 5]});
      write_text_file(out_file, write_dot(g, hl, doc.labels));
      return 0;
    }
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
