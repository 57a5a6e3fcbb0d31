#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <regex>
#include <algorithm>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "mesp/generators.hpp"
#include "mesp/io.hpp"

namespace {

using ::testing::HasSubstr;
using namespace mesp;
using namespace testing_support;

std::string error_of(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const GraphError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseEdgeList, K2) {
  const Graph g = parse_edge_list("2 1\n0 1\n");
  EXPECT_EQ(g, build_graph(2, {{0, 1}}));
}

TEST(ParseEdgeList, CommentsAndBlankLines) {
  const Graph g = parse_edge_list("# a triangle\n\n3 3\n0 1\n# middle\n1 2\n  2 0  \n\n");
  EXPECT_EQ(g.m(), 3);
}

TEST(ParseEdgeList, Errors) {
  EXPECT_THAT(error_of("3 1\n0 1\n"), HasSubstr("disconnected"));
  EXPECT_THAT(error_of("2 1\n0 x\n"), HasSubstr("line 2"));
  EXPECT_THAT(error_of("# c\n2\n0 1\n"), HasSubstr("line 2: header"));
  EXPECT_THAT(error_of("2 1\n0 1\n1 0\n"), HasSubstr("line 3"));
  EXPECT_THAT(error_of("3 2\n0 1\n"), HasSubstr("promises 2 edges"));
  EXPECT_THAT(error_of("2 1\n0 5\n"), HasSubstr("line 2: vertex id outside"));
  EXPECT_THAT(error_of("2 1\n1 1\n"), HasSubstr("self-loop"));
  EXPECT_THAT(error_of("0 0\n"), HasSubstr("at least 1"));
  EXPECT_THAT(error_of(""), HasSubstr("missing"));
  EXPECT_THAT(error_of("2 1\n0 1 2\n"), HasSubstr("line 2"));
}

TEST(Serialize, CanonicalForm) {
  const Graph g = build_graph(3, {{2, 1}, {1, 0}});
  EXPECT_EQ(serialize_edge_list(g), "3 2\n0 1\n1 2\n");
}

TEST(Serialize, RoundTripsGeneratedInstances) {
  for (const auto& inst : {gen_fig1(), gen_fig3(), gen_gk(2), gen_jk(2), gen_hk(2), gen_hk(3)}) {
    EXPECT_EQ(parse_edge_list(serialize_edge_list(inst.graph)), inst.graph) << inst.name;
    const EdgeListDocument doc = parse_edge_list_document(serialize_instance(inst));
    EXPECT_EQ(doc.graph, inst.graph);
    EXPECT_EQ(doc.name, inst.name);
    EXPECT_EQ(doc.labels, inst.labels);
    EXPECT_EQ(doc.paths, inst.paths);
    EXPECT_EQ(doc.claims, inst.claims);
    EXPECT_EQ(serialize_instance(to_instance(doc)), serialize_instance(inst));
  }
  for (int i = 0; i < 100; ++i) {
    const Graph g = corpus_graph(i);
    ASSERT_EQ(parse_edge_list(serialize_edge_list(g)), g);
  }
}

TEST(Document, MetadataErrors) {
  EXPECT_THROW(parse_edge_list_document("# label q 9\n2 1\n0 1\n"), GraphError);
  EXPECT_THROW(parse_edge_list_document("# claim k x\n2 1\n0 1\n"), GraphError);
  EXPECT_THROW(parse_edge_list_document("# path p 0 7\n2 1\n0 1\n"), GraphError);
  // keywords with the wrong arity read as prose
  EXPECT_TRUE(parse_edge_list_document("# claim k\n2 1\n0 1\n").claims.empty());
}

std::set<std::pair<Vertex, Vertex>> thick_edges(const std::string& dot) {
  std::set<std::pair<Vertex, Vertex>> out;
  static const std::regex edge(R"((\d+) -- (\d+) \[.*penwidth)");
  std::smatch m;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    if (std::regex_search(line, m, edge)) out.insert({std::stoi(m[1]), std::stoi(m[2])});
  }
  return out;
}

TEST(Dot, K2WithoutHighlights) {
  const std::string dot = write_dot(build_graph(2, {{0, 1}}), {});
  EXPECT_THAT(dot, HasSubstr("graph G {"));
  EXPECT_THAT(dot, HasSubstr("0 -- 1;"));
  EXPECT_TRUE(thick_edges(dot).empty());
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 6);  // open, style, 2 nodes, edge, close
}

TEST(Dot, SweepTightInstanceThickPath) {
  const auto f = gen_fig1();
  const std::string dot = write_dot(f.graph, {{make_path(f.graph, f.paths.at("thick")), "black"}}, f.labels);
  const auto& L = f.labels;
  auto e = [&](const char* a, const char* b) {
    return std::pair(std::min(L.at(a), L.at(b)), std::max(L.at(a), L.at(b)));
  };
  const std::set<std::pair<Vertex, Vertex>> want{e("x", "c"), e("c", "e"), e("e", "v5"), e("v5", "v6"), e("v6", "y")};
  EXPECT_EQ(thick_edges(dot), want);
  EXPECT_THAT(dot, HasSubstr("[label=\"z\"]"));
  EXPECT_EQ(dot, write_dot(f.graph, {{make_path(f.graph, f.paths.at("thick")), "black"}}, f.labels));
}

TEST(Dot, FirstHighlightWins) {
  const Graph g = path_graph(3);
  const std::string dot = write_dot(g, {{make_path(g, {0, 1}), "red"}, {make_path(g, {0, 1, 2}), "blue"}});
  EXPECT_THAT(dot, HasSubstr("0 -- 1 [color=\"red\""));
  EXPECT_THAT(dot, HasSubstr("1 -- 2 [color=\"blue\""));
}

TEST(Dot, RejectsNonEdges) {
  const Graph g = path_graph(3);
  EXPECT_THROW(write_dot(g, {{Path{{0, 2}, false}, "red"}}), GraphError);
}

}  // namespace
