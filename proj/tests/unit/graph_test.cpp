#include <gtest/gtest.h>

#include "harmonium/error.hpp"
#include "harmonium/graph.hpp"

namespace harmonium {
namespace {

TEST(Graph, FamiliesHaveExpectedEdges) {
  EXPECT_EQ(family(Family::path, 4).edges(), (std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(family(Family::cycle, 4).edge_count(), 4u);
  EXPECT_EQ(family(Family::complete, 5).edge_count(), 10u);
  EXPECT_EQ(family(Family::star, 5).degree(0), 4);
  EXPECT_EQ(family(Family::cycle, 3), family(Family::complete, 3));
  EXPECT_THROW(family(Family::cycle, 2), DomainError);
  EXPECT_EQ(parse_family("star"), Family::star);
  EXPECT_FALSE(parse_family("wheel"));
}

TEST(Graph, RejectsLoopsAndCollapsesDuplicates) {
  EXPECT_THROW(Graph(3, {{2, 2}}), DomainError);
  EXPECT_THROW(Graph(3, {{1, 4}}), DomainError);
  const Graph g(3, {{2, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
}

TEST(Graph, LaplacianFactorsThroughBoundaryMap) {
  for (auto kind : {Family::path, Family::cycle, Family::complete, Family::star}) {
    const auto g = family(kind, 5);
    const auto d = boundary_map(g);
    EXPECT_EQ(laplacian(g), d * d.transpose()) << to_string(kind);
  }
  const auto l = laplacian(family(Family::path, 3));
  EXPECT_EQ(l(0, 0), 1);
  EXPECT_EQ(l(1, 1), 2);
  EXPECT_EQ(l(0, 1), -1);
  EXPECT_EQ(l(0, 2), 0);
}

TEST(Graph, ComponentsAndDisjointUnion) {
  const auto u = disjoint_union(family(Family::path, 2), family(Family::cycle, 3));
  EXPECT_EQ(u.vertex_count(), 5);
  EXPECT_FALSE(u.is_connected());
  EXPECT_EQ(u.components().size(), 2u);
  EXPECT_EQ(u.edges().back(), (Edge{4, 5}));
  EXPECT_TRUE(Graph(3, {{1, 2}}).has_isolated_vertex());
}

TEST(ParseGraph, ReadsEdgeList) {
  const auto parsed = parse_graph("# triangle\n3\n1 2\n\n2 3\n# closing edge\n3 1\n");
  EXPECT_EQ(parsed.graph, family(Family::cycle, 3));
  EXPECT_TRUE(parsed.warnings.empty());
}

TEST(ParseGraph, WarnsOnDuplicatesAndIsolatedVertices) {
  const auto parsed = parse_graph("4\n1 2\n2 1\n2 3\n");
  EXPECT_EQ(parsed.graph.edge_count(), 2u);
  ASSERT_EQ(parsed.warnings.size(), 2u);
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  try {
    parse_graph("3\n1 2\n2 2\n");
    FAIL() << "loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_graph("# header\n3\n1 x\n");
    FAIL() << "malformed line accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_graph("3\n1 5\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
}

TEST(VertexOrientation, NonconstantEnumeration) {
  const auto all = nonconstant_vertex_orientations(4);
  EXPECT_EQ(all.size(), 14u);
  for (const auto& eps : all) EXPECT_TRUE(eps.is_nonconstant());
  EXPECT_EQ(to_string(all.front()), "(-1, +1, +1, +1)");
  EXPECT_EQ((-all.front()).signs, (std::vector<std::int8_t>{1, -1, -1, -1}));
}

TEST(Graph, SmallFamiliesCoincide) {
  EXPECT_EQ(parse_graph("3\n1 2\n2 3\n").graph, family(Family::path, 3));
  EXPECT_EQ(parse_graph("4\n1 2\n1 3\n1 4\n").graph, family(Family::star, 4));
  EXPECT_THROW(parse_graph("2\n1 1\n"), ParseError);
}

TEST(Graph, LaplacianShapes) {
  const auto star = laplacian(family(Family::star, 5));
  EXPECT_EQ(star(0, 0), 4);
  for (std::size_t j = 1; j < 5; ++j) {
    EXPECT_EQ(star(0, j), -1);
    EXPECT_EQ(star(j, 0), -1);
    EXPECT_EQ(star(j, j), 1);
  }
  EXPECT_EQ(laplacian(Graph(2, {})), IntegerMatrix(2, 2));
  const auto d = boundary_map(Graph(2, {{1, 2}}));
  EXPECT_EQ(d(0, 0), -1);
  EXPECT_EQ(d(1, 0), 1);
  const auto k3 = boundary_map(family(Family::complete, 3));
  const auto l = k3 * k3.transpose();
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(l(i, i), 2);
}

TEST(Graph, ConnectedLaplacianHasOneDimensionalKernel) {
  for (auto kind : {Family::path, Family::cycle, Family::complete, Family::star}) {
    for (int n = 3; n <= 7; ++n) {
      const auto l = laplacian(family(kind, n));
      EXPECT_EQ(exact_rank(l), static_cast<std::size_t>(n - 1));
      for (std::size_t i = 0; i < l.rows(); ++i) {
        BigInt row = 0;
        for (std::size_t j = 0; j < l.cols(); ++j) row += l(i, j);
        EXPECT_EQ(row, 0);
      }
    }
  }
  EXPECT_EQ(exact_rank(laplacian(disjoint_union(family(Family::path, 3), family(Family::path, 2)))), 3u);
}

}  // namespace
}  // namespace harmonium
