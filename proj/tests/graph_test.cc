#include <cstdint>
#include <set>

#include <gtest/gtest.h>

#include "bqsos/catalog.h"
#include "bqsos/errors.h"
#include "bqsos/graph.h"
#include "bqsos/parse.h"
#include "oracles.h"

namespace bqsos {
namespace {

using testing::Binomial;
using testing::HasC4Brute;
using testing::PopCount;
using testing::ZarankiewiczBrute;

TEST(Graph, EdgesAndMask) {
  BipartiteGraph g(4, 3);
  g.AddEdge(1, 1);
  g.AddEdge(4, 3);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.mask(), (1u << 0) | (1u << 11));
  EXPECT_EQ(BipartiteGraph::FromMask(4, 3, g.mask()), g);
  g.RemoveEdge(1, 1);
  EXPECT_FALSE(g.HasEdge(1, 1));
  EXPECT_EQ(g.row_mask(4), 0b100);
}

TEST(Graph, FromSimpleForm) {
  const auto g = FromSimpleForm(SimpleFamily(7));
  EXPECT_EQ(g.edge_count(), 7);
  EXPECT_TRUE(g.HasEdge(4, 1));
  EXPECT_THROW(FromSimpleForm(EightSquareForm()), StructureError);
  EXPECT_THROW(FromSimpleForm(ParseForm("2*x1^2*y1^2", 4, 3)), StructureError);
  try {
    FromSimpleForm(EightSquareForm());
  } catch (const StructureError& e) {
    EXPECT_NE(std::string(e.what()).find("x1*x4*y2*y3"), std::string::npos);
  }
}

TEST(Graph, FindC4MatchesBruteForceOnEveryGraph) {
  for (std::uint64_t mask = 0; mask < 4096; ++mask) {
    const auto g = BipartiteGraph::FromMask(4, 3, mask);
    const auto w = FindC4(g);
    ASSERT_EQ(w.has_value(), HasC4Brute(mask, 4, 3)) << mask;
    if (w) {
      for (const auto& [i, j] : w->edges()) ASSERT_TRUE(g.HasEdge(i, j));
      ASSERT_LT(w->i, w->k);
      ASSERT_LT(w->j, w->l);
      ASSERT_EQ(*w, AllC4(g).front());
    }
  }
}

TEST(Graph, AllC4CountOnCompleteGraph) {
  // C(4,2) * C(3,2) four-cycles in K_{4,3}.
  const auto g = BipartiteGraph::FromMask(4, 3, 0xFFF);
  EXPECT_EQ(AllC4(g).size(), 18u);
}

TEST(Graph, K33) {
  const auto g = FromSimpleForm(AllOnesForm(4, 3));
  EXPECT_EQ(FindK33(g), (std::array<int, 3>{1, 2, 3}));
  EXPECT_FALSE(FindK33(FromSimpleForm(SimpleFamily(7))));
  EXPECT_THROW(FindK33(BipartiteGraph(3, 2)), RangeError);
}

TEST(Graph, DisjointPairs) {
  // Rows {1,2} x cols {1,2} and rows {3,4} x cols {1,3}: edge-disjoint
  // but sharing column 1.
  BipartiteGraph g(4, 3);
  for (auto [i, j] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 3},
                      {4, 1}, {4, 3}}) {
    g.AddEdge(i, j);
  }
  EXPECT_FALSE(FindTwoDisjointC4(g, Disjointness::kVertex));
  const auto pair = FindTwoDisjointC4(g, Disjointness::kEdge);
  ASSERT_TRUE(pair);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : pair->first.edges()) seen.insert(e);
  for (const auto& e : pair->second.edges()) EXPECT_FALSE(seen.count(e));

  // In 4x4 two vertex-disjoint squares fit.
  BipartiteGraph h(4, 4);
  for (auto [i, j] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 3}, {3, 4},
                      {4, 3}, {4, 4}}) {
    h.AddEdge(i, j);
  }
  EXPECT_TRUE(FindTwoDisjointC4(h, Disjointness::kVertex));
}

TEST(GraphProperty, NoVertexDisjointPairWithThreeColumns) {
  for (std::uint64_t mask = 0; mask < 4096; ++mask) {
    ASSERT_FALSE(FindTwoDisjointC4(BipartiteGraph::FromMask(4, 3, mask),
                                   Disjointness::kVertex));
  }
}

TEST(Zarankiewicz, MatchesBruteForce) {
  EXPECT_EQ(ZarankiewiczBrute(2, 2), 3);
  EXPECT_EQ(ZarankiewiczBrute(3, 3), 6);
  EXPECT_EQ(Zarankiewicz(2, 2).max_edges, 3);
  EXPECT_EQ(Zarankiewicz(3, 3).max_edges, 6);
  EXPECT_EQ(Zarankiewicz(2, 3).max_edges, ZarankiewiczBrute(2, 3));
  EXPECT_EQ(Zarankiewicz(3, 4).max_edges, ZarankiewiczBrute(3, 4));
}

TEST(Zarankiewicz, FourByThree) {
  const auto r = Zarankiewicz(4, 3);
  EXPECT_EQ(r.max_edges, 7);
  EXPECT_EQ(r.witness.edge_count(), 7);
  EXPECT_FALSE(FindC4(r.witness));
  EXPECT_FALSE(FindC4(FromSimpleForm(SimpleFamily(7))));
  EXPECT_THROW(Zarankiewicz(5, 5), RangeError);
}

TEST(LemmaScan, GraphCountsAreBinomials) {
  for (int e = 8; e <= 12; ++e) {
    const auto report = LemmaScan(4, 3, e);
    EXPECT_EQ(report.graphs, Binomial(12, e));
    EXPECT_EQ(report.with_c4, report.graphs);
    EXPECT_TRUE(report.counterexamples.empty());
  }
  EXPECT_EQ(LemmaScan(4, 3, 8).graphs, 495);
  EXPECT_EQ(LemmaScan(4, 3, 10).graphs, 66);
  EXPECT_EQ(LemmaScan(4, 3, 11).graphs, 12);
}

TEST(LemmaScan, TenAndElevenEdgeStructure) {
  const auto ten = LemmaScan(4, 3, 10);
  long covered = 0;
  for (std::uint64_t mask = 0; mask < 4096; ++mask) {
    if (PopCount(mask) != 10) continue;
    const auto g = BipartiteGraph::FromMask(4, 3, mask);
    if (FindK33(g) || FindTwoDisjointC4(g, Disjointness::kEdge)) ++covered;
  }
  EXPECT_EQ(covered, ten.graphs);
  // Both missing edges in one row: the other three rows form K_{3,3}.
  EXPECT_EQ(ten.with_k33, 12);
  EXPECT_EQ(ten.with_vertex_disjoint_pair, 0);
  EXPECT_EQ(LemmaScan(4, 3, 11).with_k33, 12);
  EXPECT_THROW(LemmaScan(4, 3, 7), RangeError);
  EXPECT_THROW(LemmaScan(3, 3, 8), RangeError);
}

TEST(LemmaScan, ReportFormat) {
  const std::string text = FormatScanReport(LemmaScan(4, 3, 11));
  EXPECT_NE(text.find("graphs: 12"), std::string::npos);
  EXPECT_NE(text.find("counterexamples: 0"), std::string::npos);
}

}  // namespace
}  // namespace bqsos
