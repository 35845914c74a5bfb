#include "dynmis/static_oracle.h"

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.h"

namespace dynmis {
namespace {

using testutil::DenseGraph;

TEST(LfmisTest, EdgelessGraphTakesEverything) {
  Graph g(6);
  VertexRanking r(6, 1);
  const MisSolution s = ComputeLfmis(g, r);
  for (VertexId v = 0; v < 6; ++v) {
    EXPECT_TRUE(s.in_mis[v]);
    EXPECT_EQ(s.eliminator[v], r[v]);
  }
}

TEST(LfmisTest, PathWithLowMiddle) {
  VertexRanking r(3, 4);
  const auto order = r.OrderByRank();
  const VertexId v1 = order[0], v0 = order[1], v2 = order[2];
  Graph g(3);
  g.Insert(EdgeKey::Of(v0, v1));
  g.Insert(EdgeKey::Of(v1, v2));
  const MisSolution s = ComputeLfmis(g, r);
  EXPECT_TRUE(s.in_mis[v1]);
  EXPECT_FALSE(s.in_mis[v0]);
  EXPECT_FALSE(s.in_mis[v2]);
  for (VertexId v : {v0, v1, v2}) EXPECT_EQ(s.eliminator[v], r[v1]);
}

TEST(LfmisTest, RandomGraphsSatisfyPredicates) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g(64);
    for (const EdgeKey& e : testutil::RandomEdges(64, 200, seed)) g.Insert(e);
    const VertexRanking r(64, seed + 100);
    const MisSolution s = ComputeLfmis(g, r);
    const DenseGraph d(g);
    EXPECT_TRUE(testutil::IsIndependent(d, s.in_mis));
    EXPECT_TRUE(testutil::IsMaximalIndependent(d, s.in_mis));
    EXPECT_TRUE(testutil::EliminatorsByDefinition(d, r.ranks(), s.in_mis, s.eliminator));
    const auto naive = testutil::GreedyMis(d, r.ranks());
    EXPECT_EQ(s.in_mis, naive.in_mis);
    EXPECT_EQ(s.eliminator, naive.eliminator);
  }
}

TEST(LfmmTest, SingleEdge) {
  Graph g(2);
  const EdgeKey e = EdgeKey::Of(0, 1);
  g.Insert(e);
  const Rank r = DrawEdgeRank(e, 0, 1);
  const MmSolution s = ComputeLfmm(g, {{e, r}});
  EXPECT_TRUE(s.edges.at(e).matched);
  EXPECT_EQ(s.edges.at(e).eliminator, r);
  EXPECT_EQ(s.vertex_rank[0], r);
  EXPECT_EQ(s.vertex_rank[1], r);
}

TEST(LfmmTest, ThreeEdgePath) {
  Graph g(4);
  const EdgeKey e1 = EdgeKey::Of(0, 1), e2 = EdgeKey::Of(1, 2), e3 = EdgeKey::Of(2, 3);
  for (const EdgeKey& e : {e1, e2, e3}) g.Insert(e);
  const Rank r1{10, e1.Packed(), 0}, r2{20, e2.Packed(), 0}, r3{30, e3.Packed(), 0};
  const MmSolution s = ComputeLfmm(g, {{e1, r1}, {e2, r2}, {e3, r3}});
  EXPECT_TRUE(s.edges.at(e1).matched);
  EXPECT_FALSE(s.edges.at(e2).matched);
  EXPECT_TRUE(s.edges.at(e3).matched);
  EXPECT_EQ(s.edges.at(e1).eliminator, r1);
  EXPECT_EQ(s.edges.at(e2).eliminator, r1);
  EXPECT_EQ(s.edges.at(e3).eliminator, r3);
}

TEST(LfmmTest, MissingRankThrows) {
  Graph g(2);
  g.Insert(EdgeKey::Of(0, 1));
  EXPECT_THROW(ComputeLfmm(g, {}), std::invalid_argument);
}

TEST(LfmmTest, RandomGraphsMatchGreedyReference) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g(64);
    EdgeRankMap ranks;
    for (const EdgeKey& e : testutil::RandomEdges(64, 200, seed)) {
      g.Insert(e);
      ranks.emplace(e, DrawEdgeRank(e, 0, seed));
    }
    const MmSolution s = ComputeLfmm(g, ranks);
    const auto naive = testutil::GreedyMm(64, testutil::SortedRanks(ranks));
    std::vector<int> used(64, 0);
    for (const auto& [e, verdict] : s.edges) {
      EXPECT_EQ(verdict.matched, naive.matched.at(e));
      EXPECT_EQ(verdict.eliminator, naive.eliminator.at(e));
      if (verdict.matched) {
        ++used[e.u];
        ++used[e.v];
      }
    }
    // Valid and maximal.
    for (int c : used) EXPECT_LE(c, 1);
    for (const EdgeKey& e : g.Edges()) EXPECT_TRUE(used[e.u] || used[e.v]);
    EXPECT_EQ(s.vertex_rank, naive.vertex_rank);
  }
}

TEST(ResidualTest, ThresholdExtremes) {
  Graph g(100);
  for (const EdgeKey& e : testutil::RandomEdges(100, 300, 3)) g.Insert(e);
  const VertexRanking r(100, 3);
  EXPECT_EQ(ResidualVertices(g, r, 0).size(), 100u);
  EXPECT_TRUE(ResidualVertices(g, r, ThresholdFromFraction(1.0)).empty());
}

TEST(ResidualTest, MatchesBruteForceFilter) {
  Graph g(512);
  for (const EdgeKey& e : testutil::RandomEdges(512, 2048, 8)) g.Insert(e);
  const VertexRanking r(512, 8);
  const MisSolution s = ComputeLfmis(g, r);
  const std::uint64_t t = ThresholdFromFraction(0.25);
  std::vector<VertexId> want;
  for (VertexId v = 0; v < 512; ++v) {
    if (s.eliminator[v].value > t) want.push_back(v);
  }
  EXPECT_EQ(ResidualVertices(g, r, t), want);
  EXPECT_EQ(ResidualVertices(s, t), want);

  std::vector<bool> keep(512, false);
  for (VertexId v : want) keep[v] = true;
  std::size_t max_degree = 0;
  for (VertexId v : want) {
    std::size_t d = 0;
    for (VertexId u : g.neighbors(v)) d += keep[u] ? 1 : 0;
    max_degree = std::max(max_degree, d);
  }
  EXPECT_EQ(InducedMaxDegree(g, want), max_degree);
}

TEST(ResidualTest, EdgeResidualAndIncidence) {
  Graph g(50);
  EdgeRankMap ranks;
  for (const EdgeKey& e : testutil::RandomEdges(50, 300, 4)) {
    g.Insert(e);
    ranks.emplace(e, DrawEdgeRank(e, 0, 4));
  }
  const MmSolution s = ComputeLfmm(g, ranks);
  const std::uint64_t t = ThresholdFromFraction(0.125);
  const auto residual = ResidualEdges(s, t);
  std::vector<std::size_t> count(50, 0);
  std::size_t expected_size = 0;
  for (const auto& [e, verdict] : s.edges) {
    if (verdict.eliminator.value > t) {
      ++expected_size;
      ++count[e.u];
      ++count[e.v];
    }
  }
  EXPECT_EQ(residual.size(), expected_size);
  EXPECT_EQ(MaxIncidence(50, residual), *std::max_element(count.begin(), count.end()));
  EXPECT_TRUE(ResidualEdges(s, ThresholdFromFraction(1.0)).empty());
}

}  // namespace
}  // namespace dynmis
