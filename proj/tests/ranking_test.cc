#include "dynmis/ranking.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

namespace dynmis {
namespace {

TEST(RankingTest, EmptyRanking) {
  VertexRanking r(0, 123);
  EXPECT_EQ(r.size(), 0u);
  EXPECT_TRUE(r.OrderByRank().empty());
}

TEST(RankingTest, DeterministicForSeed) {
  EXPECT_EQ(VertexRanking(5, 7), VertexRanking(5, 7));
  EXPECT_NE(VertexRanking(5, 7), VertexRanking(5, 8));
}

TEST(RankingTest, RanksAreDistinct) {
  VertexRanking r(1000, 1);
  std::set<Rank> seen(r.ranks().begin(), r.ranks().end());
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(RankingTest, OwnerRecoversVertex) {
  VertexRanking r(300, 5);
  for (VertexId v = 0; v < 300; ++v) EXPECT_EQ(VertexRanking::OwnerOf(r[v]), v);
}

TEST(RankingTest, OrderByRankIsSortedPermutation) {
  VertexRanking r(200, 9);
  const auto order = r.OrderByRank();
  ASSERT_EQ(order.size(), 200u);
  for (std::size_t i = 1; i < order.size(); ++i) EXPECT_LT(r[order[i - 1]], r[order[i]]);
  EXPECT_EQ(std::set<VertexId>(order.begin(), order.end()).size(), 200u);
}

TEST(RankingTest, ComparisonOrder) {
  const Rank a{3, 1, 0};
  EXPECT_EQ(a, a);
  EXPECT_LT((Rank{3, 1, 0}), (Rank{3, 2, 0}));
  EXPECT_LT((Rank{2, 9, 0}), (Rank{5, 0, 0}));
  EXPECT_LT((Rank{4, 4, 0}), (Rank{4, 4, 1}));
  EXPECT_LT(Rank::Lowest(), a);
  EXPECT_LT(a, Rank::Infinity());
  EXPECT_TRUE(Rank::Infinity().IsInfinite());
  EXPECT_FALSE(a.IsInfinite());
}

TEST(RankingTest, EdgeRankDeterminismAndNonce) {
  const EdgeKey e = EdgeKey::Of(3, 8);
  EXPECT_EQ(DrawEdgeRank(e, 0, 11), DrawEdgeRank(e, 0, 11));
  const Rank r0 = DrawEdgeRank(e, 0, 11);
  const Rank r1 = DrawEdgeRank(e, 1, 11);
  EXPECT_NE(r0, r1);
  EXPECT_NE(r0.value, r1.value);
  EXPECT_EQ(EdgeOwnerOf(r0), e);
  EXPECT_EQ(EdgeOwnerOf(r1), e);
}

TEST(RankingTest, EdgeRanksDistinctAcrossEdges) {
  std::set<Rank> seen;
  for (VertexId u = 0; u < 40; ++u)
    for (VertexId v = u + 1; v < 40; ++v) seen.insert(DrawEdgeRank(EdgeKey::Of(u, v), 0, 2));
  EXPECT_EQ(seen.size(), 40u * 39 / 2);
}

TEST(RankingTest, ThresholdFromFraction) {
  EXPECT_EQ(ThresholdFromFraction(0.0), 0u);
  EXPECT_EQ(ThresholdFromFraction(-1.0), 0u);
  EXPECT_EQ(ThresholdFromFraction(1.0), std::numeric_limits<std::uint64_t>::max());
  EXPECT_EQ(ThresholdFromFraction(0.25), std::uint64_t{1} << 62);
  EXPECT_NEAR((Rank{std::uint64_t{1} << 63, 0, 0}).Fraction(), 0.5, 1e-15);
}

// Kolmogorov-Smirnov distance of the samples from Uniform[0, 1].
double KsDistance(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - xs[i]));
    d = std::max(d, std::abs(xs[i] - static_cast<double>(i) / n));
  }
  return d;
}

TEST(RankingTest, EdgeRanksLookUniform) {
  std::vector<double> xs;
  double sum = 0;
  for (std::uint32_t i = 0; i < 100000; ++i) {
    const double x = DrawEdgeRank(EdgeKey::Of(i % 997, 997 + i / 997), 0, 42).Fraction();
    xs.push_back(x);
    sum += x;
  }
  const double mean = sum / static_cast<double>(xs.size());
  EXPECT_GE(mean, 0.49);
  EXPECT_LE(mean, 0.51);
  EXPECT_LE(KsDistance(xs), 0.01);
}

TEST(RankingTest, VertexRanksLookUniform) {
  VertexRanking r(100000, 77);
  std::vector<double> xs;
  for (const Rank& x : r.ranks()) xs.push_back(x.Fraction());
  EXPECT_LE(KsDistance(xs), 0.01);
}

TEST(RankingTest, ReinsertionNoncesLookIndependent) {
  // Ranks of one key across nonces behave like fresh draws.
  std::vector<double> xs;
  const EdgeKey e = EdgeKey::Of(0, 1);
  for (std::uint32_t nonce = 0; nonce < 100000; ++nonce) {
    xs.push_back(DrawEdgeRank(e, nonce, 3).Fraction());
  }
  EXPECT_LE(KsDistance(xs), 0.01);
}

}  // namespace
}  // namespace dynmis
