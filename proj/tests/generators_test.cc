#include "dynmis/generators.h"

#include <gtest/gtest.h>

#include <sstream>

#include "dynmis/graph.h"

namespace dynmis {
namespace {

std::vector<std::size_t> EdgeCounts(const UpdateStream& s) {
  Graph g(s.header.n);
  std::vector<std::size_t> out;
  for (const Update& u : s.updates) {
    g.Apply(u);
    out.push_back(g.num_edges());
  }
  return out;
}

TEST(GeneratorsTest, ModelNames) {
  for (auto m : {StreamModel::kGnpInsert, StreamModel::kMixed, StreamModel::kSlidingWindow,
                 StreamModel::kStarFlip}) {
    EXPECT_EQ(ParseStreamModel(StreamModelName(m)), m);
  }
  EXPECT_EQ(ParseStreamModel("bogus"), std::nullopt);
}

TEST(GeneratorsTest, GnpInsertWithZeroTargetIsEmpty) {
  const auto s = GenerateStream({.model = StreamModel::kGnpInsert, .n = 100, .seed = 1});
  EXPECT_EQ(s.header.n, 100u);
  EXPECT_TRUE(s.updates.empty());
}

TEST(GeneratorsTest, GnpInsertReachesTarget) {
  const auto s = GenerateStream(
      {.model = StreamModel::kGnpInsert, .n = 30, .target_edges = 200, .seed = 2});
  ASSERT_EQ(s.updates.size(), 200u);
  for (const Update& u : s.updates) EXPECT_EQ(u.op, UpdateOp::kInsert);
  EXPECT_NO_THROW(ValidateReplay(s));
}

TEST(GeneratorsTest, GnpInsertCompleteGraph) {
  const auto s = GenerateStream(
      {.model = StreamModel::kGnpInsert, .n = 20, .target_edges = 190, .seed = 2});
  EXPECT_EQ(EdgeCounts(s).back(), 190u);
}

TEST(GeneratorsTest, SlidingWindowHoldsEdgeCount) {
  const std::size_t w = 25;
  const auto s = GenerateStream(
      {.model = StreamModel::kSlidingWindow, .n = 40, .updates = 301, .window = w, .seed = 3});
  ASSERT_EQ(s.updates.size(), 301u);
  const auto counts = EdgeCounts(s);
  for (std::size_t i = 0; i < w; ++i) EXPECT_EQ(s.updates[i].op, UpdateOp::kInsert);
  for (std::size_t i = w; i < s.updates.size(); i += 2) {
    EXPECT_EQ(s.updates[i].op, UpdateOp::kInsert);
    if (i + 1 < s.updates.size()) {
      EXPECT_EQ(s.updates[i + 1].op, UpdateOp::kDelete);
      EXPECT_EQ(counts[i + 1], w);
    }
  }
}

TEST(GeneratorsTest, SlidingWindowDeletesOldest) {
  const auto s = GenerateStream(
      {.model = StreamModel::kSlidingWindow, .n = 40, .updates = 40, .window = 3, .seed = 3});
  std::vector<EdgeKey> inserted;
  std::size_t deleted = 0;
  for (const Update& u : s.updates) {
    if (u.op == UpdateOp::kInsert) {
      inserted.push_back(u.edge);
    } else {
      EXPECT_EQ(u.edge, inserted[deleted++]);
    }
  }
}

TEST(GeneratorsTest, MixedIsDeterministicAndHoversAroundTarget) {
  const GeneratorParams p{
      .model = StreamModel::kMixed, .n = 1000, .updates = 100000, .target_edges = 4000,
      .seed = 9};
  const auto a = GenerateStream(p);
  const auto b = GenerateStream(p);
  EXPECT_EQ(a.updates, b.updates);
  ASSERT_EQ(a.updates.size(), 100000u);
  EXPECT_NO_THROW(ValidateReplay(a));
  const auto counts = EdgeCounts(a);
  double tail = 0;
  for (std::size_t i = 50000; i < counts.size(); ++i) tail += static_cast<double>(counts[i]);
  tail /= 50000.0;
  EXPECT_NEAR(tail, 4000.0, 400.0);
  auto q = p;
  q.seed = 10;
  EXPECT_NE(GenerateStream(q).updates, a.updates);
}

TEST(GeneratorsTest, MixedWithPrefill) {
  const auto s = GenerateStream({.model = StreamModel::kMixed, .n = 200, .updates = 500,
                                 .target_edges = 800, .prefill = 800, .seed = 4});
  ASSERT_EQ(s.updates.size(), 1300u);
  for (std::size_t i = 0; i < 800; ++i) EXPECT_EQ(s.updates[i].op, UpdateOp::kInsert);
  EXPECT_NO_THROW(ValidateReplay(s));
}

TEST(GeneratorsTest, StarFlipTouchesHubs) {
  const auto s = GenerateStream(
      {.model = StreamModel::kStarFlip, .n = 50, .updates = 2000, .hubs = 3, .seed = 5});
  ASSERT_EQ(s.updates.size(), 2000u);
  EXPECT_NO_THROW(ValidateReplay(s));
  for (const Update& u : s.updates) {
    EXPECT_LT(u.edge.u, 3u);
    EXPECT_GE(u.edge.v, 3u);
  }
}

TEST(GeneratorsTest, RejectsImpossibleParameters) {
  EXPECT_THROW(GenerateStream({.model = StreamModel::kGnpInsert, .n = 0}),
               std::invalid_argument);
  EXPECT_THROW(GenerateStream({.model = StreamModel::kGnpInsert, .n = 5, .target_edges = 11}),
               std::invalid_argument);
  EXPECT_THROW(GenerateStream({.model = StreamModel::kMixed, .n = 5, .updates = 3}),
               std::invalid_argument);
  EXPECT_THROW(GenerateStream({.model = StreamModel::kSlidingWindow, .n = 5, .updates = 3,
                               .window = 10}),
               std::invalid_argument);
  EXPECT_THROW(GenerateStream({.model = StreamModel::kStarFlip, .n = 4, .updates = 3,
                               .hubs = 4}),
               std::invalid_argument);
  EXPECT_THROW(GenerateStream({.model = StreamModel::kMixed, .n = 4, .updates = 3,
                               .target_edges = 2, .prefill = 7}),
               std::invalid_argument);
}

TEST(GeneratorsTest, StreamTextIsStable) {
  // Pinned output guards against accidental changes to the generators.
  const auto s = GenerateStream(
      {.model = StreamModel::kMixed, .n = 6, .updates = 6, .target_edges = 3, .seed = 1});
  std::ostringstream out;
  WriteStream(out, s);
  EXPECT_EQ(out.str(), "n 6\n+ 0 1\n+ 0 2\n- 0 1\n+ 3 4\n+ 1 3\n+ 1 5\n");
}

}  // namespace
}  // namespace dynmis
