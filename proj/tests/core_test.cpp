#include <gtest/gtest.h>

#include <random>

#include "starfact/core.hpp"

using namespace starfact;

TEST(EdgeDifference, WrapAroundAndForward) {
  EXPECT_EQ(edge_difference(0, 35, 42), (EdgeDifference{7, Orientation::wrap_around}));
  EXPECT_EQ(edge_difference(36, 37, 42), (EdgeDifference{1, Orientation::forward}));
}

TEST(EdgeDifference, HalfPeriodIsForward) {
  EXPECT_EQ(edge_difference(0, 21, 42), (EdgeDifference{21, Orientation::forward}));
  EXPECT_EQ(edge_difference(21, 0, 42), (EdgeDifference{21, Orientation::forward}));
}

TEST(EdgeDifference, RejectsDegenerateAndOutOfRange) {
  try {
    edge_difference(5, 5, 12);
    FAIL() << "expected degenerate-edge error";
  } catch (const StarfactError& e) {
    EXPECT_EQ(e.kind(), StarfactError::Kind::degenerate_edge);
  }
  EXPECT_THROW(edge_difference(0, 12, 12), std::out_of_range);
  EXPECT_THROW(edge_difference(-1, 3, 12), std::out_of_range);
}

TEST(EdgeDifference, SymmetricAndBoundedForAllPairs) {
  for (int g : {2, 3, 7, 12, 37, 60}) {
    for (int u = 0; u < g; ++u)
      for (int w = 0; w < g; ++w) {
        if (u == w) continue;
        const auto a = edge_difference(u, w, g);
        const auto b = edge_difference(w, u, g);
        ASSERT_EQ(a, b);
        ASSERT_GE(a.diff, 1);
        ASSERT_LE(a.diff, g / 2);
        const int span = std::abs(w - u);
        // Forward and wrap-around readings of one pair sum to g.
        ASSERT_EQ(span + (g - span), g);
        ASSERT_EQ(a.diff, a.orientation == Orientation::forward ? span : g - span);
      }
  }
}

TEST(TailOf, Examples) {
  EXPECT_EQ(tail_of(0, 35, 42), 35);
  EXPECT_EQ(residue6(tail_of(0, 35, 42)), 5);
  EXPECT_EQ(tail_of(36, 37, 42), 36);
  EXPECT_EQ(tail_of(37, 36, 42), 36);
  EXPECT_EQ(tail_of(1, 29, 42), 29);
  EXPECT_EQ(residue6(tail_of(1, 29, 42)), 5);
}

TEST(TailOf, HalfPeriodIsAmbiguous) {
  try {
    tail_of(3, 24, 42);
    FAIL() << "expected ambiguous-tail error";
  } catch (const StarfactError& e) {
    EXPECT_EQ(e.kind(), StarfactError::Kind::ambiguous_tail);
  }
}

// Every difference d < v/2 splits its v edges into 6 tail classes of v/6.
TEST(TailOf, ClassesSplitEveryDifferenceEvenly) {
  for (int v = 6; v <= 198; v += 6) {
    std::vector<std::array<int, 6>> count(v / 2, std::array<int, 6>{});
    for (int u = 0; u < v; ++u)
      for (int w = u + 1; w < v; ++w) {
        const int d = std::min(w - u, v - (w - u));
        if (2 * d == v) continue;
        const Vertex t = tail_of(u, w, v);
        ASSERT_EQ((t + d) % v, t == u ? w : u);
        ++count[d][t % 6];
      }
    for (int d = 1; 2 * d < v; ++d)
      for (int c = 0; c < 6; ++c) ASSERT_EQ(count[d][c], v / 6) << "v=" << v << " d=" << d;
  }
}

TEST(TailOf, RandomEdgesAgreeWithDefinition) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5000; ++trial) {
    const int v = 6 * std::uniform_int_distribution<int>(1, 400)(rng);
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    const int w = std::uniform_int_distribution<int>(0, v - 1)(rng);
    if (u == w || 2 * std::abs(u - w) == v) continue;
    const int d = edge_difference(u, w, v).diff;
    const Vertex t = tail_of(u, w, v);
    ASSERT_TRUE(t == u || t == w);
    ASSERT_EQ((t + d) % v, t == u ? w : u);
  }
}

TEST(StarText, RendersCentreThenLeaves) {
  EXPECT_EQ(to_string(Star{36, {37, 38, 39, 40, 41}}), "36; 37 38 39 40 41");
}

TEST(DifferenceCensus, SplitsByLabel) {
  DifferenceCensus c;
  c.by_diff[1] = {1, 0};
  c.by_diff[2] = {1, 1};
  c.by_diff[3] = {0, 1};
  EXPECT_EQ(c.pure_diffs(), (std::vector<int>{1, 2}));
  EXPECT_EQ(c.prime_diffs(), (std::vector<int>{2, 3}));
}
