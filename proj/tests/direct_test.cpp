#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "starfact/direct.hpp"
#include "starfact/verifier.hpp"

using namespace starfact;

namespace {

// Edge multiset of a decomposition, counted by hand.
std::map<std::pair<int, int>, int> edge_counts(const Decomposition& d) {
  std::map<std::pair<int, int>, int> out;
  auto add = [&](int a, int b) { ++out[{std::min(a, b), std::max(a, b)}]; };
  for (auto [a, b] : d.one_factor) add(a, b);
  for (const Factor& f : d.factors)
    for (const Star& s : f.stars)
      for (Vertex l : s.leaves) add(s.center, l);
  return out;
}

void expect_exact_cover(const Decomposition& d) {
  const auto counts = edge_counts(d);
  EXPECT_EQ(static_cast<int>(counts.size()), d.v * (d.v - 1) / 2);
  for (auto [e, n] : counts) ASSERT_EQ(n, 1) << e.first << "-" << e.second;
}

}  // namespace

TEST(HalfPeriodMatching, PairsXWithXPlusHalf) {
  const auto m = half_period_matching(12);
  ASSERT_EQ(m.size(), 6u);
  EXPECT_EQ(m.front(), (std::pair<Vertex, Vertex>{0, 6}));
  EXPECT_EQ(m.back(), (std::pair<Vertex, Vertex>{5, 11}));
}

TEST(Direct12, SixFactorsOfTwoStars) {
  const Decomposition d = direct_12();
  ASSERT_EQ(d.factors.size(), 6u);
  EXPECT_EQ(d.factors[0].stars[0], (Star{0, {1, 2, 3, 4, 5}}));
  EXPECT_EQ(d.factors[0].stars[1], (Star{6, {7, 8, 9, 10, 11}}));
  EXPECT_EQ(d.factors[5].stars[1], (Star{11, {0, 1, 2, 3, 4}}));
  expect_exact_cover(d);
  EXPECT_TRUE(verify_decomposition(d).valid());
}

TEST(Direct42, BaseBlockAndDecomposition) {
  const BaseBlock b = direct_block(42);
  ASSERT_EQ(b.stars.size(), 7u);
  EXPECT_EQ(b.stars[0], (Star{36, {37, 38, 39, 40, 41}}));
  EXPECT_EQ(b.stars[1], (Star{0, {6, 12, 18, 28, 35}}));
  const Decomposition d = direct_42();
  EXPECT_EQ(d.factors.size(), 24u);
  expect_exact_cover(d);
  EXPECT_TRUE(verify_decomposition(d).valid());
}

TEST(Direct102, BaseBlockAndDecomposition) {
  const BaseBlock b = direct_block(102);
  ASSERT_EQ(b.stars.size(), 17u);
  EXPECT_EQ(b.stars[16], (Star{46, {47, 48, 55, 62, 69}}));
  const Decomposition d = direct_102();
  EXPECT_EQ(d.factors.size(), 60u);
  expect_exact_cover(d);
  EXPECT_TRUE(verify_decomposition(d).valid());
}

TEST(DirectBlock, OnlyFor42And102) {
  try {
    direct_block(72);
    FAIL();
  } catch (const StarfactError& e) {
    EXPECT_EQ(e.kind(), StarfactError::Kind::unsupported_parameter);
  }
}
