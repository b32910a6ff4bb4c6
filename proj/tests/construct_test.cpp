#include <gtest/gtest.h>

#include <map>

#include "starfact/construct.hpp"

using namespace starfact;

TEST(Plan, Routes) {
  const ConstructPlan a = plan(72);
  EXPECT_EQ(a.route, Route::general);
  EXPECT_EQ(a.g, 12);
  EXPECT_EQ(a.t, 0);
  EXPECT_EQ(a.m, 0);
  EXPECT_EQ(a.part1_factors, 12);
  EXPECT_EQ(a.part2_factors, 30);
  EXPECT_EQ(a.route_name(), "general(t=0, m=0)");

  const ConstructPlan b = plan(192);
  EXPECT_EQ(b.t, 2);
  EXPECT_EQ(b.m, 1);
  EXPECT_EQ(b.part1_factors + b.part2_factors, 114);

  const ConstructPlan c = plan(42);
  EXPECT_EQ(c.route, Route::direct_42);
  EXPECT_EQ(c.part1_factors, 7);
  EXPECT_EQ(c.part2_factors, 17);
  EXPECT_EQ(c.route_name(), "direct-42");

  const ConstructPlan d = plan(12);
  EXPECT_EQ(d.route, Route::direct_12);
  EXPECT_EQ(d.part1_factors, 6);
  EXPECT_EQ(d.part2_factors, 0);
  EXPECT_EQ(plan(102).route, Route::direct_102);
}

TEST(Plan, RejectsInadmissible) {
  for (int v : {40, 41, 18, 0}) {
    try {
      plan(v);
      FAIL() << v;
    } catch (const StarfactError& e) {
      EXPECT_EQ(e.kind(), StarfactError::Kind::inadmissible);
    }
  }
}

TEST(Plan, EveryIsolatedCountIsReached) {
  // Smallest general order for each t = g mod 6.
  const std::map<int, int> first = {{0, 72}, {1, 222}, {2, 192}, {3, 162}, {4, 132}, {5, 282}};
  for (auto [t, v] : first) {
    EXPECT_EQ(plan(v).t, t);
    EXPECT_EQ(plan(v).route, Route::general);
  }
}

TEST(Normalize, CanonicalOrder) {
  Decomposition d;
  d.v = 12;
  d.one_factor = {{7, 1}, {0, 6}};
  d.factors = {Factor{{Star{6, {7, 9, 8, 10, 11}}, Star{0, {1, 2, 3, 4, 5}}}}};
  normalize(d);
  EXPECT_EQ(d.one_factor, (std::vector<std::pair<Vertex, Vertex>>{{0, 6}, {1, 7}}));
  EXPECT_EQ(d.factors[0].stars[0], (Star{0, {5, 4, 3, 2, 1}}));
  EXPECT_EQ(d.factors[0].stars[1], (Star{6, {11, 10, 9, 8, 7}}));
  Decomposition again = d;
  normalize(again);
  EXPECT_EQ(again, d);
}

TEST(Construct, KeepsIntermediates) {
  const Construction c = build_construction(222);
  ASSERT_TRUE(c.base && c.block && c.arrays);
  EXPECT_EQ(c.base->g, 37);
  EXPECT_EQ(c.block->stars.size(), 37u);
  const Construction small = build_construction(12);
  EXPECT_FALSE(small.arrays);
  EXPECT_FALSE(small.base);
  const Construction direct = build_construction(102);
  EXPECT_FALSE(direct.base);
  EXPECT_TRUE(direct.arrays);
}

TEST(ConstructProperty, VerifiedUpTo1002) {
  for (int v = 12; v <= 1002; v += 30) {
    SCOPED_TRACE("v=" + std::to_string(v));
    const Decomposition d = construct(v);
    ASSERT_EQ(d.v, v);
    ASSERT_EQ(static_cast<int>(d.factors.size()), 3 * (v - 2) / 5);
    ASSERT_TRUE(verify_decomposition(d).valid());
  }
}

TEST(Construct, Deterministic) { EXPECT_EQ(construct(252), construct(252)); }
