#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "starfact/construct.hpp"
#include "starfact/verifier.hpp"

using namespace starfact;

namespace {

const Decomposition& valid42() {
  static const Decomposition d = construct(42);
  return d;
}

std::vector<long long> witness(const VerifyReport& r, VerifyCode c) {
  const VerifyIssue* e = r.first(c);
  return e ? e->witness : std::vector<long long>{};
}

}  // namespace

TEST(Admissible, Reasons) {
  EXPECT_EQ(admissible(7).reason, Rejection::v_odd);
  EXPECT_EQ(admissible(40).reason, Rejection::v_not_div_6);
  EXPECT_EQ(admissible(18).reason, Rejection::v_minus_2_not_div_5);
  const auto a = admissible(222);
  EXPECT_TRUE(a.admissible);
  EXPECT_EQ(a.g, 37);
  EXPECT_EQ(a.t, 1);
  EXPECT_EQ(a.m, 1);
  EXPECT_STREQ(to_string(Rejection::v_minus_2_not_div_5), "v-2 not divisible by 5");
}

// A decomposition needs a perfect matching (v even), 5-star factors
// (6 | v) and an integral factor count (v(v-2)/2 edges, v/6 stars of 5 edges
// each per factor). Admissibility is exactly v = 12 (mod 30).
TEST(Admissible, NecessaryConditionsUpTo300) {
  for (int v = 1; v <= 300; ++v) {
    const bool matching = v % 2 == 0;
    const bool stars = v % 6 == 0;
    const bool count = stars && (static_cast<long long>(v) * (v - 2) / 2) % (5 * (v / 6)) == 0;
    ASSERT_EQ(admissible(v).admissible, matching && stars && count) << v;
    ASSERT_EQ(admissible(v).admissible, v % 30 == 12) << v;
    if (admissible(v).admissible) {
      ASSERT_EQ(factor_count(v), (v * (v - 2) / 2) / (5 * v / 6));
    } else {
      ASSERT_THROW(factor_count(v), StarfactError);
    }
  }
}

TEST(Verify, ValidCertificate) {
  const VerifyReport r = verify_decomposition(valid42());
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(r.factor_count, 24);
  EXPECT_EQ(r.edge_total, 42 * 41 / 2);
  for (int d = 1; d < 21; ++d) EXPECT_EQ(r.by_diff[d], 42);
  EXPECT_EQ(r.by_diff[21], 21);
}

TEST(Verify, LeafOutOfRange) {
  Decomposition d = valid42();
  d.factors[3].stars[2].leaves[1] = 42;
  const VerifyReport r = verify_decomposition(d);
  EXPECT_EQ(witness(r, VerifyCode::vertex_out_of_range), (std::vector<long long>{42}));
}

TEST(Verify, LeafMovedInsideFactor) {
  Decomposition d = construct(12);
  ASSERT_EQ(d.factors[0].stars[0], (Star{0, {5, 4, 3, 2, 1}}));
  d.factors[0].stars[0].leaves[0] = 6;
  const VerifyReport r = verify_decomposition(d);
  EXPECT_EQ(witness(r, VerifyCode::factor_vertex_reused), (std::vector<long long>{0, 6}));
  EXPECT_EQ(witness(r, VerifyCode::factor_not_spanning), (std::vector<long long>{0, 5}));
  EXPECT_EQ(witness(r, VerifyCode::edge_uncovered), (std::vector<long long>{0, 5}));
  EXPECT_EQ(witness(r, VerifyCode::edge_multiply_covered), (std::vector<long long>{0, 6, 2}));
  EXPECT_EQ(r.totals.at(VerifyCode::edge_uncovered), 1);
}

TEST(Verify, MatchingDefects) {
  Decomposition d = construct(12);
  d.one_factor.pop_back();
  VerifyReport r = verify_decomposition(d);
  EXPECT_EQ(witness(r, VerifyCode::matching_wrong_size), (std::vector<long long>{5, 6}));
  EXPECT_EQ(witness(r, VerifyCode::matching_not_perfect), (std::vector<long long>{5, 0}));
  EXPECT_EQ(witness(r, VerifyCode::edge_uncovered), (std::vector<long long>{5, 11}));

  d = construct(12);
  d.one_factor[1] = {0, 7};
  r = verify_decomposition(d);
  EXPECT_EQ(witness(r, VerifyCode::matching_not_perfect), (std::vector<long long>{0, 2}));
}

TEST(Verify, StarShapeDefects) {
  Decomposition d = construct(12);
  d.factors[2].stars[1].leaves.pop_back();
  VerifyReport r = verify_decomposition(d);
  EXPECT_EQ(witness(r, VerifyCode::star_wrong_leaf_count), (std::vector<long long>{2, 1, 4}));

  d = construct(12);
  Star& s = d.factors[1].stars[0];
  s.leaves[2] = s.leaves[0];
  r = verify_decomposition(d);
  EXPECT_EQ(witness(r, VerifyCode::star_repeated_vertex),
            (std::vector<long long>{1, 0, s.leaves[0]}));
}

TEST(Verify, FactorCountAndSize) {
  Decomposition d = valid42();
  d.factors.pop_back();
  VerifyReport r = verify_decomposition(d);
  EXPECT_EQ(witness(r, VerifyCode::factor_count), (std::vector<long long>{23, 24}));
  EXPECT_EQ(r.totals.at(VerifyCode::edge_uncovered), 35);

  d = valid42();
  d.factors.push_back(d.factors.front());
  r = verify_decomposition(d);
  EXPECT_EQ(witness(r, VerifyCode::factor_count), (std::vector<long long>{25, 24}));
  EXPECT_EQ(r.totals.at(VerifyCode::edge_multiply_covered), 35);

  d = valid42();
  d.factors[0].stars.pop_back();
  r = verify_decomposition(d);
  EXPECT_EQ(witness(r, VerifyCode::factor_wrong_size), (std::vector<long long>{0, 6, 7}));
}

TEST(Verify, ListingIsCappedButTotalsAreExact) {
  Decomposition d = valid42();
  d.factors.clear();
  const VerifyReport r = verify_decomposition(d);
  EXPECT_EQ(r.totals.at(VerifyCode::edge_uncovered), 42 * 41 / 2 - 21);
  EXPECT_EQ(std::count_if(r.errors.begin(), r.errors.end(),
                          [](const VerifyIssue& e) { return e.code == VerifyCode::edge_uncovered; }),
            VerifyReport::kMaxListed);
}

TEST(Verify, BadOrders) {
  Decomposition d;
  d.v = 30000;
  EXPECT_TRUE(verify_decomposition(d).has(VerifyCode::bad_order));
  d.v = 18;
  for (Vertex u = 0; u < 9; ++u) d.one_factor.emplace_back(u, u + 9);
  EXPECT_TRUE(verify_decomposition(d).has(VerifyCode::bad_order));
}

// Relabelling a valid certificate by any permutation keeps it valid.
TEST(VerifyProperty, RelabellingPreservesValidity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vertex> p(42);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    Decomposition d = valid42();
    for (auto& [a, b] : d.one_factor) a = p[a], b = p[b];
    for (Factor& f : d.factors)
      for (Star& s : f.stars) {
        s.center = p[s.center];
        for (Vertex& l : s.leaves) l = p[l];
      }
    ASSERT_TRUE(verify_decomposition(d).valid());
  }
}

// Any single change of one endpoint breaks a valid certificate, and the
// report accounts for it with at least one uncovered edge.
TEST(VerifyProperty, RandomSingleMutationsAreCaught) {
  std::mt19937 rng(5);
  const Decomposition& base = valid42();
  for (int trial = 0; trial < 300; ++trial) {
    Decomposition d = base;
    const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
    const int fi = std::uniform_int_distribution<int>(0, 23)(rng);
    const int si = std::uniform_int_distribution<int>(0, 6)(rng);
    Star& s = d.factors[fi].stars[si];
    const Vertex nv = std::uniform_int_distribution<int>(0, 41)(rng);
    if (kind == 0) {
      const int li = std::uniform_int_distribution<int>(0, 4)(rng);
      if (s.leaves[li] == nv) continue;
      s.leaves[li] = nv;
    } else if (kind == 1) {
      if (s.center == nv) continue;
      s.center = nv;
    } else {
      const int mi = std::uniform_int_distribution<int>(0, 20)(rng);
      if (d.one_factor[mi].second == nv) continue;
      d.one_factor[mi].second = nv;
    }
    const VerifyReport r = verify_decomposition(d);
    ASSERT_FALSE(r.valid()) << "trial " << trial;
    ASSERT_TRUE(r.has(VerifyCode::edge_uncovered) || r.has(VerifyCode::star_repeated_vertex) ||
                r.has(VerifyCode::matching_not_perfect))
        << "trial " << trial;
  }
}
