#include <gtest/gtest.h>

#include "starfact/construct.hpp"
#include "starfact/serialize.hpp"

using namespace starfact;

TEST(Json, KeyOrderAndShape) {
  const std::string s = to_json(construct(12));
  EXPECT_EQ(s.rfind("{\"v\":12,\"one_factor\":[[0,6],", 0), 0u);
  EXPECT_NE(s.find("\"factors\":[[{\"center\":0,\"leaves\":[5,4,3,2,1]}"), std::string::npos);
  EXPECT_EQ(s.back(), '\n');
}

TEST(Json, RoundTrip) {
  for (int v : {12, 42, 72}) {
    const Decomposition d = construct(v);
    EXPECT_EQ(from_json(to_json(d)), d) << v;
    EXPECT_EQ(parse_certificate(to_json(d)), d) << v;
  }
}

TEST(Text, Layout) {
  Decomposition d;
  d.v = 12;
  d.one_factor = {{0, 6}, {1, 7}};
  d.factors = {Factor{{Star{0, {5, 4, 3, 2, 1}}}}, Factor{{Star{1, {2, 3, 4, 5, 0}}}}};
  EXPECT_EQ(to_text(d), "v: 12\nI: 0-6 1-7\n\n0; 5 4 3 2 1\n\n1; 2 3 4 5 0\n");
}

TEST(Text, RoundTrip) {
  for (int v : {12, 42, 72}) {
    const Decomposition d = construct(v);
    EXPECT_EQ(from_text(to_text(d)), d) << v;
    EXPECT_EQ(parse_certificate(to_text(d)), d) << v;
  }
}

TEST(Text, ToleratesCarriageReturnsAndExtraBlankLines) {
  const Decomposition d =
      from_text("v: 12\r\nI: 0-6\r\n\r\n\r\n0; 1 2 3 4 5\r\n6; 7 8 9 10 11\r\n\r\n1; 2\r\n");
  EXPECT_EQ(d.v, 12);
  ASSERT_EQ(d.factors.size(), 2u);
  EXPECT_EQ(d.factors[0].stars.size(), 2u);
  EXPECT_EQ(d.factors[1].stars[0], (Star{1, {2}}));
}

TEST(Parse, Errors) {
  EXPECT_THROW(from_json("{\"v\":12}"), ParseError);
  EXPECT_THROW(from_json("{\"v\":12,"), ParseError);
  EXPECT_THROW(from_json("[1,2]"), ParseError);
  EXPECT_THROW(from_json("{\"v\":1.5,\"one_factor\":[],\"factors\":[]}"), ParseError);
  EXPECT_THROW(from_json("{\"v\":12,\"one_factor\":[[0]],\"factors\":[]}"), ParseError);
  EXPECT_THROW(from_json("{\"v\":12,\"one_factor\":[],\"factors\":[[{\"center\":0}]]}"),
               ParseError);
  EXPECT_THROW(from_text("12\nI: 0-6\n"), ParseError);
  EXPECT_THROW(from_text("v: 12\nJ: 0-6\n"), ParseError);
  EXPECT_THROW(from_text("v: 12\nI: 0+6\n"), ParseError);
  EXPECT_THROW(from_text("v: 12\nI: 0-6x\n"), ParseError);
  EXPECT_THROW(from_text("v: 12\nI: 0-6\n\n0 1 2 3 4 5\n"), ParseError);
  EXPECT_THROW(from_text("v: 12\nI: 0-6\n\n0; 1 two 3\n"), ParseError);
  try {
    from_text("v: 12\nI: 0-6\n\n0; 1 2\n4 5\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos);
  }
}

TEST(Parse, AutodetectsFormat) {
  EXPECT_EQ(parse_certificate("  \n{\"v\":6,\"one_factor\":[],\"factors\":[]}").v, 6);
  EXPECT_EQ(parse_certificate("v: 6\nI:\n").v, 6);
}
