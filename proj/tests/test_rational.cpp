#include "hyperladder/rational.hpp"

#include <gtest/gtest.h>

using namespace hyperladder;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("-5"), Rational(-5));
  EXPECT_EQ(parse_rational("1/2"), make_rational(1, 2));
  EXPECT_EQ(parse_rational(" -10/4 "), make_rational(-5, 2));
  EXPECT_EQ(parse_rational("+3"), Rational(3));
}

TEST(Rational, RejectsMalformedInput) {
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("0.5"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("a/b"), ParseError);
  EXPECT_THROW(parse_rational("1/2/3"), ParseError);
}

TEST(Rational, FormatsRoundTrip) {
  for (const char* s : {"0", "-5", "7/3", "-35/4", "123456789012345678901234567890/11"}) {
    EXPECT_EQ(to_string(parse_rational(s)), s);
  }
}

TEST(Rational, FloorCeilAndIntegrality) {
  EXPECT_EQ(floor_int(make_rational(-5, 2)), -3);
  EXPECT_EQ(ceil_int(make_rational(-5, 2)), -2);
  EXPECT_EQ(floor_int(Rational(4)), 4);
  EXPECT_TRUE(is_integer(Rational(-3)));
  EXPECT_FALSE(is_integer(make_rational(1, 3)));
}

TEST(Rational, DoubleConversionIsExact) {
  EXPECT_DOUBLE_EQ(to_double(make_rational(-35, 4)), -8.75);
  const Rational tenth(0.1);
  EXPECT_EQ(to_double(tenth), 0.1);
  EXPECT_NE(tenth, make_rational(1, 10));
}
