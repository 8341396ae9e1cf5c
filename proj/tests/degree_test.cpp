#include "flab/degree.hpp"

#include <gtest/gtest.h>

#include "flab/io.hpp"

namespace flab {
namespace {

TEST(Rat, NormalizesOnConstruction) {
  EXPECT_EQ(Rat(2, 4), Rat(1, 2));
  EXPECT_EQ(Rat(-3, -6), Rat(1, 2));
  EXPECT_EQ(Rat(0, 7), Rat());
  EXPECT_EQ(Rat(3, -6).num(), -1);
  EXPECT_EQ(Rat(3, -6).den(), 2);
  EXPECT_THROW(Rat(1, 0), DomainError);
}

TEST(Rat, ExactArithmeticAndOrder) {
  EXPECT_EQ(Rat(1, 10) + Rat(2, 10), Rat(3, 10));
  EXPECT_EQ(Rat(1, 3) + Rat(1, 6), Rat(1, 2));
  EXPECT_EQ(Rat::integer(1) - Rat(3, 10), Rat(7, 10));
  EXPECT_LT(Rat(1, 3), Rat(1, 2));
  EXPECT_GT(Rat(2, 3), Rat(1, 2));
  // the classic float trap: 0.1 + 0.2 == 0.3 exactly here
  EXPECT_EQ(Rat(1, 10) + Rat(1, 5), Rat(3, 10));
}

TEST(Degree, RangeCheckedAtConstruction) {
  EXPECT_NO_THROW(Degree(Rat(1, 1)));
  EXPECT_NO_THROW(Degree(Rat(0, 1)));
  EXPECT_THROW(Degree(Rat(11, 10)), DomainError);
  EXPECT_THROW(Degree(Rat(-1, 10)), DomainError);
}

TEST(Degree, LatticeOperationsStayClosed) {
  const Degree x(Rat(3, 10));
  const Degree y(Rat(7, 10));
  EXPECT_EQ(dmin(x, y), x);
  EXPECT_EQ(dmax(x, y), y);
  EXPECT_EQ(complement(x), y);
  EXPECT_EQ(complement(complement(x)), x);
  EXPECT_EQ(tnorm(x, y), x);
  EXPECT_EQ(tnorm(x, Degree::one()), x);
  EXPECT_EQ(tnorm(Degree::zero(), y), Degree::zero());
}

TEST(Degree, ParseExactDecimals) {
  EXPECT_EQ(parse_degree("0.8").value(), Rat(4, 5));
  EXPECT_EQ(parse_degree("1").value(), Rat::integer(1));
  EXPECT_EQ(parse_degree("1.0").value(), Rat::integer(1));
  EXPECT_EQ(parse_degree("0.123456").value(), Rat(123456, 1000000));
  EXPECT_EQ(parse_degree("0").value(), Rat());
}

TEST(Degree, ParseRejectsBadLiterals) {
  EXPECT_THROW(parse_degree("1.2"), DomainError);
  EXPECT_THROW(parse_degree("2"), DomainError);
  EXPECT_THROW(parse_degree("0.1234567"), DomainError);  // 7 digits, not rounded
  EXPECT_THROW(parse_degree("-0.1"), DomainError);
  EXPECT_THROW(parse_degree(".5"), DomainError);
  EXPECT_THROW(parse_degree("0."), DomainError);
  EXPECT_THROW(parse_degree("abc"), DomainError);
  EXPECT_THROW(parse_degree(""), DomainError);
}

TEST(Degree, RenderMinimalDecimals) {
  EXPECT_EQ(render_degree(parse_degree("0.8")), "0.8");
  EXPECT_EQ(render_degree(parse_degree("0.80")), "0.8");
  EXPECT_EQ(render_degree(parse_degree("1.0")), "1");
  EXPECT_EQ(render_degree(parse_degree("0")), "0");
  EXPECT_EQ(render_degree(Degree(Rat(1, 4))), "0.25");
  EXPECT_EQ(render_degree(Degree(Rat(2, 5))), "0.4");
}

TEST(Degree, RenderFallsBackToFractions) {
  EXPECT_EQ(render_rat(Rat(1, 3)), "1/3");
  EXPECT_EQ(render_rat(Rat(17, 10)), "1.7");  // report sums may exceed 1
}

TEST(Degree, ParseRenderRoundTrip) {
  for (const char* text : {"0", "1", "0.5", "0.25", "0.123456", "0.999999"}) {
    const Degree d = parse_degree(text);
    EXPECT_EQ(parse_degree(render_degree(d)), d) << text;
  }
}

}  // namespace
}  // namespace flab
