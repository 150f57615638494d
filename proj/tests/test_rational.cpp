#include <gtest/gtest.h>

#include "hodgepink/rational.hpp"
#include "hodgepink/selftest.hpp"

using namespace hodgepink;

TEST(Valuation, Examples) {
  PrimeContext p3(3), p2(2);
  EXPECT_EQ(padic_valuation(Rat(18), p3), Valuation::of(2));   // 18 = 2 * 3^2
  EXPECT_EQ(padic_valuation(Rat(3, 4), p2), Valuation::of(-2)); // denominator power
  EXPECT_TRUE(padic_valuation(Rat(0), p2).infinite);
  EXPECT_TRUE(padic_valuation(Rat(0), p3).infinite);
}

TEST(Valuation, Ordering) {
  Valuation inf = Valuation::inf();
  Valuation one = Valuation::of(1);
  EXPECT_TRUE(one < inf);
  EXPECT_FALSE(inf < one);
  EXPECT_TRUE(inf == Valuation::inf());
  EXPECT_EQ((one + inf).infinite, true);
}

TEST(Valuation, UltrametricLaws) {
  auto r = selftest::valuation_laws(7);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(PrimeContext, RejectsComposites) {
  EXPECT_THROW(PrimeContext(1), InputError);
  EXPECT_THROW(PrimeContext(4), InputError);
  EXPECT_NO_THROW(PrimeContext(97));
}

TEST(RatStrings, CanonicalForm) {
  EXPECT_EQ(rat_to_string(Rat(5)), "5");
  EXPECT_EQ(rat_to_string(Rat(-3, 6)), "-1/2");
  EXPECT_EQ(rat_from_string("2/6"), Rat(1, 3));
  EXPECT_EQ(rat_from_string("-7"), Rat(-7));
  EXPECT_THROW(rat_from_string("1/0"), InputError);
  EXPECT_THROW(rat_from_string("abc"), InputError);
}
