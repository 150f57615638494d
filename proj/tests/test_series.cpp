#include <gtest/gtest.h>

#include "hodgepink/selftest.hpp"
#include "hodgepink/series.hpp"

using namespace hodgepink;

namespace {

TruncatedLaurent t_monomial(long e, Rat c = Rat(1), long prec = kExactPrec) {
  return TruncatedLaurent::monomial(Var::t, e, c, prec);
}

} // namespace

TEST(Series, TelescopingProduct) {
  // (1 - t) * (1 + t + t^2 + O(t^3)) = 1 + O(t^3)
  TruncatedLaurent a = TruncatedLaurent::constant(Var::t, 1) - t_monomial(1);
  TruncatedLaurent b(Var::t, 3);
  b.set_coeff(0, 1);
  b.set_coeff(1, 1);
  b.set_coeff(2, 1);
  TruncatedLaurent prod = a * b;
  EXPECT_EQ(prod.precision(), 3);
  EXPECT_EQ(prod.coeff(0), 1);
  EXPECT_EQ(prod.coeff(1), 0);
  EXPECT_EQ(prod.coeff(2), 0);
}

TEST(Series, GeometricInverse) {
  TruncatedLaurent a = TruncatedLaurent::constant(Var::t, 1) - t_monomial(1);
  TruncatedLaurent inv = a.invert_unit(3);
  EXPECT_EQ(inv.coeff(0), 1);
  EXPECT_EQ(inv.coeff(1), 1);
  EXPECT_EQ(inv.coeff(2), 1);
  EXPECT_EQ(inv.precision(), 3);
}

TEST(Series, FrobeniusSubstitute) {
  TruncatedLaurent a(Var::u);
  a.set_coeff(1, 1);
  a.set_coeff(2, 1);
  TruncatedLaurent b = a.frobenius_substitute(Int(2));
  EXPECT_EQ(b.coeff(2), 1);
  EXPECT_EQ(b.coeff(4), 1);
  EXPECT_EQ(b.coeff(1), 0);
  // only defined on u
  TruncatedLaurent t_series(Var::t);
  t_series.set_coeff(1, 1);
  EXPECT_THROW(t_series.frobenius_substitute(Int(2)), ShapeMismatch);
}

TEST(Series, LogOneMinus) {
  // s = t, P = 4: -t - t^2/2 - t^3/3
  TruncatedLaurent s = t_monomial(1, Rat(1), 4);
  TruncatedLaurent l = s.log_one_minus();
  EXPECT_EQ(l.coeff(1), Rat(-1));
  EXPECT_EQ(l.coeff(2), Rat(-1, 2));
  EXPECT_EQ(l.coeff(3), Rat(-1, 3));

  // s = t^2, P = 4: -t^2
  TruncatedLaurent s2 = t_monomial(2, Rat(1), 4);
  TruncatedLaurent l2 = s2.log_one_minus();
  EXPECT_EQ(l2.coeff(2), Rat(-1));
  EXPECT_EQ(l2.coeff(3), 0);

  // s = 1 + t: rejected
  TruncatedLaurent bad = TruncatedLaurent::constant(Var::t, 1, 4) + t_monomial(1, Rat(1), 4);
  EXPECT_THROW(bad.log_one_minus(), NonzeroConstantTerm);
}

TEST(Series, NotAUnit) {
  TruncatedLaurent zero = TruncatedLaurent::zero(Var::t, 5);
  EXPECT_THROW(zero.invert_unit(), NotAUnit);
}

TEST(Series, PrecisionPropagation) {
  // multiplying by t^k shifts the window
  TruncatedLaurent a(Var::t, 4);
  a.set_coeff(-1, 1);
  TruncatedLaurent b = a * t_monomial(2);
  EXPECT_EQ(b.precision(), 6);
  EXPECT_EQ(b.coeff(1), 1);
  // finite windows cap the product
  TruncatedLaurent c(Var::t, 2);
  c.set_coeff(0, 1);
  EXPECT_LE((a * c).precision(), 2);
}

TEST(Series, RingLaws) {
  auto r = selftest::series_ring_laws(11);
  EXPECT_TRUE(r.passed) << r.detail;
}
