#include <gtest/gtest.h>

#include "hodgepink/selftest.hpp"
#include "hodgepink/unit_disc.hpp"

using namespace hodgepink;

namespace {

USeriesContext ctx_p2(long prec = 40) {
  EisensteinPoly e;
  e.lower = {Rat(-2)}; // E(u) = u - 2
  return USeriesContext(PrimeContext(2), e, prec);
}

} // namespace

TEST(Eisenstein, Validation) {
  PrimeContext p2(2);
  EisensteinPoly good;
  good.lower = {Rat(-2)};
  EXPECT_NO_THROW(good.validate(p2));

  EisensteinPoly bad_const;
  bad_const.lower = {Rat(4)}; // val 2, not 1
  EXPECT_THROW(bad_const.validate(p2), InputError);

  EisensteinPoly bad_mid;
  bad_mid.lower = {Rat(2), Rat(1)}; // a_1 has val 0
  EXPECT_THROW(bad_mid.validate(p2), InputError);
}

TEST(Lambda, FrozenExpansion) {
  // p = 2, E = u - 2, P = 4: (1 - u/2)(1 - u^2/2) = 1 - u/2 - u^2/2 + u^3/4
  USeriesContext c = ctx_p2(4);
  TruncatedLaurent lam = lambda_series(c);
  EXPECT_EQ(lam.coeff(0), Rat(1));
  EXPECT_EQ(lam.coeff(1), Rat(-1, 2));
  EXPECT_EQ(lam.coeff(2), Rat(-1, 2));
  EXPECT_EQ(lam.coeff(3), Rat(1, 4));
}

TEST(Lambda, FunctionalEquation) {
  auto r = selftest::lambda_functional_equation();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Nnabla, CommutesOnSimpleInputs) {
  USeriesContext c = ctx_p2(40);
  TruncatedLaurent u_var = TruncatedLaurent::monomial(Var::u, 1, 1);
  EXPECT_TRUE(nnabla_commutator(u_var, c).is_zero_within_window());
  TruncatedLaurent one = TruncatedLaurent::constant(Var::u, 1);
  EXPECT_TRUE(nnabla_commutator(one, c).is_zero_within_window());
}

TEST(Nnabla, RandomPolynomials) {
  auto r = selftest::nnabla_commutator_samples(79);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Eta, Examples) {
  // N = 0: identity
  LaurentMatrix id = eta_matrix(RatMatrix(2, 2), 5, EtaDirection::forward);
  EXPECT_TRUE(id.agrees_with(LaurentMatrix::identity(2)));

  // d = 2, N = E12, P = 3: I + E12 (t + t^2/2)
  RatMatrix n(2, 2);
  n.at(0, 1) = 1;
  LaurentMatrix m = eta_matrix(n, 3, EtaDirection::forward);
  EXPECT_EQ(m.at(0, 1).coeff(1), Rat(1));
  EXPECT_EQ(m.at(0, 1).coeff(2), Rat(1, 2));
  EXPECT_EQ(m.at(0, 0).coeff(0), Rat(1));
  EXPECT_EQ(m.at(1, 0).coeff(0), Rat(0));

  RatMatrix not_nilp = RatMatrix::identity(2);
  EXPECT_THROW(eta_matrix(not_nilp, 3, EtaDirection::forward), NotNilpotent);
}

TEST(Eta, InverseAndUnipotence) {
  auto r1 = selftest::eta_inverse_identity(83);
  EXPECT_TRUE(r1.passed) << r1.detail;
  auto r2 = selftest::eta_unipotence(89);
  EXPECT_TRUE(r2.passed) << r2.detail;
}

TEST(TwistFactor, Examples) {
  USeriesContext c = ctx_p2(3);
  // n = 1, E = u - p: p(u - p)/E(0) = p - u
  TruncatedLaurent t1 = rank1_twist_factor(1, c);
  EXPECT_EQ(t1.coeff(0), Rat(2));
  EXPECT_EQ(t1.coeff(1), Rat(-1));

  EXPECT_EQ(rank1_twist_factor(0, c).coeff(0), Rat(1));

  // n = -1: (2 - u)^{-1} = 1/2 + u/4 + u^2/8
  TruncatedLaurent tm1 = rank1_twist_factor(-1, c);
  EXPECT_EQ(tm1.coeff(0), Rat(1, 2));
  EXPECT_EQ(tm1.coeff(1), Rat(1, 4));
  EXPECT_EQ(tm1.coeff(2), Rat(1, 8));
}

TEST(ZeroSection, DetectorSuite) {
  auto r = selftest::zero_section_detection(97);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(ZeroSection, BasisInvariance) {
  auto r = selftest::zero_section_basis_invariance(101);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(ZeroSection, ConventionsDifferForNonzeroMonodromy) {
  // module with N != 0 and a flag not stable under N: the two section images
  // differ once the jump spread exceeds one, and each convention detects its
  // own image
  RatMatrix f(2, 2);
  f.at(0, 0) = 1;
  f.at(1, 1) = 2;
  RatMatrix n(2, 2);
  n.at(0, 1) = 1;
  PhiNModule m(1, PrimeContext(2), f, n);
  RatMatrix swapped(2, 2);
  swapped.at(1, 0) = 1; // first column e2 carries the jump
  swapped.at(0, 1) = 1;
  KFiltration fil = KFiltration::single(swapped, {2, 0});

  HodgePinkLattice q_eta = section_image(m, fil, EtaConvention::eta);
  HodgePinkLattice q_id = section_image(m, fil, EtaConvention::id);
  EXPECT_TRUE(is_zero_section(m, q_eta, EtaConvention::eta));
  EXPECT_TRUE(is_zero_section(m, q_id, EtaConvention::id));
  EXPECT_FALSE(same_hp_lattice(q_eta, q_id));
  EXPECT_FALSE(is_zero_section(m, q_id, EtaConvention::eta));

  // within the minuscule window the eta twist cannot move a lattice
  KFiltration small = KFiltration::single(swapped, {1, 0});
  EXPECT_TRUE(same_hp_lattice(section_image(m, small, EtaConvention::eta),
                              section_image(m, small, EtaConvention::id)));
}
