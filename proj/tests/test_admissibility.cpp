#include <gtest/gtest.h>

#include "hodgepink/admissibility.hpp"
#include "hodgepink/selftest.hpp"

using namespace hodgepink;

namespace {

RatMatrix diag2(Rat a, Rat b) {
  RatMatrix m(2, 2);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  return m;
}

HodgePinkLattice independent_lattice() {
  LaurentMatrix m(2, 2, Var::t);
  m.at(0, 0) = TruncatedLaurent::monomial(Var::t, -2, 1);
  m.at(1, 0) = TruncatedLaurent::monomial(Var::t, -1, 1);
  m.at(1, 1) = TruncatedLaurent::constant(Var::t, 1);
  return HodgePinkLattice::make({{"psi0", m}}, 2, 0);
}

HodgePinkLattice rank1_lattice(long k) {
  LaurentMatrix m(1, 1, Var::t);
  m.at(0, 0) = TruncatedLaurent::monomial(Var::t, -k, 1);
  return HodgePinkLattice::make({{"psi0", m}}, std::max(k, 0L), std::max(-k, 0L));
}

} // namespace

TEST(TInvariants, CyclotomicPair) {
  RatMatrix f(1, 1);
  f.at(0, 0) = Rat(1, 2);
  PhiNModule m(1, PrimeContext(2), f, RatMatrix(1, 1));
  SlopeData s = t_invariants(m, rank1_lattice(-1)); // q = t p
  EXPECT_EQ(s.t_n, Rat(-1));
  EXPECT_EQ(s.t_h, Rat(-1));
  EXPECT_EQ(s.sigma, Rat(0));

  RatMatrix f2(1, 1);
  f2.at(0, 0) = Rat(2);
  PhiNModule m2(1, PrimeContext(2), f2, RatMatrix(1, 1));
  SlopeData s2 = t_invariants(m2, rank1_lattice(1)); // q = t^{-1} p
  EXPECT_EQ(s2.t_n, Rat(1));
  EXPECT_EQ(s2.t_h, Rat(1));
}

TEST(TInvariants, RankTwo) {
  PhiNModule m(1, PrimeContext(2), diag2(2, 2), RatMatrix(2, 2));
  SlopeData s = t_invariants(m, independent_lattice());
  EXPECT_EQ(s.t_n, Rat(2));
  EXPECT_EQ(s.t_h, Rat(2));
}

TEST(TInvariants, FiltrationForm) {
  PhiNModule m(1, PrimeContext(2), diag2(1, 2), RatMatrix(2, 2));
  KFiltration f = KFiltration::single(RatMatrix::identity(2), {1, 0});
  SlopeData s = t_invariants(m, f);
  EXPECT_EQ(s.t_n, Rat(1));
  EXPECT_EQ(s.t_h, Rat(1));
}

TEST(StableSubspaces, DistinctEigenvalues) {
  PhiNModule m(1, PrimeContext(2), diag2(1, 3), RatMatrix(2, 2));
  std::vector<RatMatrix> subs = stable_subspaces(m);
  ASSERT_EQ(subs.size(), 2u); // span e1 and span e2
  EXPECT_EQ(subs[0].cols(), 1);
  EXPECT_EQ(subs[1].cols(), 1);
}

TEST(StableSubspaces, ChainBlocksOnlyKernelLine) {
  RatMatrix n(2, 2);
  n.at(0, 1) = 1;
  PhiNModule m(1, PrimeContext(2), diag2(1, 2), n);
  std::vector<RatMatrix> subs = stable_subspaces(m);
  ASSERT_EQ(subs.size(), 1u); // span e2 is not N-stable
  RatMatrix e1(2, 1);
  e1.at(0, 0) = 1;
  EXPECT_TRUE(subs[0].spans(e1) && e1.spans(subs[0]));
}

TEST(StableSubspaces, ScalarIsRejected) {
  RatMatrix f(3, 3);
  for (long i = 0; i < 3; ++i) f.at(i, i) = 2;
  PhiNModule m(1, PrimeContext(2), f, RatMatrix(3, 3));
  EXPECT_THROW(stable_subspaces(m), UnsupportedSpectrum);
}

TEST(StableSubspaces, SingleJordanChainKernelFlag) {
  // F = 2 * (I + E12 + E23): one eigenvalue, cyclic unipotent part
  RatMatrix f(3, 3);
  for (long i = 0; i < 3; ++i) f.at(i, i) = 2;
  f.at(0, 1) = 2;
  f.at(1, 2) = 2;
  PhiNModule m(1, PrimeContext(2), f, RatMatrix(3, 3));
  std::vector<RatMatrix> subs = stable_subspaces(m);
  ASSERT_EQ(subs.size(), 2u); // ker(F - 2) and ker(F - 2)^2
  EXPECT_EQ(subs[0].cols(), 1);
  EXPECT_EQ(subs[1].cols(), 2);
}

TEST(InducedSubobject, PaperExample) {
  PhiNModule m(1, PrimeContext(2), diag2(2, 2), RatMatrix(2, 2));
  RatMatrix e1(2, 1);
  e1.at(0, 0) = 1;

  SubObject sub = induced_subobject(m, independent_lattice(), e1);
  SlopeData s = t_invariants(sub.module, sub.lattice);
  EXPECT_EQ(s.t_h, Rat(1)); // hand-solved intersection t^{-1} Q[[t]]

  LaurentMatrix dep(2, 2, Var::t);
  dep.at(0, 0) = TruncatedLaurent::monomial(Var::t, -2, 1) +
                 TruncatedLaurent::monomial(Var::t, -1, 1);
  dep.at(1, 1) = TruncatedLaurent::constant(Var::t, 1);
  HodgePinkLattice qdep = HodgePinkLattice::make({{"psi0", dep}}, 2, 0);
  SubObject sub2 = induced_subobject(m, qdep, e1);
  EXPECT_EQ(t_invariants(sub2.module, sub2.lattice).t_h, Rat(2));

  // S = D leaves everything unchanged
  SubObject full = induced_subobject(m, independent_lattice(), RatMatrix::identity(2));
  EXPECT_EQ(t_invariants(full.module, full.lattice).t_h, Rat(2));
  EXPECT_TRUE(full.module.frobenius_power == m.frobenius_power);
}

TEST(InducedSubobject, RejectsUnstable) {
  RatMatrix n(2, 2);
  n.at(0, 1) = 1;
  PhiNModule m(1, PrimeContext(2), diag2(1, 2), n);
  RatMatrix e2(2, 1);
  e2.at(1, 0) = 1; // N e2 = e1: not stable
  EXPECT_THROW(induced_module(m, e2), NotStable);
}

TEST(WeaklyAdmissible, PaperDichotomy) {
  auto r = selftest::rank2_dichotomy();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(WeaklyAdmissible, Cyclotomic) {
  auto r = selftest::cyclotomic_fixtures();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(WeaklyAdmissible, SlopeMismatchWitnessesFullSpace) {
  PhiNModule m(1, PrimeContext(2), diag2(1, 2), RatMatrix(2, 2));
  KFiltration f = KFiltration::single(RatMatrix::identity(2), {3, 0}); // t_H = 3 != t_N = 1
  WaReport rep = is_weakly_admissible(m, f);
  EXPECT_FALSE(rep.weakly_admissible);
  ASSERT_TRUE(rep.witness.has_value());
  EXPECT_EQ(rep.witness->cols(), 2);
}

TEST(HarderNarasimhan, DestabilizedExample) {
  // F = diag(1, p), flag span(e1) with jumps (1, 0)
  PhiNModule m(1, PrimeContext(2), diag2(1, 2), RatMatrix(2, 2));
  KFiltration f = KFiltration::single(RatMatrix::identity(2), {1, 0});
  HNFiltration hn = harder_narasimhan(m, filtration_to_lattice(f));
  ASSERT_EQ(hn.subquotients.size(), 2u);
  EXPECT_EQ(hn.subquotients[0].sigma, Rat(1));  // sub: t_H = 1, t_N = 0
  EXPECT_EQ(hn.subquotients[1].sigma, Rat(-1)); // quotient: t_H = 0, t_N = 1
  ASSERT_EQ(hn.chain.size(), 1u);
  RatMatrix e1(2, 1);
  e1.at(0, 0) = 1;
  EXPECT_TRUE(hn.chain[0].spans(e1) && e1.spans(hn.chain[0]));
  EXPECT_FALSE(hn.semistable());
}

TEST(HarderNarasimhan, TrivialForWeaklyAdmissible) {
  RatMatrix f(1, 1);
  f.at(0, 0) = Rat(1, 2);
  PhiNModule m(1, PrimeContext(2), f, RatMatrix(1, 1));
  HNFiltration hn = harder_narasimhan(m, rank1_lattice(-1));
  EXPECT_TRUE(hn.semistable());
  ASSERT_EQ(hn.subquotients.size(), 1u);
  EXPECT_EQ(hn.subquotients[0].sigma, Rat(0));
}

TEST(Newton, MembershipExamples) {
  Cocharacter mu = Cocharacter::single({2, 0});

  PhiNModule scalar(1, PrimeContext(2), diag2(2, 2), RatMatrix(2, 2));
  NewtonPoint c = newton_point(scalar); // (-2p, p^2) = (-4, 4)
  EXPECT_EQ(c.coefficients, (std::vector<Rat>{Rat(-4), Rat(4)}));
  EXPECT_TRUE(newton_membership(c, mu));

  NewtonPoint off;
  off.coefficients = {Rat(1), Rat(2)};
  off.valuations = {Valuation::of(0), Valuation::of(1)};
  EXPECT_FALSE(newton_membership(off, mu)); // val(c_2) = 1 != 2

  PhiNModule boundary(1, PrimeContext(2), diag2(1, 4), RatMatrix(2, 2));
  NewtonPoint cb = newton_point(boundary); // (-5, 4): val(c_1) = 0 >= 0
  EXPECT_EQ(cb.coefficients, (std::vector<Rat>{Rat(-5), Rat(4)}));
  EXPECT_TRUE(newton_membership(cb, mu));
}

TEST(Newton, ForwardDirection) {
  auto r = selftest::newton_forward(59);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Newton, ReverseDirectionRank2) {
  auto r = selftest::newton_reverse_rank2();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(WeaklyAdmissible, SectionCompatibility) {
  auto r = selftest::wa_section_compatibility(61);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(WeaklyAdmissible, PreimageInclusion) {
  auto r = selftest::wa_preimage_inclusion(67);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(WeaklyAdmissible, ConverseOfPreimageInclusionFails) {
  // the independent-vector lattice is weakly admissible while its filtration
  // image is not
  PhiNModule m(1, PrimeContext(2), diag2(2, 2), RatMatrix(2, 2));
  HodgePinkLattice q = independent_lattice();
  EXPECT_TRUE(is_weakly_admissible(m, q).weakly_admissible);
  KFiltration fq = lattice_to_filtration(q);
  EXPECT_FALSE(is_weakly_admissible(m, fq).weakly_admissible);
}

TEST(SubobjectBound, LVectorBound) {
  auto r = selftest::subobject_hodge_bound(71);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(WeaklyAdmissible, TwoComponentScalarCase) {
  // e = 2: a line destabilizes only when its Hodge numbers pile up across both
  // components
  PhiNModule m(1, PrimeContext(2), diag2(2, 2), RatMatrix(2, 2));

  LaurentMatrix indep(2, 2, Var::t);
  indep.at(0, 0) = TruncatedLaurent::monomial(Var::t, -2, 1);
  indep.at(1, 0) = TruncatedLaurent::monomial(Var::t, -1, 1);
  indep.at(1, 1) = TruncatedLaurent::constant(Var::t, 1);
  LaurentMatrix dep(2, 2, Var::t);
  dep.at(0, 0) = TruncatedLaurent::monomial(Var::t, -2, 1) +
                 TruncatedLaurent::monomial(Var::t, -1, 1);
  dep.at(1, 1) = TruncatedLaurent::constant(Var::t, 1);

  // independent pair marking the line span(e1 + e2) instead of span(e1)
  LaurentMatrix indep_diag(2, 2, Var::t);
  indep_diag.at(0, 0) = TruncatedLaurent::monomial(Var::t, -2, 1) +
                        TruncatedLaurent::monomial(Var::t, -1, 1);
  indep_diag.at(1, 0) = TruncatedLaurent::monomial(Var::t, -2, 1);
  indep_diag.at(1, 1) = TruncatedLaurent::constant(Var::t, 1);

  // t_N = val(det F) = 2 and t_H = (2 + 2)/2 = 2 in all three cases
  HodgePinkLattice both_dep =
      HodgePinkLattice::make({{"psi0", dep}, {"psi1", dep}}, 2, 0);
  WaReport r1 = is_weakly_admissible(m, both_dep);
  EXPECT_FALSE(r1.weakly_admissible); // t_H(span e1) = (2+2)/2 = 2 > 1
  ASSERT_TRUE(r1.witness.has_value());

  // dep marks e1 with weight 2, indep marks e1 with weight 1: (2+1)/2 > 1
  HodgePinkLattice piled = HodgePinkLattice::make({{"psi0", dep}, {"psi1", indep}}, 2, 0);
  WaReport r2 = is_weakly_admissible(m, piled);
  EXPECT_FALSE(r2.weakly_admissible);

  // the marked lines differ, so no single line accumulates more than 1
  HodgePinkLattice mixed =
      HodgePinkLattice::make({{"psi0", dep}, {"psi1", indep_diag}}, 2, 0);
  EXPECT_TRUE(is_weakly_admissible(m, mixed).weakly_admissible);

  HodgePinkLattice both_indep =
      HodgePinkLattice::make({{"psi0", indep}, {"psi1", indep}}, 2, 0);
  EXPECT_TRUE(is_weakly_admissible(m, both_indep).weakly_admissible);
}

TEST(Jordan, UnramifiedDegreeTwo) {
  // f = 2: chains follow multiplication by p^2
  RatMatrix f(2, 2);
  f.at(0, 0) = 1;
  f.at(1, 1) = 4;
  RatMatrix n(2, 2);
  n.at(0, 1) = 1;
  PhiNModule m(2, PrimeContext(2), f, n);
  EXPECT_TRUE(validate_module(m).valid);
  EXPECT_EQ(jordan_component(m).partition, (std::vector<long>{2}));

  // the same pair with f = 1 is not even a valid module
  PhiNModule wrong(1, PrimeContext(2), f, n);
  EXPECT_FALSE(validate_module(wrong).valid);

  // generic representative roundtrip at f = 2
  PhiNModule g = generic_representative({2, 1}, Rat(1), PrimeContext(2), 2);
  EXPECT_EQ(jordan_component(g).partition, (std::vector<long>{2, 1}));
  SlopeData s = t_invariants(
      g, HodgePinkLattice::make({{"psi0", LaurentMatrix::identity(3)},
                                 {"psi1", LaurentMatrix::identity(3)}},
                                0, 0));
  EXPECT_EQ(s.t_n, Rat(1)); // val(det diag(1, 4, 3)) / f = 2/2
  EXPECT_EQ(s.t_h, Rat(0));
}

TEST(HarderNarasimhan, Properties) {
  auto r = selftest::hn_properties(73);
  EXPECT_TRUE(r.passed) << r.detail;
}
