#include <gtest/gtest.h>

#include <random>

#include "hodgepink/hodge_pink.hpp"
#include "hodgepink/selftest.hpp"

using namespace hodgepink;

namespace {

LaurentMatrix running_example() {
  LaurentMatrix m(2, 2, Var::t);
  m.at(0, 0) = TruncatedLaurent::monomial(Var::t, -2, 1);
  m.at(1, 0) = TruncatedLaurent::monomial(Var::t, -1, 1);
  m.at(1, 1) = TruncatedLaurent::constant(Var::t, 1);
  return m;
}

} // namespace

TEST(LatticeValidation, WindowAndRank) {
  HodgePinkLattice q = HodgePinkLattice::make({{"psi0", running_example()}}, 2, 0);
  EXPECT_TRUE(validate_lattice(q).valid);

  // rank deficient component
  LaurentMatrix bad(2, 2, Var::t);
  bad.at(0, 0) = TruncatedLaurent::constant(Var::t, 1);
  bad.at(1, 0) = TruncatedLaurent::constant(Var::t, 1);
  HodgePinkLattice qbad = HodgePinkLattice::make({{"psi0", bad}}, 0, 0);
  EXPECT_EQ(validate_lattice(qbad).failure, "RankDeficient");

  // too-small declared window
  HodgePinkLattice qwin = HodgePinkLattice::make({{"psi0", running_example()}}, 0, 0);
  EXPECT_EQ(validate_lattice(qwin).failure, "WindowViolated");
  EXPECT_THROW(require_valid(qwin), WindowViolated);
}

TEST(HodgePolygon, Examples) {
  HodgePinkLattice q = HodgePinkLattice::make({{"psi0", running_example()}}, 2, 0);
  EXPECT_EQ(hodge_polygon(q).weight("psi0"), (std::vector<long>{2, 0}));

  HodgePinkLattice identity_lattice =
      HodgePinkLattice::make({{"psi0", LaurentMatrix::identity(3)}}, 0, 0);
  EXPECT_EQ(hodge_polygon(identity_lattice).weight("psi0"), (std::vector<long>{0, 0, 0}));

  LaurentMatrix rank1(1, 1, Var::t);
  rank1.at(0, 0) = TruncatedLaurent::monomial(Var::t, -1, 1);
  HodgePinkLattice qd = HodgePinkLattice::make({{"psi0", rank1}}, 1, 0);
  EXPECT_EQ(hodge_polygon(qd).weight("psi0"), (std::vector<long>{1}));
}

TEST(Bounded, Examples) {
  HodgePinkLattice q = HodgePinkLattice::make({{"psi0", running_example()}}, 2, 0);
  Cocharacter mu20 = Cocharacter::single({2, 0});
  Cocharacter mu11 = Cocharacter::single({1, 1});
  Cocharacter mu3m1 = Cocharacter::single({3, -1});

  EXPECT_TRUE(bounded_by(q, mu20, BoundMethod::primal));
  EXPECT_TRUE(bounded_by(q, mu20, BoundMethod::dual));
  EXPECT_FALSE(bounded_by(q, mu11, BoundMethod::primal));
  EXPECT_FALSE(bounded_by(q, mu11, BoundMethod::dual));
  EXPECT_TRUE(bounded_by(q, mu3m1, BoundMethod::primal));
  EXPECT_TRUE(bounded_by(q, mu3m1, BoundMethod::dual));
}

TEST(FiltrationToLattice, Examples) {
  // d = 1, jump (1): t^{-1} p
  KFiltration f1 = KFiltration::single(RatMatrix::identity(1), {1});
  HodgePinkLattice q1 = filtration_to_lattice(f1);
  EXPECT_EQ(q1.components[0].second.at(0, 0).order(), -1);

  // d = 1, jump (-1): t p
  KFiltration f2 = KFiltration::single(RatMatrix::identity(1), {-1});
  EXPECT_EQ(filtration_to_lattice(f2).components[0].second.at(0, 0).order(), 1);

  // d = 2, F^1 = F^2 = span e1, jumps (2, 0)
  KFiltration f3 = KFiltration::single(RatMatrix::identity(2), {2, 0});
  LaurentMatrix expected(2, 2, Var::t);
  expected.at(0, 0) = TruncatedLaurent::monomial(Var::t, -2, 1);
  expected.at(1, 1) = TruncatedLaurent::constant(Var::t, 1);
  EXPECT_TRUE(same_lattice(filtration_to_lattice(f3).components[0].second, expected));
}

TEST(LatticeToFiltration, RunningExample) {
  HodgePinkLattice q = HodgePinkLattice::make({{"psi0", running_example()}}, 2, 0);
  KFiltration f = lattice_to_filtration(q);
  EXPECT_EQ(f.components[0].jumps, (std::vector<long>{2, 0}));
  // the flag at levels 1 and 2 is span(e1)
  RatMatrix e1(2, 1);
  e1.at(0, 0) = 1;
  RatMatrix top_col(2, 1);
  top_col.at(0, 0) = f.components[0].basis.at(0, 0);
  top_col.at(1, 0) = f.components[0].basis.at(1, 0);
  EXPECT_TRUE(e1.spans(top_col) && top_col.spans(e1));
}

TEST(LatticeToFiltration, RankOne) {
  LaurentMatrix b(1, 1, Var::t);
  b.at(0, 0) = TruncatedLaurent::monomial(Var::t, -1, 1);
  HodgePinkLattice q = HodgePinkLattice::make({{"psi0", b}}, 1, 0);
  EXPECT_EQ(lattice_to_filtration(q).components[0].jumps, (std::vector<long>{1}));
}

namespace {

// independent oracle for the flag dimensions: dim F^i is computed from the
// coefficient constraints on t^i Q g lying in p, projected to p/tp. No Smith
// machinery is involved.
long flag_dim_oracle(const LaurentMatrix& q, long level) {
  long d = q.rows();
  long lo = q.min_entry_order();
  long hi = q.max_entry_degree();
  long t_max = std::max<long>(-level - lo, 0) + (hi - lo) + 2; // g degrees 0..t_max
  long unknowns = d * (t_max + 1);

  auto coeff_of = [&](long row, long col, long gdeg, long exponent) {
    // coefficient of t^exponent in t^level * g_col t^gdeg * Q(row, col)
    return q.at(row, col).coeff(exponent - level - gdeg);
  };

  // membership constraints: exponents below zero vanish
  std::vector<std::vector<Rat>> rows;
  for (long e = level + lo; e < 0; ++e)
    for (long r = 0; r < d; ++r) {
      std::vector<Rat> row(unknowns, Rat(0));
      bool nz = false;
      for (long c = 0; c < d; ++c)
        for (long k = 0; k <= t_max; ++k) {
          row[c * (t_max + 1) + k] = coeff_of(r, c, k, e);
          if (row[c * (t_max + 1) + k] != 0) nz = true;
        }
      if (nz) rows.push_back(std::move(row));
    }

  // value map: the constant coefficients
  std::vector<std::vector<Rat>> value(d, std::vector<Rat>(unknowns, Rat(0)));
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c)
      for (long k = 0; k <= t_max; ++k) value[r][c * (t_max + 1) + k] = coeff_of(r, c, k, 0);

  RatMatrix constraints(static_cast<long>(rows.size()), unknowns);
  for (size_t i = 0; i < rows.size(); ++i)
    for (long j = 0; j < unknowns; ++j) constraints.at(i, j) = rows[i][j];
  RatMatrix stacked(static_cast<long>(rows.size()) + d, unknowns);
  for (size_t i = 0; i < rows.size(); ++i)
    for (long j = 0; j < unknowns; ++j) stacked.at(i, j) = rows[i][j];
  for (long r = 0; r < d; ++r)
    for (long j = 0; j < unknowns; ++j) stacked.at(rows.size() + r, j) = value[r][j];

  // dim of the image of ker(constraints) under the value map
  long k_dim = unknowns - constraints.rank();
  long both = unknowns - stacked.rank();
  return k_dim - both;
}

} // namespace

TEST(LatticeToFiltration, CoefficientConstraintOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    long d = 1 + static_cast<long>(rng() % 3);
    LaurentMatrix basis(d, d, Var::t);
    // random exact lattice: constant invertible times diagonal powers times a
    // unipotent polynomial factor
    RatMatrix c(d, d);
    do {
      for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) c.at(i, j) = static_cast<long>(rng() % 5) - 2;
    } while (c.det() == 0);
    LaurentMatrix v = LaurentMatrix::identity(d);
    std::vector<long> a(d);
    for (long i = 0; i < d; ++i) a[i] = static_cast<long>(rng() % 5) - 2;
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j)
        if (i != j && rng() % 2)
          v.at(i, j) = v.at(i, j) + TruncatedLaurent::monomial(Var::t, 1 + (rng() % 2), 1);
    basis = LaurentMatrix::from_rat(c) * LaurentMatrix::diag_powers(a) * v;

    long m = 0, n = 0;
    for (long x : a) {
      m = std::max(m, -x);
      n = std::max(n, x);
    }
    HodgePinkLattice q = HodgePinkLattice::make({{"psi0", basis}}, m + d, n + d);
    KFiltration fil = lattice_to_filtration(q);
    const auto& jumps = fil.components[0].jumps;
    for (long level = -(m + d); level <= n + d + 1; ++level) {
      long expected = 0;
      for (long j : jumps)
        if (j >= level) ++expected;
      EXPECT_EQ(flag_dim_oracle(basis, level), expected)
          << "level " << level << " trial " << trial;
    }
  }
}

TEST(Roundtrip, RandomFiltrations) {
  auto r = selftest::filtration_roundtrip(41);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Roundtrip, MinusculeBothWays) {
  auto r = selftest::minuscule_roundtrip(43);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Bounded, DualityAndSemicontinuity) {
  auto r = selftest::boundedness_duality(47);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Bounded, Nesting) {
  auto r = selftest::boundedness_nesting(53);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Filtration, JumpValidation) {
  EXPECT_THROW(KFiltration::single(RatMatrix::identity(2), {0, 1}), InputError);
  RatMatrix singular(2, 2);
  singular.at(0, 0) = 1;
  singular.at(0, 1) = 1;
  EXPECT_THROW(KFiltration::single(singular, {1, 0}), RankDeficient);
}
