#pragma once

#include <vector>

#include "hodgepink/rat_matrix.hpp"
#include "hodgepink/series.hpp"

namespace hodgepink {

// Matrix over the Laurent series ring in one variable, entries truncated.
class LaurentMatrix {
public:
  LaurentMatrix() = default;
  LaurentMatrix(long rows, long cols, Var v = Var::t)
      : r_(rows), c_(cols), var_(v), e_(rows * cols, TruncatedLaurent::zero(v)) {}

  static LaurentMatrix identity(long n, Var v = Var::t);
  static LaurentMatrix from_rat(const RatMatrix& m, Var v = Var::t);
  static LaurentMatrix diag_powers(const std::vector<long>& exps, Var v = Var::t);

  long rows() const { return r_; }
  long cols() const { return c_; }
  Var var() const { return var_; }
  TruncatedLaurent& at(long i, long j) { return e_[i * c_ + j]; }
  const TruncatedLaurent& at(long i, long j) const { return e_[i * c_ + j]; }

  LaurentMatrix operator+(const LaurentMatrix& o) const;
  LaurentMatrix operator-(const LaurentMatrix& o) const;
  LaurentMatrix operator*(const LaurentMatrix& o) const;
  LaurentMatrix operator*(const TruncatedLaurent& s) const;
  LaurentMatrix scaled(const Rat& s) const;
  LaurentMatrix shifted(long k) const; // multiply every entry by x^k
  LaurentMatrix truncated(long prec) const;
  LaurentMatrix transpose() const;
  LaurentMatrix cols_subset(const std::vector<long>& idx) const;

  bool all_entries_exact() const;
  long min_entry_order() const;   // over certified leading terms; 0 if none
  long max_entry_degree() const;  // top stored exponent; 0 if none
  long min_entry_precision() const;

  // Constant terms as a rational matrix; requires every entry's constant term
  // to be certified (precision > 0).
  RatMatrix constant_term() const;

  // Certified check that every entry has order >= k. Throws
  // InsufficientPrecision when the window cannot decide.
  bool all_orders_at_least(long k) const;

  // Coefficientwise agreement on the common certified window.
  bool agrees_with(const LaurentMatrix& o) const;
  bool is_zero_within_window() const;

  // Determinant as a series (Laplace expansion; desk-scale sizes).
  TruncatedLaurent det() const;
  TruncatedLaurent minor_det(const std::vector<long>& rows, const std::vector<long>& cols) const;

  // Matrix of j x j minors in lexicographic subset order.
  LaurentMatrix compound(long j) const;

  // Specialize an exact z-family at a nonzero rational point.
  RatMatrix eval(const Rat& x0) const;

private:
  long r_ = 0, c_ = 0;
  Var var_ = Var::t;
  std::vector<TruncatedLaurent> e_;
};

std::vector<std::vector<long>> subsets_of_size(long n, long k);

} // namespace hodgepink
