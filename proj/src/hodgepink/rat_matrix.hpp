#pragma once

#include <initializer_list>
#include <vector>

#include "hodgepink/rational.hpp"

namespace hodgepink {

// Dense exact rational matrix; all operations are exact.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(long rows, long cols) : r_(rows), c_(cols), e_(rows * cols, Rat(0)) {}
  RatMatrix(long rows, long cols, std::initializer_list<Rat> entries);

  static RatMatrix identity(long n);
  static RatMatrix column(const std::vector<Rat>& v);

  long rows() const { return r_; }
  long cols() const { return c_; }
  Rat& at(long i, long j) { return e_[i * c_ + j]; }
  const Rat& at(long i, long j) const { return e_[i * c_ + j]; }

  bool operator==(const RatMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }
  bool is_zero() const;

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator*(const Rat& s) const;
  RatMatrix transpose() const;
  RatMatrix power(long n) const;

  Rat det() const;
  RatMatrix inverse() const; // throws RankDeficient on singular input
  long rank() const;

  // Column-style reduced echelon basis of the column span; columns are a
  // canonical basis of the image (unique for a given subspace).
  RatMatrix column_span_basis() const;

  // Basis of the right kernel, as columns.
  RatMatrix kernel_basis() const;

  // Columns of `this` (full column rank) extended by standard vectors to a basis.
  RatMatrix completed_to_basis() const;

  // Coefficients of X^n + c[0] X^{n-1} + ... + c[n-1] = charpoly(this).
  std::vector<Rat> charpoly() const;

  RatMatrix cols_subset(const std::vector<long>& idx) const;
  RatMatrix hconcat(const RatMatrix& o) const;

  // True iff every column of o lies in the column span of `this`.
  bool spans(const RatMatrix& o) const;

private:
  long r_ = 0, c_ = 0;
  std::vector<Rat> e_;
};

// Jordan partition (block sizes, nonincreasing) of a nilpotent matrix.
std::vector<long> nilpotent_jordan_type(const RatMatrix& n);

} // namespace hodgepink
