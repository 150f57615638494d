#include "hodgepink/rat_matrix.hpp"

#include <algorithm>

namespace hodgepink {

RatMatrix::RatMatrix(long rows, long cols, std::initializer_list<Rat> entries)
    : r_(rows), c_(cols), e_(entries) {
  if (static_cast<long>(e_.size()) != rows * cols) throw ShapeMismatch("entry count mismatch");
}

RatMatrix RatMatrix::identity(long n) {
  RatMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::column(const std::vector<Rat>& v) {
  RatMatrix m(static_cast<long>(v.size()), 1);
  for (long i = 0; i < m.rows(); ++i) m.at(i, 0) = v[i];
  return m;
}

bool RatMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rat& x) { return x == 0; });
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw ShapeMismatch("matrix addition shapes differ");
  RatMatrix m(r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const { return *this + o * Rat(-1); }

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (c_ != o.r_) throw ShapeMismatch("matrix product shapes differ");
  RatMatrix m(r_, o.c_);
  for (long i = 0; i < r_; ++i)
    for (long k = 0; k < c_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (long j = 0; j < o.c_; ++j)
        if (o.at(k, j) != 0) m.at(i, j) += a * o.at(k, j);
    }
  return m;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
  RatMatrix m(r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix m(c_, r_);
  for (long i = 0; i < r_; ++i)
    for (long j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

RatMatrix RatMatrix::power(long n) const {
  if (r_ != c_) throw ShapeMismatch("power of a non-square matrix");
  RatMatrix acc = identity(r_), base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

namespace {

// Row echelon reduction in place; returns the pivot columns. If `companion`
// is non-null, the same row operations are applied to it.
std::vector<long> row_reduce(RatMatrix& m, RatMatrix* companion = nullptr) {
  std::vector<long> pivots;
  long row = 0;
  for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
    long sel = -1;
    for (long i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    for (long j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    if (companion)
      for (long j = 0; j < companion->cols(); ++j) std::swap(companion->at(sel, j), companion->at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (long j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
    if (companion)
      for (long j = 0; j < companion->cols(); ++j) companion->at(row, j) *= inv;
    for (long i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (long j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
      if (companion)
        for (long j = 0; j < companion->cols(); ++j) companion->at(i, j) -= f * companion->at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

Rat RatMatrix::det() const {
  if (r_ != c_) throw ShapeMismatch("determinant of a non-square matrix");
  RatMatrix m = *this;
  Rat d = 1;
  for (long col = 0; col < c_; ++col) {
    long sel = -1;
    for (long i = col; i < r_; ++i)
      if (m.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) return 0;
    if (sel != col) {
      for (long j = 0; j < c_; ++j) std::swap(m.at(sel, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rat inv = 1 / m.at(col, col);
    for (long i = col + 1; i < r_; ++i) {
      if (m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) * inv;
      for (long j = col; j < c_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

RatMatrix RatMatrix::inverse() const {
  if (r_ != c_) throw ShapeMismatch("inverse of a non-square matrix");
  RatMatrix m = *this, inv = identity(r_);
  auto pivots = row_reduce(m, &inv);
  if (static_cast<long>(pivots.size()) != r_) throw RankDeficient("matrix is singular");
  return inv;
}

long RatMatrix::rank() const {
  RatMatrix m = *this;
  return static_cast<long>(row_reduce(m).size());
}

RatMatrix RatMatrix::column_span_basis() const {
  RatMatrix m = transpose();
  auto pivots = row_reduce(m);
  RatMatrix b(r_, static_cast<long>(pivots.size()));
  for (long k = 0; k < b.cols(); ++k)
    for (long i = 0; i < r_; ++i) b.at(i, k) = m.at(k, i);
  return b;
}

RatMatrix RatMatrix::kernel_basis() const {
  RatMatrix m = *this;
  auto pivots = row_reduce(m);
  std::vector<long> free_cols;
  for (long j = 0; j < c_; ++j)
    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free_cols.push_back(j);
  RatMatrix k(c_, static_cast<long>(free_cols.size()));
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    long fc = free_cols[fi];
    k.at(fc, fi) = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi) k.at(pivots[pi], fi) = -m.at(pi, fc);
  }
  return k;
}

RatMatrix RatMatrix::completed_to_basis() const {
  RatMatrix acc = *this;
  for (long j = 0; j < r_ && acc.cols() < r_; ++j) {
    RatMatrix cand(r_, 1);
    cand.at(j, 0) = 1;
    RatMatrix trial = acc.hconcat(cand);
    if (trial.rank() == trial.cols()) acc = trial;
  }
  if (acc.cols() != r_) throw RankDeficient("input columns are not independent");
  return acc;
}

std::vector<Rat> RatMatrix::charpoly() const {
  if (r_ != c_) throw ShapeMismatch("charpoly of a non-square matrix");
  // Faddeev-LeVerrier: M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A (M_k + c_k I).
  long n = r_;
  std::vector<Rat> c(n);
  RatMatrix m = *this;
  for (long k = 1; k <= n; ++k) {
    Rat tr = 0;
    for (long i = 0; i < n; ++i) tr += m.at(i, i);
    c[k - 1] = -tr / k;
    if (k < n) {
      RatMatrix shift = m;
      for (long i = 0; i < n; ++i) shift.at(i, i) += c[k - 1];
      m = *this * shift;
    }
  }
  return c;
}

RatMatrix RatMatrix::cols_subset(const std::vector<long>& idx) const {
  RatMatrix m(r_, static_cast<long>(idx.size()));
  for (size_t k = 0; k < idx.size(); ++k)
    for (long i = 0; i < r_; ++i) m.at(i, k) = at(i, idx[k]);
  return m;
}

RatMatrix RatMatrix::hconcat(const RatMatrix& o) const {
  if (r_ != o.r_) throw ShapeMismatch("hconcat row mismatch");
  RatMatrix m(r_, c_ + o.c_);
  for (long i = 0; i < r_; ++i) {
    for (long j = 0; j < c_; ++j) m.at(i, j) = at(i, j);
    for (long j = 0; j < o.c_; ++j) m.at(i, c_ + j) = o.at(i, j);
  }
  return m;
}

bool RatMatrix::spans(const RatMatrix& o) const {
  if (r_ != o.r_) throw ShapeMismatch("span test row mismatch");
  return hconcat(o).rank() == rank();
}

std::vector<long> nilpotent_jordan_type(const RatMatrix& n) {
  if (n.rows() != n.cols()) throw ShapeMismatch("jordan type of a non-square matrix");
  long d = n.rows();
  if (!n.power(d).is_zero()) throw NotNilpotent("matrix is not nilpotent");
  // blocks of size >= k: rank(N^{k-1}) - rank(N^k)
  std::vector<long> ranks(d + 2, 0);
  RatMatrix p = RatMatrix::identity(d);
  for (long k = 0; k <= d; ++k) {
    ranks[k] = p.rank();
    p = p * n;
  }
  std::vector<long> type;
  for (long k = 1; k <= d; ++k) {
    long ge_k = ranks[k - 1] - ranks[k];
    long ge_k1 = k < d ? ranks[k] - ranks[k + 1] : 0;
    for (long b = 0; b < ge_k - ge_k1; ++b) type.push_back(k);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

} // namespace hodgepink
