#include "hodgepink/laurent_matrix.hpp"

#include <algorithm>

namespace hodgepink {

LaurentMatrix LaurentMatrix::identity(long n, Var v) {
  LaurentMatrix m(n, n, v);
  for (long i = 0; i < n; ++i) m.at(i, i) = TruncatedLaurent::constant(v, 1);
  return m;
}

LaurentMatrix LaurentMatrix::from_rat(const RatMatrix& rm, Var v) {
  LaurentMatrix m(rm.rows(), rm.cols(), v);
  for (long i = 0; i < rm.rows(); ++i)
    for (long j = 0; j < rm.cols(); ++j)
      if (rm.at(i, j) != 0) m.at(i, j) = TruncatedLaurent::constant(v, rm.at(i, j));
  return m;
}

LaurentMatrix LaurentMatrix::diag_powers(const std::vector<long>& exps, Var v) {
  LaurentMatrix m(static_cast<long>(exps.size()), static_cast<long>(exps.size()), v);
  for (size_t i = 0; i < exps.size(); ++i)
    m.at(i, i) = TruncatedLaurent::monomial(v, exps[i], 1);
  return m;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw ShapeMismatch("matrix addition shapes differ");
  LaurentMatrix m(r_, c_, var_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw ShapeMismatch("matrix subtraction shapes differ");
  LaurentMatrix m(r_, c_, var_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  if (c_ != o.r_) throw ShapeMismatch("matrix product shapes differ");
  LaurentMatrix m(r_, o.c_, var_);
  for (long i = 0; i < r_; ++i)
    for (long j = 0; j < o.c_; ++j) {
      TruncatedLaurent acc = at(i, 0) * o.at(0, j);
      for (long k = 1; k < c_; ++k) acc = acc + at(i, k) * o.at(k, j);
      m.at(i, j) = acc;
    }
  return m;
}

LaurentMatrix LaurentMatrix::operator*(const TruncatedLaurent& s) const {
  LaurentMatrix m(r_, c_, var_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
  return m;
}

LaurentMatrix LaurentMatrix::scaled(const Rat& s) const {
  LaurentMatrix m(r_, c_, var_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
  return m;
}

LaurentMatrix LaurentMatrix::shifted(long k) const {
  LaurentMatrix m(r_, c_, var_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i].shifted(k);
  return m;
}

LaurentMatrix LaurentMatrix::truncated(long prec) const {
  LaurentMatrix m(r_, c_, var_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i].truncated(prec);
  return m;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix m(c_, r_, var_);
  for (long i = 0; i < r_; ++i)
    for (long j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

LaurentMatrix LaurentMatrix::cols_subset(const std::vector<long>& idx) const {
  LaurentMatrix m(r_, static_cast<long>(idx.size()), var_);
  for (size_t k = 0; k < idx.size(); ++k)
    for (long i = 0; i < r_; ++i) m.at(i, k) = at(i, idx[k]);
  return m;
}

bool LaurentMatrix::all_entries_exact() const {
  return std::all_of(e_.begin(), e_.end(), [](const auto& s) { return s.exact(); });
}

long LaurentMatrix::min_entry_order() const {
  long o = 0;
  bool seen = false;
  for (const auto& s : e_)
    if (s.has_certified_leading_term()) {
      o = seen ? std::min(o, s.order()) : s.order();
      seen = true;
    }
  return o;
}

long LaurentMatrix::max_entry_degree() const {
  long d = 0;
  bool seen = false;
  for (const auto& s : e_)
    if (s.has_certified_leading_term()) {
      d = seen ? std::max(d, s.top_degree()) : s.top_degree();
      seen = true;
    }
  return d;
}

long LaurentMatrix::min_entry_precision() const {
  long p = kExactPrec;
  for (const auto& s : e_) p = std::min(p, s.precision());
  return p;
}

RatMatrix LaurentMatrix::constant_term() const {
  RatMatrix m(r_, c_);
  for (long i = 0; i < r_; ++i)
    for (long j = 0; j < c_; ++j) {
      const auto& s = at(i, j);
      if (s.precision() <= 0)
        throw InsufficientPrecision("constant term outside the certified window");
      m.at(i, j) = s.coeff(0);
    }
  return m;
}

bool LaurentMatrix::all_orders_at_least(long k) const {
  for (const auto& s : e_) {
    if (s.has_certified_leading_term()) {
      if (s.order() < k) return false;
      continue;
    }
    // entry is zero within its window; below-k coefficients must be certified
    if (s.precision() < k)
      throw InsufficientPrecision("entry order k not decidable within the window");
  }
  return true;
}

bool LaurentMatrix::agrees_with(const LaurentMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (!e_[i].agrees_with(o.e_[i])) return false;
  return true;
}

bool LaurentMatrix::is_zero_within_window() const {
  return std::all_of(e_.begin(), e_.end(), [](const auto& s) { return s.is_zero_within_window(); });
}

TruncatedLaurent LaurentMatrix::minor_det(const std::vector<long>& rows,
                                          const std::vector<long>& cols) const {
  if (rows.size() != cols.size()) throw ShapeMismatch("minor must be square");
  long k = static_cast<long>(rows.size());
  if (k == 0) return TruncatedLaurent::constant(var_, 1);
  if (k == 1) return at(rows[0], cols[0]);
  TruncatedLaurent acc = TruncatedLaurent::zero(var_);
  std::vector<long> sub_rows(rows.begin() + 1, rows.end());
  for (long j = 0; j < k; ++j) {
    std::vector<long> sub_cols;
    for (long jj = 0; jj < k; ++jj)
      if (jj != j) sub_cols.push_back(cols[jj]);
    TruncatedLaurent term = at(rows[0], cols[j]) * minor_det(sub_rows, sub_cols);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

TruncatedLaurent LaurentMatrix::det() const {
  if (r_ != c_) throw ShapeMismatch("determinant of a non-square matrix");
  std::vector<long> idx(r_);
  for (long i = 0; i < r_; ++i) idx[i] = i;
  return minor_det(idx, idx);
}

std::vector<std::vector<long>> subsets_of_size(long n, long k) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  // lexicographic enumeration
  auto rec = [&](auto&& self, long start) -> void {
    if (static_cast<long>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (long i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

LaurentMatrix LaurentMatrix::compound(long j) const {
  auto row_sets = subsets_of_size(r_, j);
  auto col_sets = subsets_of_size(c_, j);
  LaurentMatrix m(static_cast<long>(row_sets.size()), static_cast<long>(col_sets.size()), var_);
  for (size_t a = 0; a < row_sets.size(); ++a)
    for (size_t b = 0; b < col_sets.size(); ++b) m.at(a, b) = minor_det(row_sets[a], col_sets[b]);
  return m;
}

RatMatrix LaurentMatrix::eval(const Rat& x0) const {
  RatMatrix m(r_, c_);
  for (long i = 0; i < r_; ++i)
    for (long j = 0; j < c_; ++j) m.at(i, j) = at(i, j).eval(x0);
  return m;
}

} // namespace hodgepink
