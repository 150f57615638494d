#include "hodgepink/smith.hpp"

#include <algorithm>

namespace hodgepink {

namespace {

// Rank of an exact Laurent-polynomial matrix via enough rational specializations:
// a nonzero k-minor has at most (window width) roots, so testing width+1 distinct
// nonzero points decides the generic rank.
long exact_rank(const LaurentMatrix& m) {
  long k = std::min(m.rows(), m.cols());
  if (k == 0) return 0;
  long width = m.max_entry_degree() - m.min_entry_order();
  long points = k * std::max<long>(width, 0) + 1;
  long best = 0;
  for (long i = 1; i <= points; ++i) {
    best = std::max(best, m.eval(Rat(i)).rank());
    if (best == k) return best;
  }
  return best;
}

struct PivotPos {
  long row = -1, col = -1, ord = 0;
  bool found = false;
};

PivotPos find_pivot(const LaurentMatrix& m, long from, bool& indeterminate) {
  PivotPos best;
  indeterminate = false;
  for (long i = from; i < m.rows(); ++i)
    for (long j = from; j < m.cols(); ++j) {
      const auto& s = m.at(i, j);
      if (s.has_certified_leading_term()) {
        long o = s.order();
        if (!best.found || o < best.ord) best = {i, j, o, true};
      } else if (!s.is_exactly_zero()) {
        indeterminate = true;
      }
    }
  return best;
}

void swap_rows(LaurentMatrix& m, long a, long b) {
  if (a == b) return;
  for (long j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(LaurentMatrix& m, long a, long b) {
  if (a == b) return;
  for (long i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

SmithForm smith_on_window(LaurentMatrix w, long stop_after = -1) {
  long r = w.rows(), c = w.cols();
  Var v = w.var();

  // mixed windows: cap exact entries at the widest finite window so pivot
  // inversions stay representable
  long cap = -1;
  bool any_finite = false;
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j)
      if (!w.at(i, j).exact()) {
        any_finite = true;
        cap = std::max(cap, w.at(i, j).precision());
      }
  if (any_finite) w = w.truncated(cap);
  LaurentMatrix left = LaurentMatrix::identity(r, v);
  LaurentMatrix right = LaurentMatrix::identity(c, v);
  SmithForm out;

  long steps = std::min(r, c);
  if (stop_after >= 0) steps = std::min(steps, stop_after);
  for (long k = 0; k < steps; ++k) {
    bool indeterminate = false;
    PivotPos piv = find_pivot(w, k, indeterminate);
    if (!piv.found) {
      if (indeterminate)
        throw InsufficientPrecision("no certified pivot in the remaining block");
      break; // remaining block exactly zero
    }
    // deterministic tie-break on (row, col) is given by the scan order
    swap_rows(w, k, piv.row);
    swap_rows(left, k, piv.row);
    swap_cols(w, k, piv.col);
    swap_cols(right, k, piv.col);

    long a = piv.ord;
    // normalize the pivot row so the pivot becomes exactly t^a
    TruncatedLaurent unit_inv = w.at(k, k).shifted(-a).invert_unit();
    for (long j = 0; j < c; ++j) w.at(k, j) = w.at(k, j) * unit_inv;
    for (long j = 0; j < r; ++j) left.at(k, j) = left.at(k, j) * unit_inv;

    for (long i = k + 1; i < r; ++i) {
      const auto& e = w.at(i, k);
      if (e.is_zero_within_window()) continue;
      TruncatedLaurent f = e.shifted(-a); // e / t^a is in Q[[t]]
      for (long j = 0; j < c; ++j) w.at(i, j) = w.at(i, j) - f * w.at(k, j);
      for (long j = 0; j < r; ++j) left.at(i, j) = left.at(i, j) - f * left.at(k, j);
    }
    for (long j = k + 1; j < c; ++j) {
      const auto& e = w.at(k, j);
      if (e.is_zero_within_window()) continue;
      TruncatedLaurent f = e.shifted(-a);
      for (long i = 0; i < r; ++i) w.at(i, j) = w.at(i, j) - w.at(i, k) * f;
      for (long i = 0; i < c; ++i) right.at(i, j) = right.at(i, j) - right.at(i, k) * f;
    }
    out.exponents.push_back(a);
  }
  out.rank = static_cast<long>(out.exponents.size());
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

} // namespace

long default_working_precision(const LaurentMatrix& m) {
  long k = std::min(m.rows(), m.cols());
  long lo = m.min_entry_order();
  long hi = m.max_entry_degree();
  // largest possible elementary divisor plus a guard of the matrix dimension
  return k * std::max<long>(hi, 0) - (k - 1) * std::min<long>(lo, 0) + k + 8;
}

long laurent_rank(const LaurentMatrix& m) {
  if (m.all_entries_exact()) return exact_rank(m);
  return smith_form(m).rank;
}

SmithForm smith_form(const LaurentMatrix& m) {
  if (!m.all_entries_exact()) return smith_on_window(m);
  long want_rank = exact_rank(m);
  long work = default_working_precision(m);
  for (int attempt = 0; attempt < 6; ++attempt) {
    try {
      SmithForm f = smith_on_window(m.truncated(work), want_rank);
      if (f.rank == want_rank) return f;
    } catch (const InsufficientPrecision&) {
      // exact input: enlarge the window and retry
    }
    work = 2 * work + 16;
  }
  throw InsufficientPrecision("smith form did not stabilize on an exact input");
}

std::vector<long> smith_exponents(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("elementary divisors need a square matrix");
  SmithForm f = smith_form(m);
  if (f.rank < m.rows()) throw RankDeficient("matrix has rank " + std::to_string(f.rank));
  return f.exponents;
}

LaurentMatrix laurent_inverse(const LaurentMatrix& m, long target_prec) {
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse of a non-square matrix");
  LaurentMatrix work = m;
  if (m.all_entries_exact()) {
    long w = default_working_precision(m) + std::max<long>(target_prec, 0);
    work = m.truncated(w);
  }
  SmithForm f = smith_on_window(work);
  if (f.rank < m.rows()) throw RankDeficient("matrix is singular within the window");
  std::vector<long> neg(f.exponents.size());
  for (size_t i = 0; i < neg.size(); ++i) neg[i] = -f.exponents[i];
  return (f.right * LaurentMatrix::diag_powers(neg, m.var()) * f.left).truncated(target_prec);
}

LaurentMatrix laurent_kernel(const LaurentMatrix& m) {
  SmithForm f = smith_form(m);
  std::vector<long> idx;
  for (long j = f.rank; j < m.cols(); ++j) idx.push_back(j);
  return f.right.cols_subset(idx);
}

bool same_lattice(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw ShapeMismatch("lattice comparison needs equal square shapes");
  long wa = std::max<long>(a.max_entry_degree() - a.min_entry_order(), 0);
  long wb = std::max<long>(b.max_entry_degree() - b.min_entry_order(), 0);
  long guard = a.rows() * (wa + wb) + a.rows() + 8;
  LaurentMatrix x = laurent_inverse(b, guard) * a;
  if (!x.all_orders_at_least(0)) return false;
  LaurentMatrix y = laurent_inverse(a, guard) * b;
  return y.all_orders_at_least(0);
}

LaurentMatrix lattice_intersection(const LaurentMatrix& q, const RatMatrix& s) {
  if (q.rows() != s.rows()) throw ShapeMismatch("subspace dimension mismatch");
  long d = q.rows(), dp = s.cols();
  if (s.rank() != dp) throw RankDeficient("subspace basis has dependent columns");
  RatMatrix ext = s.completed_to_basis();
  LaurentMatrix coords = LaurentMatrix::from_rat(ext.inverse(), q.var()) * q;

  // bottom rows express the obstruction to lying in S; kernel = intersection
  LaurentMatrix bottom(d - dp, d, q.var());
  for (long i = 0; i < d - dp; ++i)
    for (long j = 0; j < d; ++j) bottom.at(i, j) = coords.at(dp + i, j);
  LaurentMatrix ker = d == dp ? LaurentMatrix::identity(d, q.var()) : laurent_kernel(bottom);
  if (ker.cols() != dp)
    throw InsufficientPrecision("intersection rank not certified within the window");

  LaurentMatrix inside = coords * ker;
  LaurentMatrix result(dp, dp, q.var());
  for (long i = 0; i < dp; ++i)
    for (long j = 0; j < dp; ++j) result.at(i, j) = inside.at(i, j);
  return result;
}

LaurentMatrix exterior_lattice(const LaurentMatrix& q, long j) {
  if (q.rows() != q.cols()) throw ShapeMismatch("exterior power of a non-square basis");
  if (j < 1 || j > q.rows()) throw InputError("exterior power index out of range");
  return q.compound(j);
}

} // namespace hodgepink
