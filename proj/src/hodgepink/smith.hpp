#pragma once

#include "hodgepink/laurent_matrix.hpp"

namespace hodgepink {

// Smith normal form over Q[[t]]: left * M * right = diag(t^{e_1}, ..., t^{e_r})
// with e_1 <= ... <= e_r and unimodular transforms (unit determinant of order 0).
struct SmithForm {
  std::vector<long> exponents;
  LaurentMatrix left;
  LaurentMatrix right;
  long rank = 0;
};

// Full Smith form. For exact inputs the rank is determined first (so a genuinely
// singular matrix reports RankDeficient through smith_exponents); truncated inputs
// that cannot certify a pivot raise InsufficientPrecision.
SmithForm smith_form(const LaurentMatrix& m);

// Elementary divisor exponents of a full-rank square matrix.
std::vector<long> smith_exponents(const LaurentMatrix& m);

// Rank over the Laurent field, certified. Exact inputs are decided by rational
// specializations; truncated inputs by elimination within the window.
long laurent_rank(const LaurentMatrix& m);

// Inverse of a full-rank square matrix, correct within the certified window.
LaurentMatrix laurent_inverse(const LaurentMatrix& m, long target_prec);

// Basis (columns) of the Q[[t]]-kernel {g : M g = 0}; the result is saturated.
LaurentMatrix laurent_kernel(const LaurentMatrix& m);

// Lattice of a full d x d basis matrix over Q[[t]].
// best-effort default for the working window used by exact-input computations.
long default_working_precision(const LaurentMatrix& m);

// this = other as Q[[t]]-column lattices (certified within windows).
bool same_lattice(const LaurentMatrix& a, const LaurentMatrix& b);

// A basis of the lattice (columns of q) intersected with the constant subspace
// S tensor Q((t)), written in the S-coordinates. S is d x d' rational of rank d'.
LaurentMatrix lattice_intersection(const LaurentMatrix& q, const RatMatrix& s);

// Basis of the j-th exterior power lattice in the standard wedge coordinates.
LaurentMatrix exterior_lattice(const LaurentMatrix& q, long j);

} // namespace hodgepink
