#pragma once

#include <limits>
#include <map>
#include <string>

#include "hodgepink/rational.hpp"

namespace hodgepink {

enum class Var : char { t = 't', u = 'u', z = 'z' };

// Exponents at or above kExactPrec are treated as "known exactly" / "order +infinity".
inline constexpr long kExactPrec = std::numeric_limits<long>::max() / 4;

inline long sat_add(long a, long b) {
  if (a >= kExactPrec || b >= kExactPrec) return kExactPrec;
  return a + b;
}

// A Laurent series known modulo O(x^prec). Stored coefficients are exact and live
// strictly below prec; prec == kExactPrec marks an exact Laurent polynomial.
class TruncatedLaurent {
public:
  TruncatedLaurent() = default;
  explicit TruncatedLaurent(Var v, long prec = kExactPrec) : var_(v), prec_(prec) {}

  static TruncatedLaurent zero(Var v, long prec = kExactPrec) { return TruncatedLaurent(v, prec); }
  static TruncatedLaurent constant(Var v, const Rat& c, long prec = kExactPrec);
  static TruncatedLaurent monomial(Var v, long exp, const Rat& c, long prec = kExactPrec);

  Var var() const { return var_; }
  long precision() const { return prec_; }
  bool exact() const { return prec_ >= kExactPrec; }
  const std::map<long, Rat>& coeffs() const { return c_; }

  // True order for nonempty series; prec (the certified lower bound) when no
  // coefficient is stored. An exact empty series has order kExactPrec.
  long order() const { return c_.empty() ? prec_ : c_.begin()->first; }
  bool has_certified_leading_term() const { return !c_.empty(); }
  long top_degree() const { return c_.empty() ? prec_ : c_.rbegin()->first; }

  // Identically zero as far as the window certifies.
  bool is_zero_within_window() const { return c_.empty(); }
  bool is_exactly_zero() const { return c_.empty() && exact(); }

  Rat coeff(long exp) const;
  void set_coeff(long exp, Rat v);

  TruncatedLaurent truncated(long new_prec) const;
  TruncatedLaurent shifted(long k) const; // multiply by x^k

  TruncatedLaurent operator-() const;
  TruncatedLaurent operator+(const TruncatedLaurent& o) const;
  TruncatedLaurent operator-(const TruncatedLaurent& o) const;
  TruncatedLaurent operator*(const TruncatedLaurent& o) const;
  TruncatedLaurent operator*(const Rat& c) const;
  bool operator==(const TruncatedLaurent& o) const { return var_ == o.var_ && prec_ == o.prec_ && c_ == o.c_; }

  // Coefficientwise equality on the common certified window.
  bool agrees_with(const TruncatedLaurent& o) const;

  // x -> x^p. Only meaningful on the unit-disc variable u.
  TruncatedLaurent frobenius_substitute(const Int& p) const;

  TruncatedLaurent derivative() const;

  // Inverse of a series with certified nonzero leading coefficient. target_prec
  // bounds the window when the input is exact; NotAUnit otherwise.
  TruncatedLaurent invert_unit(long target_prec = kExactPrec) const;

  // -sum_{k>=1} s^k / k, for series of strictly positive order.
  TruncatedLaurent log_one_minus(long target_prec = kExactPrec) const;

  TruncatedLaurent pow(long n, long target_prec = kExactPrec) const;

  // Evaluation at a nonzero rational point; requires an exact series.
  Rat eval(const Rat& x0) const;

  std::string str() const;

private:
  void normalize();

  Var var_ = Var::t;
  long prec_ = kExactPrec;
  std::map<long, Rat> c_;
};

TruncatedLaurent laurent_add(const TruncatedLaurent& a, const TruncatedLaurent& b);
TruncatedLaurent laurent_mul(const TruncatedLaurent& a, const TruncatedLaurent& b);

} // namespace hodgepink
