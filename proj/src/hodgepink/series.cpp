#include "hodgepink/series.hpp"

#include <sstream>

namespace hodgepink {

namespace {

void check_same_var(const TruncatedLaurent& a, const TruncatedLaurent& b) {
  if (a.var() != b.var()) throw ShapeMismatch("series variables differ");
}

} // namespace

TruncatedLaurent TruncatedLaurent::constant(Var v, const Rat& c, long prec) {
  return monomial(v, 0, c, prec);
}

TruncatedLaurent TruncatedLaurent::monomial(Var v, long exp, const Rat& c, long prec) {
  TruncatedLaurent s(v, prec);
  s.set_coeff(exp, c);
  return s;
}

Rat TruncatedLaurent::coeff(long exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rat(0) : it->second;
}

void TruncatedLaurent::set_coeff(long exp, Rat v) {
  if (exp >= prec_) return; // beyond the window: not representable
  if (v == 0)
    c_.erase(exp);
  else
    c_[exp] = std::move(v);
}

void TruncatedLaurent::normalize() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second == 0 || it->first >= prec_)
      it = c_.erase(it);
    else
      ++it;
  }
}

TruncatedLaurent TruncatedLaurent::truncated(long new_prec) const {
  TruncatedLaurent r(var_, std::min(prec_, new_prec));
  for (const auto& [e, v] : c_)
    if (e < r.prec_) r.c_[e] = v;
  return r;
}

TruncatedLaurent TruncatedLaurent::shifted(long k) const {
  TruncatedLaurent r(var_, sat_add(prec_, k));
  for (const auto& [e, v] : c_) r.c_[e + k] = v;
  return r;
}

TruncatedLaurent TruncatedLaurent::operator-() const {
  TruncatedLaurent r(var_, prec_);
  for (const auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

TruncatedLaurent TruncatedLaurent::operator+(const TruncatedLaurent& o) const {
  check_same_var(*this, o);
  TruncatedLaurent r(var_, std::min(prec_, o.prec_));
  for (const auto& [e, v] : c_)
    if (e < r.prec_) r.c_[e] = v;
  for (const auto& [e, v] : o.c_) {
    if (e >= r.prec_) continue;
    auto [it, fresh] = r.c_.try_emplace(e, v);
    if (!fresh) it->second += v;
  }
  r.normalize();
  return r;
}

TruncatedLaurent TruncatedLaurent::operator-(const TruncatedLaurent& o) const { return *this + (-o); }

TruncatedLaurent TruncatedLaurent::operator*(const TruncatedLaurent& o) const {
  check_same_var(*this, o);
  const TruncatedLaurent& a = *this;
  const TruncatedLaurent& b = o;
  if (a.is_exactly_zero() || b.is_exactly_zero()) return zero(var_);

  long prec = kExactPrec;
  if (!a.c_.empty()) prec = std::min(prec, sat_add(b.prec_, a.order()));
  if (!b.c_.empty()) prec = std::min(prec, sat_add(a.prec_, b.order()));
  prec = std::min(prec, sat_add(a.prec_, b.prec_));

  TruncatedLaurent r(var_, prec);
  for (const auto& [ea, va] : a.c_)
    for (const auto& [eb, vb] : b.c_) {
      long e = ea + eb;
      if (e >= prec) continue;
      auto [it, fresh] = r.c_.try_emplace(e, va * vb);
      if (!fresh) it->second += va * vb;
    }
  r.normalize();
  return r;
}

TruncatedLaurent TruncatedLaurent::operator*(const Rat& c) const {
  if (c == 0) return zero(var_, prec_);
  TruncatedLaurent r(var_, prec_);
  for (const auto& [e, v] : c_) r.c_[e] = v * c;
  return r;
}

bool TruncatedLaurent::agrees_with(const TruncatedLaurent& o) const {
  if (var_ != o.var_) return false;
  long w = std::min(prec_, o.prec_);
  for (const auto& [e, v] : c_)
    if (e < w && o.coeff(e) != v) return false;
  for (const auto& [e, v] : o.c_)
    if (e < w && coeff(e) != v) return false;
  return true;
}

TruncatedLaurent TruncatedLaurent::frobenius_substitute(const Int& p) const {
  if (var_ != Var::u) throw ShapeMismatch("frobenius substitution is defined on the variable u");
  long pl = p.get_si();
  TruncatedLaurent r(var_, exact() ? kExactPrec : prec_ * pl);
  for (const auto& [e, v] : c_) r.c_[e * pl] = v;
  return r;
}

TruncatedLaurent TruncatedLaurent::derivative() const {
  TruncatedLaurent r(var_, exact() ? kExactPrec : prec_ - 1);
  for (const auto& [e, v] : c_) {
    if (e == 0) continue;
    if (e - 1 < r.prec_) r.c_[e - 1] = v * e;
  }
  r.normalize();
  return r;
}

TruncatedLaurent TruncatedLaurent::invert_unit(long target_prec) const {
  if (c_.empty()) throw NotAUnit("no certified nonzero coefficient to invert");
  long k = order();
  if (c_.size() == 1 && exact()) // monomial: the inverse is exact
    return monomial(var_, -k, 1 / c_.begin()->second, std::min(target_prec, kExactPrec));
  long prec = std::min(target_prec, exact() ? kExactPrec : prec_ - 2 * k);
  if (prec >= kExactPrec)
    throw InsufficientPrecision("inverting an exact series needs a finite target precision");
  if (prec <= -k) throw InsufficientPrecision("inversion window is empty");

  // Work on the unit part b = x^{-k} * this, densely on [0, prec + k).
  long len = prec + k;
  std::vector<Rat> b(len, Rat(0));
  for (const auto& [e, v] : c_) {
    long i = e - k;
    if (i >= 0 && i < len) b[i] = v;
  }
  std::vector<Rat> y(len, Rat(0));
  Rat inv0 = 1 / b[0];
  y[0] = inv0;
  for (long n = 1; n < len; ++n) {
    Rat acc = 0;
    for (long j = 1; j <= n; ++j)
      if (b[j] != 0 && y[n - j] != 0) acc += b[j] * y[n - j];
    y[n] = -inv0 * acc;
  }
  TruncatedLaurent r(var_, prec);
  for (long n = 0; n < len; ++n) r.set_coeff(n - k, y[n]);
  return r;
}

TruncatedLaurent TruncatedLaurent::log_one_minus(long target_prec) const {
  if (coeff(0) != 0) throw NonzeroConstantTerm("log(1-s) needs s with positive order");
  if (!c_.empty() && order() < 0)
    throw NonzeroConstantTerm("log(1-s) needs s with positive order");
  if (c_.empty() && !exact() && prec_ <= 0)
    throw InsufficientPrecision("constant term of s is not certified");
  if (is_exactly_zero()) return zero(var_, std::min(prec_, target_prec));
  long prec = std::min(prec_, target_prec);
  if (prec >= kExactPrec)
    throw InsufficientPrecision("log of an exact series needs a finite target precision");

  TruncatedLaurent s = truncated(prec);
  TruncatedLaurent acc = zero(var_, prec);
  TruncatedLaurent power = s;
  long k = 1;
  while (!power.is_zero_within_window()) {
    acc = acc - power * Rat(1, k);
    ++k;
    power = (power * s).truncated(prec);
  }
  return acc;
}

TruncatedLaurent TruncatedLaurent::pow(long n, long target_prec) const {
  if (n < 0) return invert_unit(target_prec).pow(-n, target_prec);
  TruncatedLaurent r = constant(var_, 1, std::min(target_prec, kExactPrec));
  TruncatedLaurent base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

Rat TruncatedLaurent::eval(const Rat& x0) const {
  if (!exact()) throw InsufficientPrecision("evaluation needs an exact Laurent polynomial");
  if (x0 == 0) throw InputError("evaluation at 0 is undefined for Laurent polynomials");
  Rat acc = 0;
  for (const auto& [e, v] : c_) {
    Rat xe;
    mpz_pow_ui(xe.get_num_mpz_t(), x0.get_num_mpz_t(), std::abs(e));
    mpz_pow_ui(xe.get_den_mpz_t(), x0.get_den_mpz_t(), std::abs(e));
    xe.canonicalize();
    if (e < 0) xe = 1 / xe;
    acc += v * xe;
  }
  return acc;
}

std::string TruncatedLaurent::str() const {
  std::ostringstream os;
  char x = static_cast<char>(var_);
  if (c_.empty()) os << "0";
  bool first = true;
  for (const auto& [e, v] : c_) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(v);
    if (e != 0) os << "*" << x << "^" << e;
  }
  if (!exact()) os << " + O(" << x << "^" << prec_ << ")";
  return os.str();
}

TruncatedLaurent laurent_add(const TruncatedLaurent& a, const TruncatedLaurent& b) { return a + b; }
TruncatedLaurent laurent_mul(const TruncatedLaurent& a, const TruncatedLaurent& b) { return a * b; }

} // namespace hodgepink
