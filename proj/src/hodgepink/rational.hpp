#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "hodgepink/errors.hpp"

namespace hodgepink {

using Rat = mpq_class;
using Int = mpz_class;

// The prime p together with the normalization val(p) = 1. Additive convention:
// every multiplicative inequality v(x) <= v(p)^m of the theory reads val(x) >= m here.
struct PrimeContext {
  Int p;

  explicit PrimeContext(long prime) : PrimeContext(Int(prime)) {}
  explicit PrimeContext(Int prime);
};

// Additive p-adic valuation value: a rational or +infinity (the valuation of 0).
struct Valuation {
  bool infinite = false;
  Rat value = 0;

  static Valuation inf() { return Valuation{true, 0}; }
  static Valuation of(Rat v) { return Valuation{false, std::move(v)}; }

  bool operator==(const Valuation& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
  bool operator<(const Valuation& o) const {
    if (infinite) return false;
    if (o.infinite) return true;
    return value < o.value;
  }
  bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
  bool operator>=(const Valuation& o) const { return o <= *this; }
  bool operator>(const Valuation& o) const { return o < *this; }

  Valuation operator+(const Valuation& o) const {
    if (infinite || o.infinite) return inf();
    return of(value + o.value);
  }

  std::string str() const;
};

// Exact p-adic order of a rational; +infinity for 0. val(18, p=3) = 2, val(3/4, p=2) = -2.
Valuation padic_valuation(const Rat& q, const PrimeContext& ctx);

// Canonical "num/den" form, den > 0, lowest terms; integers print without the slash.
std::string rat_to_string(const Rat& q);

// Parses "num/den" or "num". Throws InputError on malformed text.
Rat rat_from_string(const std::string& s);

} // namespace hodgepink
