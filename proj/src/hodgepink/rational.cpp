#include "hodgepink/rational.hpp"

namespace hodgepink {

namespace {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Exact power of p dividing the nonzero integer n.
long p_order(Int n, const Int& p) {
  long k = 0;
  Int q, r;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    n = q;
    ++k;
  }
  return k;
}

} // namespace

PrimeContext::PrimeContext(Int prime) : p(std::move(prime)) {
  if (!is_prime(p)) throw InputError("p must be a prime >= 2, got " + p.get_str());
}

std::string Valuation::str() const {
  if (infinite) return "inf";
  return rat_to_string(value);
}

Valuation padic_valuation(const Rat& q, const PrimeContext& ctx) {
  if (q == 0) return Valuation::inf();
  long num = p_order(q.get_num(), ctx.p);
  long den = p_order(q.get_den(), ctx.p);
  return Valuation::of(Rat(num - den));
}

std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw InputError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

} // namespace hodgepink
