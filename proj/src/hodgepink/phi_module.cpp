#include "hodgepink/phi_module.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hodgepink {

Rat PhiNModule::p_to_f() const {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), ctx.p.get_mpz_t(), f);
  r.get_den() = 1;
  return r;
}

ValidationReport validate_module(const PhiNModule& m) {
  const RatMatrix& F = m.frobenius_power;
  const RatMatrix& N = m.monodromy;
  long d = F.rows();
  if (F.cols() != d || N.rows() != d || N.cols() != d)
    return {false, "ShapeMismatch"};
  if (m.f < 1) return {false, "ShapeMismatch"};
  if (F.det() == 0) return {false, "SingularFrobenius"};
  if (!(F * N * m.p_to_f() - N * F).is_zero()) return {false, "RelationViolated"};
  // unreachable when the relation holds; kept as an assertion
  if (!N.power(d).is_zero()) return {false, "NotNilpotent"};
  return {true, ""};
}

void require_valid(const PhiNModule& m) {
  ValidationReport rep = validate_module(m);
  if (rep.valid) return;
  if (rep.failure == "SingularFrobenius") throw SingularFrobenius("det F = 0");
  if (rep.failure == "RelationViolated") throw RelationViolated("p^f F N0 != N0 F");
  if (rep.failure == "NotNilpotent") throw NotNilpotent("N0^d != 0");
  throw ShapeMismatch("module matrices have inconsistent shapes");
}

namespace {

std::vector<Int> divisors(Int n) {
  n = abs(n);
  std::vector<Int> divs;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      divs.push_back(i);
      if (i * i != n) divs.push_back(n / i);
    }
  }
  return divs;
}

} // namespace

std::vector<Rat> charpoly_rational_roots(const std::vector<Rat>& c) {
  long d = static_cast<long>(c.size());
  // clear denominators: A[0] X^d + ... + A[d]
  Int lcm = 1;
  for (const auto& q : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Int> a(d + 1);
  a[0] = lcm;
  for (long i = 0; i < d; ++i) {
    Rat scaled = c[i] * Rat(lcm);
    a[i + 1] = scaled.get_num();
  }
  std::vector<Rat> roots;
  while (static_cast<long>(roots.size()) < d) {
    long deg = d - static_cast<long>(roots.size());
    // trailing zeros would mean a zero root; the callers exclude that case
    if (a[deg] == 0) break;
    auto eval = [&](const Rat& x) {
      Rat acc = 0;
      for (long i = 0; i <= deg; ++i) acc = acc * x + Rat(a[i]);
      return acc;
    };
    bool found = false;
    for (const Int& num : divisors(a[deg])) {
      for (const Int& den : divisors(a[0])) {
        for (int sign : {1, -1}) {
          Rat cand(sign * num, den);
          cand.canonicalize();
          if (eval(cand) == 0) {
            roots.push_back(cand);
            // deflate by (x - cand) exactly via synthetic division
            std::vector<Rat> bq(deg);
            bq[0] = Rat(a[0]);
            for (long i = 1; i < deg; ++i) bq[i] = Rat(a[i]) + bq[i - 1] * cand;
            Int l2 = 1;
            for (const auto& q : bq) mpz_lcm(l2.get_mpz_t(), l2.get_mpz_t(), q.get_den().get_mpz_t());
            std::vector<Int> next(deg);
            for (long i = 0; i < deg; ++i) next[i] = Rat(bq[i] * Rat(l2)).get_num();
            a.assign(next.begin(), next.end());
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  return roots;
}

JordanType jordan_component(const PhiNModule& m) {
  require_valid(m);
  long d = m.rank();
  std::vector<Rat> ev = charpoly_rational_roots(m.frobenius_power.charpoly());
  if (static_cast<long>(ev.size()) != d)
    throw UnsupportedSpectrum("charpoly of F does not split into rational linear factors");
  std::set<Rat> distinct(ev.begin(), ev.end());
  if (static_cast<long>(distinct.size()) != d)
    throw UnsupportedSpectrum("F has a repeated eigenvalue");

  Rat pf = m.p_to_f();
  // successor map: i -> j when lambda_j = p^f lambda_i
  std::vector<long> succ(d, -1), pred(d, -1);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      if (i != j && ev[j] == ev[i] * pf) {
        succ[i] = j;
        pred[j] = i;
      }

  // maximal chains, each ascending by multiplication with p^f
  std::vector<std::vector<long>> chains;
  for (long i = 0; i < d; ++i) {
    if (pred[i] >= 0) continue;
    std::vector<long> chain{i};
    while (succ[chain.back()] >= 0) chain.push_back(succ[chain.back()]);
    chains.push_back(std::move(chain));
  }
  std::sort(chains.begin(), chains.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });

  JordanType jt;
  for (const auto& chain : chains) {
    jt.partition.push_back(static_cast<long>(chain.size()));
    for (size_t k = 0; k < chain.size(); ++k) {
      jt.eigenvalues.push_back(ev[chain[k]]);
      jt.chained.push_back(k + 1 < chain.size());
    }
  }

  std::vector<long> n_type = nilpotent_jordan_type(m.monodromy);
  if (n_type != jt.partition)
    throw InconsistentChain("Jordan type of N0 disagrees with the eigenvalue chains");
  return jt;
}

PhiNModule generic_representative(const std::vector<long>& partition, const Rat& lambda0,
                                  const PrimeContext& ctx, long f) {
  if (lambda0 == 0) throw InputError("lambda0 must be nonzero");
  std::vector<long> parts = partition;
  std::sort(parts.rbegin(), parts.rend());
  long d = 0;
  for (long k : parts) {
    if (k <= 0) throw InputError("partition entries must be positive");
    d += k;
  }
  if (d == 0) throw InputError("empty partition");

  // block seeds: lambda0, then lambda0 * (successive primes different from p)
  std::vector<Rat> seeds{lambda0};
  Int q = 2;
  while (static_cast<long>(seeds.size()) < static_cast<long>(parts.size())) {
    if (q != ctx.p) seeds.push_back(lambda0 * Rat(q));
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
  }

  Rat pf;
  mpz_pow_ui(pf.get_num_mpz_t(), ctx.p.get_mpz_t(), f);

  RatMatrix F(d, d), N0(d, d);
  long pos = 0;
  for (size_t b = 0; b < parts.size(); ++b) {
    Rat ev = seeds[b];
    for (long j = 0; j < parts[b]; ++j) {
      F.at(pos, pos) = ev;
      if (j + 1 < parts[b]) N0.at(pos, pos + 1) = 1;
      ev *= pf;
      ++pos;
    }
  }
  PhiNModule m(f, ctx, std::move(F), std::move(N0));
  require_valid(m);
  return m;
}

RatMatrix degeneration_base_block(long s_i, long s_j, const std::vector<Rat>& last_col,
                                  const PrimeContext& ctx, long f) {
  long free_params = std::min(s_i, s_j);
  if (static_cast<long>(last_col.size()) != free_params)
    throw InputError("expected " + std::to_string(free_params) + " free parameters");
  Rat pf;
  mpz_pow_ui(pf.get_num_mpz_t(), ctx.p.get_mpz_t(), f);
  RatMatrix n(s_i, s_j);
  for (long mu = 1; mu <= s_i; ++mu)
    for (long nu = 1; nu <= s_j; ++nu) {
      long idx = mu + s_j - nu; // index into the last column, 1-based
      if (idx < 1 || idx > free_params) continue;
      Rat scale = 1;
      for (long k = 0; k < s_j - nu; ++k) scale *= pf;
      n.at(mu - 1, nu - 1) = scale * last_col[idx - 1];
    }
  return n;
}

namespace {

LaurentMatrix jordan_block_z(long s, const Rat& rho, bool deform_last) {
  LaurentMatrix j(s, s, Var::z);
  for (long i = 0; i < s; ++i) {
    bool last = (i == s - 1);
    if (deform_last && last)
      j.at(i, i) = TruncatedLaurent::monomial(Var::z, 1, rho); // z * rho
    else
      j.at(i, i) = TruncatedLaurent::constant(Var::z, rho);
    if (i + 1 < s) j.at(i, i + 1) = TruncatedLaurent::constant(Var::z, 1);
  }
  return j;
}

} // namespace

DegenerationWitness degeneration_identity_check(long s_i, long s_j, const Rat& rho_i,
                                                const Rat& rho_j, const RatMatrix& n_base,
                                                DegenerationCase which, const PrimeContext& ctx,
                                                long f) {
  if (s_i < 1 || s_j < 1) throw InputError("block sizes must be positive");
  if (n_base.rows() != s_i || n_base.cols() != s_j)
    throw ShapeMismatch("base block must be s_i x s_j");
  Rat pf;
  mpz_pow_ui(pf.get_num_mpz_t(), ctx.p.get_mpz_t(), f);
  if (rho_i == 0 || rho_j != rho_i * pf)
    throw CasePreconditionViolated("eigenvalues must satisfy rho_j = p^f rho_i, rho_i != 0");

  // base relation p^f J_i N = N J_j
  RatMatrix ji(s_i, s_i), jj(s_j, s_j);
  for (long i = 0; i < s_i; ++i) {
    ji.at(i, i) = rho_i;
    if (i + 1 < s_i) ji.at(i, i + 1) = 1;
  }
  for (long i = 0; i < s_j; ++i) {
    jj.at(i, i) = rho_j;
    if (i + 1 < s_j) jj.at(i, i + 1) = 1;
  }
  if (!(ji * n_base * pf - n_base * jj).is_zero())
    throw CasePreconditionViolated("base block does not satisfy p^f J_i N = N J_j");

  bool deform_i = false, deform_j = false;
  switch (which) {
    case DegenerationCase::a:
      break;
    case DegenerationCase::b:
      if (!(s_i > s_j)) throw CasePreconditionViolated("case b needs s_i > s_j");
      deform_i = true;
      break;
    case DegenerationCase::c:
      if (!(s_i < s_j)) throw CasePreconditionViolated("case c needs s_i < s_j");
      deform_j = true;
      break;
    case DegenerationCase::d:
      if (s_i != s_j) throw CasePreconditionViolated("case d needs s_i = s_j");
      deform_i = deform_j = true;
      break;
  }

  DegenerationWitness w;
  w.j_tilde_i = jordan_block_z(s_i, rho_i, deform_i);
  w.j_tilde_j = jordan_block_z(s_j, rho_j, deform_j);

  LaurentMatrix nt(s_i, s_j, Var::z);
  auto one_minus_z = TruncatedLaurent::constant(Var::z, 1) - TruncatedLaurent::monomial(Var::z, 1, 1);
  if (which == DegenerationCase::a || which == DegenerationCase::b) {
    nt = LaurentMatrix::from_rat(n_base, Var::z);
  } else {
    long s = s_j; // the maximal size in cases c and d
    for (long mu = 1; mu <= s_i; ++mu)
      for (long nu = 1; nu <= s_j; ++nu) {
        if (nu == s_j) {
          nt.at(mu - 1, nu - 1) = TruncatedLaurent::constant(Var::z, n_base.at(mu - 1, nu - 1));
          continue;
        }
        bool kill = (which == DegenerationCase::c) ? (mu > nu + s_i - s_j + 1) : (mu > nu);
        if (kill) continue;
        Rat scale = 1;
        for (long k = 0; k < s - 1 - nu; ++k) scale *= pf;
        Rat shifted = n_base.at(mu - nu + s - 1 - 1, s_j - 1); // n_{mu - nu + s - 1, s_j}
        auto corr = one_minus_z * (scale * rho_j * shifted);
        nt.at(mu - 1, nu - 1) =
            TruncatedLaurent::constant(Var::z, n_base.at(mu - 1, nu - 1)) + corr;
      }
  }
  w.n_tilde = nt;

  LaurentMatrix lhs = (w.j_tilde_i * w.n_tilde).scaled(pf);
  LaurentMatrix rhs = w.n_tilde * w.j_tilde_j;
  w.holds = (lhs - rhs).is_zero_within_window() && (lhs - rhs).all_entries_exact();
  return w;
}

std::vector<Rat> adjoint_quotient_point(const PhiNModule& m) {
  require_valid(m);
  return m.frobenius_power.charpoly();
}

long p_scheme_dimension(long f, long d) {
  if (f < 1 || d < 1) throw InputError("f and d must be at least 1");
  return f * d * d;
}

} // namespace hodgepink
