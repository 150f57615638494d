#include "hodgepink/selftest.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include "hodgepink/admissibility.hpp"
#include "hodgepink/unit_disc.hpp"

namespace hodgepink::selftest {

namespace {

using Rng = std::mt19937_64;

long rand_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Rat rand_rat(Rng& rng, long p) {
  long num = rand_int(rng, -9, 9);
  if (num == 0) num = 1;
  long den = rand_int(rng, 1, 9);
  long k = rand_int(rng, -3, 3);
  Rat q(num, den);
  q.canonicalize();
  Rat pk(1);
  for (long i = 0; i < std::abs(k); ++i) pk *= p;
  return k >= 0 ? Rat(q * pk) : Rat(q / pk);
}

RatMatrix rand_invertible(Rng& rng, long d) {
  while (true) {
    RatMatrix m(d, d);
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j) m.at(i, j) = rand_int(rng, -3, 3);
    if (m.det() != 0) return m;
  }
}

TruncatedLaurent rand_series(Rng& rng, long lo, long hi, long prec) {
  TruncatedLaurent s(Var::t, prec);
  for (long e = lo; e <= hi; ++e)
    if (rand_int(rng, 0, 2) != 0) s.set_coeff(e, Rat(rand_int(rng, -4, 4)));
  return s;
}

// unimodular over Q[[t]]: unit lower times unit upper, polynomial entries
LaurentMatrix rand_unimodular(Rng& rng, long d) {
  LaurentMatrix lo = LaurentMatrix::identity(d), up = LaurentMatrix::identity(d);
  for (long i = 0; i < d; ++i) {
    long u = rand_int(rng, 1, 3) * (rand_int(rng, 0, 1) ? 1 : -1);
    lo.at(i, i) = TruncatedLaurent::constant(Var::t, u);
    for (long j = 0; j < i; ++j) {
      TruncatedLaurent s(Var::t);
      for (long e = 0; e <= 2; ++e)
        if (rand_int(rng, 0, 1)) s.set_coeff(e, Rat(rand_int(rng, -2, 2)));
      lo.at(i, j) = s;
      TruncatedLaurent s2(Var::t);
      for (long e = 0; e <= 2; ++e)
        if (rand_int(rng, 0, 1)) s2.set_coeff(e, Rat(rand_int(rng, -2, 2)));
      up.at(j, i) = s2;
    }
  }
  return lo * up;
}

// a full lattice with known elementary divisors: A diag(t^a) V with A constant
// invertible and V unimodular with V(0) = 1
LaurentMatrix rand_lattice_basis(Rng& rng, long d, long lo, long hi, std::vector<long>* divisors) {
  std::vector<long> a(d);
  for (long i = 0; i < d; ++i) a[i] = rand_int(rng, lo, hi);
  RatMatrix c = rand_invertible(rng, d);
  LaurentMatrix v = LaurentMatrix::identity(d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      if (i != j && rand_int(rng, 0, 1)) {
        TruncatedLaurent s(Var::t);
        s.set_coeff(rand_int(rng, 1, 2), Rat(rand_int(rng, -2, 2)));
        v.at(i, j) = v.at(i, j) + s;
      }
  LaurentMatrix result = LaurentMatrix::from_rat(c) * LaurentMatrix::diag_powers(a) * v;
  if (divisors) {
    std::sort(a.begin(), a.end());
    *divisors = a;
  }
  return result;
}

HodgePinkLattice rand_hp_lattice(Rng& rng, long d, long components, long lo, long hi) {
  std::vector<std::pair<std::string, LaurentMatrix>> comps;
  long m = 0, n = 0;
  for (long c = 0; c < components; ++c) {
    std::vector<long> divs;
    LaurentMatrix b = rand_lattice_basis(rng, d, lo, hi, &divs);
    m = std::max(m, -divs.front());
    n = std::max(n, divs.back());
    comps.emplace_back("psi" + std::to_string(c), std::move(b));
  }
  return HodgePinkLattice::make(std::move(comps), std::max(m, 0L), std::max(n, 0L));
}

KFiltration rand_filtration(Rng& rng, long d, long components, long lo, long hi) {
  KFiltration f;
  f.d = d;
  for (long c = 0; c < components; ++c) {
    std::vector<long> jumps(d);
    for (long i = 0; i < d; ++i) jumps[i] = rand_int(rng, lo, hi);
    std::sort(jumps.rbegin(), jumps.rend());
    f.components.push_back({"psi" + std::to_string(c), rand_invertible(rng, d), jumps});
  }
  f.validate();
  return f;
}

std::vector<std::vector<long>> partitions_of(long d) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long rest, long maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (long k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

std::vector<std::vector<long>> nonincreasing_vectors(long d, long lo, long hi) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long pos, long cap) -> void {
    if (pos == d) {
      out.push_back(cur);
      return;
    }
    for (long v = cap; v >= lo; --v) {
      cur.push_back(v);
      self(self, pos + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 0, hi);
  return out;
}

Result pass(const std::string& name) { return {name, true, ""}; }
Result fail(const std::string& name, const std::string& detail) { return {name, false, detail}; }

// random valid module in the supported spectra, optionally conjugated
PhiNModule rand_supported_module(Rng& rng, long p, long d, bool conjugate) {
  auto parts = partitions_of(d);
  auto part = parts[rand_int(rng, 0, static_cast<long>(parts.size()) - 1)];
  Rat lambda0(rand_int(rng, 1, 3), 1);
  if (rand_int(rng, 0, 1)) lambda0 = -lambda0;
  long k = rand_int(rng, -1, 1);
  for (long i = 0; i < std::abs(k); ++i) lambda0 = k > 0 ? Rat(lambda0 * p) : Rat(lambda0 / p);
  PhiNModule m = generic_representative(part, lambda0, PrimeContext(p), 1);
  if (!conjugate) return m;
  RatMatrix g = rand_invertible(rng, d);
  RatMatrix gi = g.inverse();
  return PhiNModule(m.f, m.ctx, gi * m.frobenius_power * g, gi * m.monodromy * g);
}

} // namespace

Result valuation_laws(uint64_t seed) {
  Rng rng(seed);
  for (long p : {2L, 3L, 5L}) {
    PrimeContext ctx(p);
    for (int i = 0; i < 3400; ++i) {
      Rat a = rand_rat(rng, p), b = rand_rat(rng, p);
      Valuation va = padic_valuation(a, ctx), vb = padic_valuation(b, ctx);
      if (!(padic_valuation(a * b, ctx) == va + vb))
        return fail("valuation_laws", "val(ab) != val(a) + val(b)");
      Valuation vsum = padic_valuation(a + b, ctx);
      Valuation vmin = va < vb ? va : vb;
      if (vsum < vmin) return fail("valuation_laws", "val(a+b) < min");
      if (!(va == vb) && !(vsum == vmin))
        return fail("valuation_laws", "strict ultrametric equality failed");
    }
  }
  return pass("valuation_laws");
}

Result series_ring_laws(uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    long prec = rand_int(rng, 4, 9);
    TruncatedLaurent a = rand_series(rng, -2, 3, prec);
    TruncatedLaurent b = rand_series(rng, -2, 3, prec);
    TruncatedLaurent c = rand_series(rng, -2, 3, prec);
    if (!((a * b) * c).agrees_with(a * (b * c)))
      return fail("series_ring_laws", "associativity failed");
    TruncatedLaurent u = rand_series(rng, 1, 3, prec);
    u.set_coeff(0, Rat(rand_int(rng, 1, 5)));
    TruncatedLaurent inv = u.invert_unit();
    if (!(u * inv).agrees_with(TruncatedLaurent::constant(Var::t, 1, prec)) ||
        !(inv * u).agrees_with(TruncatedLaurent::constant(Var::t, 1, prec)))
      return fail("series_ring_laws", "two-sided inverse failed");
  }
  // frobenius substitution is a ring map on u-series
  for (int i = 0; i < 100; ++i) {
    TruncatedLaurent a(Var::u, 20), b(Var::u, 20);
    for (long e = 0; e <= 5; ++e) {
      if (rand_int(rng, 0, 1)) a.set_coeff(e, Rat(rand_int(rng, -4, 4)));
      if (rand_int(rng, 0, 1)) b.set_coeff(e, Rat(rand_int(rng, -4, 4)));
    }
    Int p(2);
    if (!(a * b).frobenius_substitute(p).agrees_with(a.frobenius_substitute(p) *
                                                     b.frobenius_substitute(p)))
      return fail("series_ring_laws", "frobenius is not multiplicative");
  }
  return pass("series_ring_laws");
}

Result smith_invariance(uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 100; ++trial) {
    long d = rand_int(rng, 1, 4);
    std::vector<long> divs;
    LaurentMatrix m = rand_lattice_basis(rng, d, -2, 2, &divs);
    std::vector<long> e1 = smith_exponents(m);
    if (e1 != divs) return fail("smith_invariance", "divisors disagree with construction");
    LaurentMatrix conj = rand_unimodular(rng, d) * m * rand_unimodular(rng, d);
    std::vector<long> e2 = smith_exponents(conj);
    if (e1 != e2) return fail("smith_invariance", "unimodular conjugation changed exponents");
    long det_ord = conj.det().order();
    long sum = 0;
    for (long x : e2) sum += x;
    if (sum != det_ord) return fail("smith_invariance", "sum of exponents != ord det");
    // the transforms certify the normal form and are units over Q[[t]]
    SmithForm f = smith_form(conj);
    if (!(f.left * conj * f.right).agrees_with(LaurentMatrix::diag_powers(f.exponents)))
      return fail("smith_invariance", "U M V != diag(t^a) within the window");
    if (f.left.det().order() != 0 || f.right.det().order() != 0)
      return fail("smith_invariance", "transform determinant is not a unit");
  }
  return pass("smith_invariance");
}

Result exterior_divisors(uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 40; ++trial) {
    long d = rand_int(rng, 2, 4);
    std::vector<long> divs;
    LaurentMatrix m = rand_lattice_basis(rng, d, -2, 2, &divs);
    for (long j = 1; j <= d; ++j) {
      std::vector<long> got = smith_exponents(exterior_lattice(m, j));
      std::vector<long> expect;
      for (const auto& subset : subsets_of_size(d, j)) {
        long s = 0;
        for (long idx : subset) s += divs[idx];
        expect.push_back(s);
      }
      std::sort(expect.begin(), expect.end());
      if (got != expect) return fail("exterior_divisors", "wedge divisors are not the j-sums");
    }
  }
  return pass("exterior_divisors");
}

Result intersection_membership(uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    long d = rand_int(rng, 2, 4);
    long dp = rand_int(rng, 1, d - 1);
    LaurentMatrix q = rand_lattice_basis(rng, d, -2, 2, nullptr);
    RatMatrix s(d, dp);
    do {
      for (long i = 0; i < d; ++i)
        for (long j = 0; j < dp; ++j) s.at(i, j) = rand_int(rng, -2, 2);
    } while (s.rank() != dp);
    LaurentMatrix inter = lattice_intersection(q, s);

    long guard = 4 * d + 8;
    LaurentMatrix q_inv = laurent_inverse(q, guard);
    LaurentMatrix ambient = LaurentMatrix::from_rat(s) * inter;
    if (!(q_inv * ambient).all_orders_at_least(0))
      return fail("intersection_membership", "result not contained in q");

    // random elements of S((t)) in a window: membership in q must agree with
    // membership in the intersection lattice
    LaurentMatrix inter_inv = laurent_inverse(inter, guard);
    for (int probe = 0; probe < 10; ++probe) {
      LaurentMatrix w(dp, 1, Var::t);
      for (long i = 0; i < dp; ++i) w.at(i, 0) = rand_series(rng, -3, 2, kExactPrec);
      LaurentMatrix w_ambient = LaurentMatrix::from_rat(s) * w;
      bool in_q = (q_inv * w_ambient).all_orders_at_least(0);
      bool in_inter = (inter_inv * w).all_orders_at_least(0);
      if (in_q != in_inter)
        return fail("intersection_membership", "maximality violated on a probe");
    }
  }
  return pass("intersection_membership");
}

Result module_validation_fuzz(uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    long p = std::vector<long>{2, 3, 5}[rand_int(rng, 0, 2)];
    long d = rand_int(rng, 1, 5);
    PhiNModule m = rand_supported_module(rng, p, d, rand_int(rng, 0, 1));
    if (!validate_module(m).valid) return fail("module_validation_fuzz", "valid module rejected");
  }
  for (int i = 0; i < 200; ++i) {
    long p = std::vector<long>{2, 3, 5}[rand_int(rng, 0, 2)];
    long d = rand_int(rng, 2, 5);
    PhiNModule m = rand_supported_module(rng, p, d, false);
    RatMatrix n = m.monodromy;
    long r = rand_int(rng, 0, d - 1), c = rand_int(rng, 0, d - 1);
    n.at(r, c) += Rat(rand_int(rng, 1, 3));
    PhiNModule tweaked(m.f, m.ctx, m.frobenius_power, n);
    bool direct_ok = (tweaked.frobenius_power * tweaked.monodromy * tweaked.p_to_f() -
                      tweaked.monodromy * tweaked.frobenius_power)
                         .is_zero();
    if (validate_module(tweaked).valid != direct_ok)
      return fail("module_validation_fuzz", "acceptance disagrees with direct arithmetic");
  }
  return pass("module_validation_fuzz");
}

Result jordan_roundtrip() {
  static const long expected_counts[] = {0, 1, 2, 3, 5, 7};
  for (long d = 1; d <= 5; ++d) {
    auto parts = partitions_of(d);
    if (static_cast<long>(parts.size()) != expected_counts[d])
      return fail("jordan_roundtrip", "partition enumeration is wrong");
    std::set<std::vector<long>> seen;
    for (const auto& part : parts) {
      PhiNModule m = generic_representative(part, Rat(1), PrimeContext(2), 1);
      JordanType jt = jordan_component(m);
      if (jt.partition != part)
        return fail("jordan_roundtrip", "roundtrip failed on a partition of " + std::to_string(d));
      seen.insert(jt.partition);
    }
    if (static_cast<long>(seen.size()) != expected_counts[d])
      return fail("jordan_roundtrip", "component count != partition count");
  }
  return pass("jordan_roundtrip");
}

Result adjoint_invariance(uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 100; ++i) {
    long d = rand_int(rng, 1, 4);
    PhiNModule m = rand_supported_module(rng, 2, d, false);
    RatMatrix g = rand_invertible(rng, d);
    PhiNModule conj(m.f, m.ctx, g.inverse() * m.frobenius_power * g,
                    g.inverse() * m.monodromy * g);
    if (adjoint_quotient_point(m) != adjoint_quotient_point(conj))
      return fail("adjoint_invariance", "charpoly changed under conjugation");
  }
  return pass("adjoint_invariance");
}

Result degeneration_cases(uint64_t seed) {
  Rng rng(seed);
  PrimeContext ctx(2);
  long f = 1;
  Rat pf(2);
  for (int trial = 0; trial < 120; ++trial) {
    long s_i = rand_int(rng, 1, 3), s_j = rand_int(rng, 1, 3);
    Rat rho_i(rand_int(rng, 1, 5));
    Rat rho_j = rho_i * pf;
    std::vector<Rat> params(std::min(s_i, s_j));
    for (auto& x : params) x = Rat(rand_int(rng, -3, 3));
    RatMatrix base = degeneration_base_block(s_i, s_j, params, ctx, f);
    DegenerationCase which = s_i == s_j  ? DegenerationCase::d
                             : s_i > s_j ? DegenerationCase::b
                                         : DegenerationCase::c;
    DegenerationWitness w = degeneration_identity_check(s_i, s_j, rho_i, rho_j, base, which, ctx, f);
    if (!w.holds) return fail("degeneration_cases", "identity failed");
    DegenerationWitness wa_case =
        degeneration_identity_check(s_i, s_j, rho_i, rho_j, base, DegenerationCase::a, ctx, f);
    if (!wa_case.holds) return fail("degeneration_cases", "case a failed");
    // specialization z = 1 recovers the input pair
    RatMatrix ji1 = w.j_tilde_i.eval(1), jj1 = w.j_tilde_j.eval(1), n1 = w.n_tilde.eval(1);
    RatMatrix ji(s_i, s_i), jj(s_j, s_j);
    for (long i = 0; i < s_i; ++i) {
      ji.at(i, i) = rho_i;
      if (i + 1 < s_i) ji.at(i, i + 1) = 1;
    }
    for (long i = 0; i < s_j; ++i) {
      jj.at(i, i) = rho_j;
      if (i + 1 < s_j) jj.at(i, i + 1) = 1;
    }
    if (!(ji1 == ji) || !(jj1 == jj) || !(n1 == base))
      return fail("degeneration_cases", "specialization at z = 1 does not recover the input");
  }
  return pass("degeneration_cases");
}

Result bruhat_partial_order() {
  for (long d = 1; d <= 3; ++d) {
    auto vecs = nonincreasing_vectors(d, -2, 2);
    std::vector<Cocharacter> mus;
    for (auto& v : vecs) mus.push_back(Cocharacter::single(v));
    for (const auto& a : mus)
      if (!bruhat_leq(a, a)) return fail("bruhat_partial_order", "not reflexive");
    for (const auto& a : mus)
      for (const auto& b : mus) {
        if (bruhat_leq(a, b) && bruhat_leq(b, a) &&
            a.weight("psi0") != b.weight("psi0"))
          return fail("bruhat_partial_order", "not antisymmetric");
      }
    for (const auto& a : mus)
      for (const auto& b : mus) {
        if (!bruhat_leq(a, b)) continue;
        for (const auto& c : mus)
          if (bruhat_leq(b, c) && !bruhat_leq(a, c))
            return fail("bruhat_partial_order", "not transitive");
      }
  }
  return pass("bruhat_partial_order");
}

Result l_vector_agreement() {
  for (long d = 1; d <= 4; ++d) {
    auto vecs = nonincreasing_vectors(d, -3, 3);
    for (const auto& v : vecs) {
      Cocharacter mu = Cocharacter::single(v);
      if (l_vector(mu, LVectorMethod::direct) != l_vector(mu, LVectorMethod::reconstruction))
        return fail("l_vector_agreement", "methods disagree, one embedding");
    }
    for (const auto& v : vecs)
      for (const auto& w : vecs) {
        Cocharacter mu = Cocharacter::make(2, 1, {v, w});
        if (l_vector(mu, LVectorMethod::direct) != l_vector(mu, LVectorMethod::reconstruction))
          return fail("l_vector_agreement", "methods disagree, two embeddings");
      }
  }
  return pass("l_vector_agreement");
}

Result l_vector_monotonicity() {
  for (long d = 1; d <= 4; ++d) {
    auto vecs = nonincreasing_vectors(d, -3, 3);
    std::vector<Cocharacter> mus;
    for (auto& v : vecs) mus.push_back(Cocharacter::single(v));
    for (const auto& a : mus)
      for (const auto& b : mus) {
        if (!bruhat_leq(a, b)) continue;
        auto la = l_vector(a), lb = l_vector(b);
        for (long i = 0; i < d - 1; ++i)
          if (la[i] < lb[i]) return fail("l_vector_monotonicity", "l_i decreased under bruhat");
        if (la[d - 1] != lb[d - 1])
          return fail("l_vector_monotonicity", "l_d not preserved");
      }
  }
  return pass("l_vector_monotonicity");
}

Result gap_lemma_bruteforce() {
  for (long n = 1; n <= 5; ++n) {
    std::vector<long> r(n, -3);
    while (true) {
      long sum = 0;
      for (long x : r) sum += x;
      if (sum >= n) {
        GapReport rep = combinatorial_gap(r);
        bool all_ones = std::all_of(r.begin(), r.end(), [](long x) { return x == 1; });
        if (rep.exceptional != all_ones)
          return fail("gap_lemma_bruteforce", "exceptional flag wrong");
        if (!all_ones && rep.gap <= 1) return fail("gap_lemma_bruteforce", "gap <= 1 found");
        if (all_ones && rep.gap != 1) return fail("gap_lemma_bruteforce", "all-ones gap != 1");
      }
      long pos = n - 1;
      while (pos >= 0 && r[pos] == 4) r[pos--] = -3;
      if (pos < 0) break;
      ++r[pos];
    }
  }
  return pass("gap_lemma_bruteforce");
}

Result dimension_cross_check(uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 50; ++i) {
    long d = rand_int(rng, 1, 4);
    long e = rand_int(rng, 1, 2), f = rand_int(rng, 1, 2);
    std::vector<std::vector<long>> ws;
    for (long c = 0; c < e * f; ++c) {
      std::vector<long> w(d);
      for (long j = 0; j < d; ++j) w[j] = rand_int(rng, -3, 3);
      std::sort(w.rbegin(), w.rend());
      ws.push_back(w);
    }
    Cocharacter mu = Cocharacter::make(e, f, ws);
    DimensionReport rep = dimension_formulas(mu);
    // independent re-evaluation
    long dq = 0, dflag = 0;
    for (const auto& w : ws) {
      for (long j = 0; j < d; ++j) dq += (d - 1 - 2 * j) * w[j];
      for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b) dflag += (w[a] > w[b]) ? 1 : 0;
    }
    if (rep.dim_q != dq || rep.dim_flag != dflag || rep.dim_p != f * d * d ||
        rep.dim_p != p_scheme_dimension(f, d))
      return fail("dimension_cross_check", "formula transcription mismatch");
  }
  return pass("dimension_cross_check");
}

Result filtration_roundtrip(uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    long d = rand_int(rng, 1, 4);
    KFiltration f = rand_filtration(rng, d, rand_int(rng, 1, 2), -3, 3);
    HodgePinkLattice q = filtration_to_lattice(f);
    KFiltration back = lattice_to_filtration(q);
    if (!same_filtration(f, back)) return fail("filtration_roundtrip", "F != F(q(F))");
    Cocharacter type = filtration_type(f);
    Cocharacter poly = hodge_polygon(q);
    for (const auto& lab : type.labels)
      if (type.weight(lab) != poly.weight(lab))
        return fail("filtration_roundtrip", "polygon of q(F) != jump type of F");
  }
  return pass("filtration_roundtrip");
}

Result minuscule_roundtrip(uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 100; ++i) {
    long d = rand_int(rng, 1, 4);
    long k = rand_int(rng, 0, d);
    // q = p + t^{-1} W for a random subspace W of dimension k
    RatMatrix w(d, k);
    do {
      for (long r = 0; r < d; ++r)
        for (long c = 0; c < k; ++c) w.at(r, c) = rand_int(rng, -3, 3);
    } while (w.rank() != k);
    RatMatrix ext = k > 0 ? w.completed_to_basis() : RatMatrix::identity(d);
    LaurentMatrix basis(d, d, Var::t);
    for (long c = 0; c < d; ++c)
      for (long r = 0; r < d; ++r) {
        if (ext.at(r, c) == 0) continue;
        basis.at(r, c) = TruncatedLaurent::monomial(Var::t, c < k ? -1 : 0, ext.at(r, c));
      }
    HodgePinkLattice q = HodgePinkLattice::make({{"psi0", basis}}, 1, 0);
    HodgePinkLattice back = filtration_to_lattice(lattice_to_filtration(q));
    if (!same_hp_lattice(q, back)) return fail("minuscule_roundtrip", "q != q(F(q))");
  }
  return pass("minuscule_roundtrip");
}

namespace {

Cocharacter dominated_perturbation(Rng& rng, const Cocharacter& base) {
  // add nonnegative coroot combinations: raises partial sums, keeps the total
  Cocharacter mu = base;
  for (const auto& lab : mu.labels) {
    std::vector<long> w = mu.weight(lab);
    long d = static_cast<long>(w.size());
    for (int rounds = 0; rounds < 2; ++rounds) {
      if (d < 2) break;
      long i = rand_int(rng, 0, d - 2);
      if (rand_int(rng, 0, 1)) {
        w[i] += 1;
        w[i + 1] -= 1;
      }
    }
    std::sort(w.rbegin(), w.rend());
    mu.weights[lab] = w;
  }
  return mu;
}

} // namespace

Result boundedness_duality(uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    long d = rand_int(rng, 1, 3);
    long comps = rand_int(rng, 1, 2);
    HodgePinkLattice q = rand_hp_lattice(rng, d, comps, -2, 2);
    Cocharacter poly = hodge_polygon(q);
    Cocharacter mu = rand_int(rng, 0, 1) ? dominated_perturbation(rng, poly) : poly;
    if (rand_int(rng, 0, 3) == 0) {
      // unrelated candidate, usually not a bound
      std::vector<std::vector<long>> ws;
      for (long c = 0; c < comps; ++c) {
        std::vector<long> w(d);
        for (long j = 0; j < d; ++j) w[j] = rand_int(rng, -2, 2);
        std::sort(w.rbegin(), w.rend());
        ws.push_back(w);
      }
      mu = Cocharacter::make(comps, 1, ws);
    }
    bool primal = bounded_by(q, mu, BoundMethod::primal);
    bool dual = bounded_by(q, mu, BoundMethod::dual);
    if (primal != dual) return fail("boundedness_duality", "primal and dual disagree");
    if (primal != bruhat_leq(poly, mu))
      return fail("boundedness_duality", "boundedness != bruhat comparison of polygons");
  }
  return pass("boundedness_duality");
}

Result boundedness_nesting(uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 100; ++i) {
    long d = rand_int(rng, 2, 3);
    HodgePinkLattice q = rand_hp_lattice(rng, d, 1, -2, 2);
    Cocharacter mu_p = hodge_polygon(q);
    Cocharacter mu = dominated_perturbation(rng, mu_p);
    if (!bruhat_leq(mu_p, mu)) return fail("boundedness_nesting", "perturbation not dominated");
    if (bounded_by(q, mu_p) && !bounded_by(q, mu))
      return fail("boundedness_nesting", "nesting violated");
  }
  return pass("boundedness_nesting");
}

Result wa_section_compatibility(uint64_t seed) {
  Rng rng(seed);
  int done = 0;
  while (done < 100) {
    long d = rand_int(rng, 1, 3);
    PhiNModule m = rand_supported_module(rng, 2, d, rand_int(rng, 0, 1));
    KFiltration f = rand_filtration(rng, d, rand_int(rng, 1, 2), -2, 2);
    WaReport on_filtration = is_weakly_admissible(m, f);
    WaReport on_lattice = is_weakly_admissible(m, filtration_to_lattice(f));
    if (on_filtration.weakly_admissible != on_lattice.weakly_admissible)
      return fail("wa_section_compatibility", "wa differs between F and q(F)");
    ++done;
  }
  return pass("wa_section_compatibility");
}

Result wa_preimage_inclusion(uint64_t seed) {
  Rng rng(seed);
  int done = 0;
  while (done < 100) {
    long d = rand_int(rng, 1, 3);
    PhiNModule m = rand_supported_module(rng, 2, d, false);
    HodgePinkLattice q = rand_hp_lattice(rng, d, 1, -2, 2);
    KFiltration fq = lattice_to_filtration(q);
    WaReport down = is_weakly_admissible(m, fq);
    if (down.weakly_admissible) {
      WaReport up = is_weakly_admissible(m, q);
      if (!up.weakly_admissible)
        return fail("wa_preimage_inclusion", "wa(F_q) held but wa(q) failed");
    }
    ++done;
  }
  return pass("wa_preimage_inclusion");
}

Result subobject_hodge_bound(uint64_t seed) {
  Rng rng(seed);
  int done = 0;
  while (done < 80) {
    long d = rand_int(rng, 2, 3);
    PhiNModule m = rand_supported_module(rng, 2, d, false);
    HodgePinkLattice q = rand_hp_lattice(rng, d, 1, -2, 2);
    Cocharacter mu = hodge_polygon(q);
    std::vector<Rat> l = l_vector(mu);
    for (const auto& s : stable_subspaces(m)) {
      SubObject sub = induced_subobject(m, q, s);
      SlopeData sl = t_invariants(sub.module, sub.lattice);
      if (sl.t_h < l[s.cols() - 1])
        return fail("subobject_hodge_bound", "t_H(sub) < l_i");
    }
    ++done;
  }
  return pass("subobject_hodge_bound");
}

namespace {

// weakly admissible instance by rejection: jumps are drawn so the full slopes
// match, then tested
struct WaInstance {
  PhiNModule m;
  HodgePinkLattice q;
};

std::optional<WaInstance> try_wa_instance(Rng& rng, long p, long d) {
  PhiNModule m = rand_supported_module(rng, p, d, false);
  Valuation v = padic_valuation(m.frobenius_power.det(), m.ctx);
  long total = Rat(v.value).get_num().get_si(); // integral for f = 1

  // random nonincreasing jumps summing to total
  std::vector<long> jumps(d, 0);
  long rest = total;
  for (long i = 0; i + 1 < d; ++i) {
    long x = rand_int(rng, -2, 2);
    jumps[i] = x;
    rest -= x;
  }
  jumps[d - 1] = rest;
  std::sort(jumps.rbegin(), jumps.rend());
  KFiltration f;
  f.d = d;
  f.components.push_back({"psi0", rand_invertible(rng, d), jumps});
  f.validate();
  HodgePinkLattice q = filtration_to_lattice(f);
  WaReport rep = is_weakly_admissible(m, q);
  if (!rep.weakly_admissible) return std::nullopt;
  return WaInstance{std::move(m), std::move(q)};
}

} // namespace

Result newton_forward(uint64_t seed) {
  Rng rng(seed);
  int done = 0;
  int attempts = 0;
  while (done < 100 && attempts < 20000) {
    ++attempts;
    long d = rand_int(rng, 1, 3);
    auto inst = try_wa_instance(rng, 2, d);
    if (!inst) continue;
    Cocharacter mu = hodge_polygon(inst->q);
    if (!bounded_by(inst->q, mu)) return fail("newton_forward", "polygon does not bound itself");
    NewtonPoint c = newton_point(inst->m);
    if (!newton_membership(c, mu))
      return fail("newton_forward", "weakly admissible point outside the stratum");
    ++done;
  }
  if (done < 100) return fail("newton_forward", "could not build 100 instances");
  return pass("newton_forward");
}

Result newton_reverse_rank2() {
  PrimeContext ctx(2);
  Cocharacter mu = Cocharacter::single({2, 0});
  // 20 stratum points: val(c_2) = 2 with val(c_1) >= 0
  std::vector<std::pair<Rat, Rat>> grid;
  std::vector<Rat> c2s = {Rat(4), Rat(-4), Rat(12), Rat(-12), Rat(20)};
  std::vector<Rat> c1s = {Rat(0), Rat(1), Rat(2), Rat(-3)};
  for (const auto& c2 : c2s)
    for (const auto& c1 : c1s) grid.emplace_back(c1, c2);

  for (const auto& [c1, c2] : grid) {
    // target charpoly X^2 + c1 X + c2; build a preimage and verify
    std::vector<Rat> roots = charpoly_rational_roots({c1, c2});
    RatMatrix f(2, 2);
    if (roots.size() == 2) {
      f.at(0, 0) = roots[0];
      f.at(1, 1) = roots[1];
    } else {
      f.at(0, 1) = -c2;
      f.at(1, 0) = 1;
      f.at(1, 1) = -c1;
    }
    PhiNModule m(1, ctx, f, RatMatrix(2, 2));
    // independent-pair lattice: p + t^{-2}(w + t w')[[t]] with w = e1 + e2 off
    // the eigenlines and w' = e1
    LaurentMatrix basis(2, 2, Var::t);
    basis.at(0, 0) = TruncatedLaurent::monomial(Var::t, -2, 1) +
                     TruncatedLaurent::monomial(Var::t, -1, 1);
    basis.at(1, 0) = TruncatedLaurent::monomial(Var::t, -2, 1);
    basis.at(1, 1) = TruncatedLaurent::constant(Var::t, 1);
    HodgePinkLattice q = HodgePinkLattice::make({{"psi0", basis}}, 2, 0);

    NewtonPoint np = newton_point(m);
    if (np.coefficients != std::vector<Rat>{c1, c2})
      return fail("newton_reverse_rank2", "charpoly mismatch");
    if (!newton_membership(np, mu)) return fail("newton_reverse_rank2", "grid point off stratum");
    if (!bounded_by(q, mu)) return fail("newton_reverse_rank2", "preimage not bounded by mu");
    WaReport rep = is_weakly_admissible(m, q);
    if (!rep.weakly_admissible)
      return fail("newton_reverse_rank2", "constructed preimage is not weakly admissible");
  }
  return pass("newton_reverse_rank2");
}

Result lambda_functional_equation() {
  for (long p : {2L, 3L, 5L}) {
    for (long e = 1; e <= 3; ++e) {
      for (long prec : {40L, 60L}) {
        EisensteinPoly ep;
        ep.lower.assign(e, Rat(0));
        ep.lower[0] = Rat(-p);
        if (e >= 2) ep.lower[1] = Rat(p);
        USeriesContext c(PrimeContext(p), ep, prec);
        TruncatedLaurent lam = lambda_series(c);
        if (lam.coeff(0) != 1) return fail("lambda_functional_equation", "lambda(0) != 1");
        TruncatedLaurent rhs = c.e_poly.normalized(prec) * lam.frobenius_substitute(c.ctx.p);
        TruncatedLaurent residual = (lam - rhs).truncated(prec - e);
        if (!residual.is_zero_within_window())
          return fail("lambda_functional_equation",
                      "residual nonzero for p=" + std::to_string(p) + " e=" + std::to_string(e));
      }
    }
  }
  return pass("lambda_functional_equation");
}

Result nnabla_commutator_samples(uint64_t seed) {
  Rng rng(seed);
  EisensteinPoly ep;
  ep.lower = {Rat(-2)};
  USeriesContext c(PrimeContext(2), ep, 40);
  for (int i = 0; i < 50; ++i) {
    TruncatedLaurent g(Var::u);
    long deg = rand_int(rng, 0, 8);
    for (long e = 0; e <= deg; ++e)
      if (rand_int(rng, 0, 1)) g.set_coeff(e, Rat(rand_int(rng, -5, 5)));
    TruncatedLaurent residual = nnabla_commutator(g, c);
    if (!residual.is_zero_within_window() || residual.precision() < 38)
      return fail("nnabla_commutator_samples", "commutation residual not certified zero");
  }
  return pass("nnabla_commutator_samples");
}

Result eta_inverse_identity(uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 40; ++i) {
    long d = rand_int(rng, 1, 4);
    RatMatrix n(d, d);
    for (long r = 0; r < d; ++r)
      for (long c = r + 1; c < d; ++c) n.at(r, c) = rand_int(rng, -3, 3);
    long prec = i < 8 ? 40 : 8;
    LaurentMatrix fwd = eta_matrix(n, prec, EtaDirection::forward);
    LaurentMatrix inv = eta_matrix(n, prec, EtaDirection::inverse);
    if (!(fwd * inv).agrees_with(LaurentMatrix::identity(d)) ||
        !(inv * fwd).agrees_with(LaurentMatrix::identity(d)))
      return fail("eta_inverse_identity", "eta * eta^{-1} != 1");
  }
  return pass("eta_inverse_identity");
}

Result eta_unipotence(uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 40; ++i) {
    long d = rand_int(rng, 1, 4);
    RatMatrix n(d, d);
    for (long r = 0; r < d; ++r)
      for (long c = r + 1; c < d; ++c) n.at(r, c) = rand_int(rng, -3, 3);
    LaurentMatrix fwd = eta_matrix(n, 8, EtaDirection::forward);
    LaurentMatrix delta = fwd - LaurentMatrix::identity(d);
    // (eta - 1)^d = 0
    LaurentMatrix power = LaurentMatrix::identity(d);
    for (long k = 0; k < d; ++k) power = power * delta;
    if (!power.is_zero_within_window()) return fail("eta_unipotence", "(eta - 1)^d != 0");
  }
  return pass("eta_unipotence");
}

Result zero_section_detection(uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 60; ++i) {
    long d = rand_int(rng, 1, 3);
    PhiNModule m = rand_supported_module(rng, 2, d, false);
    KFiltration f = rand_filtration(rng, d, 1, -2, 2);
    for (EtaConvention conv : {EtaConvention::eta, EtaConvention::id}) {
      HodgePinkLattice image = section_image(m, f, conv);
      if (!is_zero_section(m, image, conv))
        return fail("zero_section_detection", "section image not detected");
    }
  }
  // the independent-vector lattice is off the section
  LaurentMatrix basis(2, 2, Var::t);
  basis.at(0, 0) = TruncatedLaurent::monomial(Var::t, -2, 1);
  basis.at(1, 0) = TruncatedLaurent::monomial(Var::t, -1, 1);
  basis.at(1, 1) = TruncatedLaurent::constant(Var::t, 1);
  HodgePinkLattice q = HodgePinkLattice::make({{"psi0", basis}}, 2, 0);
  RatMatrix f2(2, 2);
  f2.at(0, 0) = f2.at(1, 1) = 2;
  PhiNModule m2(1, PrimeContext(2), f2, RatMatrix(2, 2));
  if (is_zero_section(m2, q)) return fail("zero_section_detection", "off-section lattice accepted");
  // rank one: every lattice is a section image
  Rng rng2(seed + 1);
  for (long k = -3; k <= 3; ++k) {
    LaurentMatrix b1(1, 1, Var::t);
    b1.at(0, 0) = TruncatedLaurent::monomial(Var::t, -k, 1);
    HodgePinkLattice q1 = HodgePinkLattice::make({{"psi0", b1}}, std::max(k, 0L), std::max(-k, 0L));
    RatMatrix f1(1, 1);
    f1.at(0, 0) = Rat(rand_int(rng2, 1, 5));
    PhiNModule m1(1, PrimeContext(2), f1, RatMatrix(1, 1));
    if (!is_zero_section(m1, q1)) return fail("zero_section_detection", "rank-1 lattice rejected");
  }
  return pass("zero_section_detection");
}

Result zero_section_basis_invariance(uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 30; ++i) {
    long d = rand_int(rng, 1, 3);
    PhiNModule m = rand_supported_module(rng, 2, d, false);
    HodgePinkLattice q = rand_hp_lattice(rng, d, 1, -2, 2);
    bool base = is_zero_section(m, q);
    std::vector<std::pair<std::string, LaurentMatrix>> comps;
    for (const auto& [lab, mat] : q.components) comps.emplace_back(lab, mat * rand_unimodular(rng, d));
    HodgePinkLattice q2 = HodgePinkLattice::make(std::move(comps), q.m, q.n);
    if (is_zero_section(m, q2) != base)
      return fail("zero_section_basis_invariance", "verdict changed under basis change");
  }
  return pass("zero_section_basis_invariance");
}

Result hn_properties(uint64_t seed) {
  Rng rng(seed);
  int done = 0;
  while (done < 60) {
    long d = rand_int(rng, 2, 3);
    PhiNModule m = rand_supported_module(rng, 2, d, false);
    HodgePinkLattice q = rand_hp_lattice(rng, d, 1, -2, 2);
    if (done % 2 == 0) {
      // engineered integral slope: jumps matched to val(det F) and then shifted
      // uniformly, so the normalization clause below always applies
      Valuation v = padic_valuation(m.frobenius_power.det(), m.ctx);
      long total = Rat(v.value).get_num().get_si();
      std::vector<long> jumps(d, 0);
      long rest = total;
      for (long i = 0; i + 1 < d; ++i) {
        jumps[i] = rand_int(rng, -2, 2);
        rest -= jumps[i];
      }
      jumps[d - 1] = rest;
      long shift = rand_int(rng, -1, 1);
      for (auto& j : jumps) j += shift;
      std::sort(jumps.rbegin(), jumps.rend());
      KFiltration f;
      f.d = d;
      f.components.push_back({"psi0", rand_invertible(rng, d), jumps});
      f.validate();
      q = filtration_to_lattice(f);
    }
    HNFiltration hn = harder_narasimhan(m, q);
    for (size_t i = 0; i + 1 < hn.subquotients.size(); ++i)
      if (!(hn.subquotients[i].sigma > hn.subquotients[i + 1].sigma))
        return fail("hn_properties", "subquotient sigmas not strictly decreasing");

    // trivial chain iff weakly admissible after twisting the slope to zero
    SlopeData full = t_invariants(m, q);
    Rat sigma = full.sigma;
    if (sigma.get_den() == 1) {
      long s = sigma.get_num().get_si();
      Rat scale = 1;
      for (long k = 0; k < std::abs(s); ++k) scale *= 2;
      if (s < 0) scale = 1 / scale;
      PhiNModule twisted(m.f, m.ctx, m.frobenius_power * scale, m.monodromy);
      WaReport rep = is_weakly_admissible(twisted, q);
      if (rep.weakly_admissible != hn.semistable())
        return fail("hn_properties", "semistability disagrees with normalized wa");
    }

    // enumeration-order independence: conjugating by a permutation relabels the
    // stable subspaces; the chain must map onto the original one
    RatMatrix perm(d, d);
    std::vector<long> idx(d);
    for (long i = 0; i < d; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (long i = 0; i < d; ++i) perm.at(idx[i], i) = 1;
    RatMatrix pi = perm.inverse();
    PhiNModule mc(m.f, m.ctx, pi * m.frobenius_power * perm, pi * m.monodromy * perm);
    std::vector<std::pair<std::string, LaurentMatrix>> comps;
    for (const auto& [lab, mat] : q.components)
      comps.emplace_back(lab, LaurentMatrix::from_rat(pi) * mat);
    HodgePinkLattice qc = HodgePinkLattice::make(std::move(comps), q.m, q.n);
    HNFiltration hnc = harder_narasimhan(mc, qc);
    if (hnc.chain.size() != hn.chain.size())
      return fail("hn_properties", "chain length changed under relabeling");
    for (size_t i = 0; i < hn.chain.size(); ++i) {
      RatMatrix mapped = perm * hnc.chain[i];
      if (!mapped.spans(hn.chain[i]) || !hn.chain[i].spans(mapped))
        return fail("hn_properties", "chain subspaces changed under relabeling");
    }
    ++done;
  }
  return pass("hn_properties");
}

Result cyclotomic_fixtures() {
  PrimeContext ctx(2);
  // D_st of the cyclotomic character: F = 1/p, q = t p
  RatMatrix f1(1, 1);
  f1.at(0, 0) = Rat(1, 2);
  PhiNModule m1(1, ctx, f1, RatMatrix(1, 1));
  LaurentMatrix b1(1, 1, Var::t);
  b1.at(0, 0) = TruncatedLaurent::monomial(Var::t, 1, 1);
  HodgePinkLattice q1 = HodgePinkLattice::make({{"psi0", b1}}, 0, 1);
  SlopeData s1 = t_invariants(m1, q1);
  if (s1.t_n != -1 || s1.t_h != -1 || s1.sigma != 0)
    return fail("cyclotomic_fixtures", "D_st slopes wrong");
  if (!is_weakly_admissible(m1, q1).weakly_admissible)
    return fail("cyclotomic_fixtures", "D_st not weakly admissible");
  if (!is_zero_section(m1, q1)) return fail("cyclotomic_fixtures", "D_st off the section");

  // dual: F = p, q = t^{-1} p
  RatMatrix f2(1, 1);
  f2.at(0, 0) = Rat(2);
  PhiNModule m2(1, ctx, f2, RatMatrix(1, 1));
  LaurentMatrix b2(1, 1, Var::t);
  b2.at(0, 0) = TruncatedLaurent::monomial(Var::t, -1, 1);
  HodgePinkLattice q2 = HodgePinkLattice::make({{"psi0", b2}}, 1, 0);
  SlopeData s2 = t_invariants(m2, q2);
  if (s2.t_n != 1 || s2.t_h != 1 || s2.sigma != 0)
    return fail("cyclotomic_fixtures", "dual slopes wrong");
  if (!is_weakly_admissible(m2, q2).weakly_admissible)
    return fail("cyclotomic_fixtures", "dual not weakly admissible");
  if (!is_zero_section(m2, q2)) return fail("cyclotomic_fixtures", "dual off the section");

  Cocharacter poly = hodge_polygon(q2);
  if (poly.weight("psi0") != std::vector<long>{1})
    return fail("cyclotomic_fixtures", "dual polygon wrong");
  return pass("cyclotomic_fixtures");
}

Result rank2_dichotomy() {
  PrimeContext ctx(2);
  RatMatrix f(2, 2);
  f.at(0, 0) = f.at(1, 1) = 2;
  PhiNModule m(1, ctx, f, RatMatrix(2, 2));

  // independent vectors (u,v) = e1, (u',v') = e2
  LaurentMatrix indep(2, 2, Var::t);
  indep.at(0, 0) = TruncatedLaurent::monomial(Var::t, -2, 1);
  indep.at(1, 0) = TruncatedLaurent::monomial(Var::t, -1, 1);
  indep.at(1, 1) = TruncatedLaurent::constant(Var::t, 1);
  HodgePinkLattice qi = HodgePinkLattice::make({{"psi0", indep}}, 2, 0);
  WaReport ri = is_weakly_admissible(m, qi);
  if (!ri.weakly_admissible) return fail("rank2_dichotomy", "independent case not wa");

  // dependent vectors: q = p + t^{-2}(1 + t)(e1)[[t]]
  LaurentMatrix dep(2, 2, Var::t);
  dep.at(0, 0) = TruncatedLaurent::monomial(Var::t, -2, 1) +
                 TruncatedLaurent::monomial(Var::t, -1, 1);
  dep.at(1, 1) = TruncatedLaurent::constant(Var::t, 1);
  HodgePinkLattice qd = HodgePinkLattice::make({{"psi0", dep}}, 2, 0);
  WaReport rd = is_weakly_admissible(m, qd);
  if (rd.weakly_admissible) return fail("rank2_dichotomy", "dependent case claimed wa");
  if (!rd.witness) return fail("rank2_dichotomy", "no witness reported");
  RatMatrix span_u(2, 1);
  span_u.at(0, 0) = 1; // span(u, v) = span(e1)
  if (!rd.witness->spans(span_u) || !span_u.spans(*rd.witness))
    return fail("rank2_dichotomy", "witness is not span(u, v)");
  return pass("rank2_dichotomy");
}

std::vector<Result> run_all(uint64_t seed) {
  std::vector<Result> out;
  auto add = [&](const char* name, std::function<Result()> fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("exception: ") + e.what()});
    }
  };
  add("valuation_laws", [&] { return valuation_laws(seed + 1); });
  add("series_ring_laws", [&] { return series_ring_laws(seed + 2); });
  add("smith_invariance", [&] { return smith_invariance(seed + 3); });
  add("exterior_divisors", [&] { return exterior_divisors(seed + 4); });
  add("intersection_membership", [&] { return intersection_membership(seed + 5); });
  add("module_validation_fuzz", [&] { return module_validation_fuzz(seed + 6); });
  add("jordan_roundtrip", [&] { return jordan_roundtrip(); });
  add("adjoint_invariance", [&] { return adjoint_invariance(seed + 7); });
  add("degeneration_cases", [&] { return degeneration_cases(seed + 8); });
  add("bruhat_partial_order", [&] { return bruhat_partial_order(); });
  add("l_vector_agreement", [&] { return l_vector_agreement(); });
  add("l_vector_monotonicity", [&] { return l_vector_monotonicity(); });
  add("gap_lemma_bruteforce", [&] { return gap_lemma_bruteforce(); });
  add("dimension_cross_check", [&] { return dimension_cross_check(seed + 9); });
  add("filtration_roundtrip", [&] { return filtration_roundtrip(seed + 10); });
  add("minuscule_roundtrip", [&] { return minuscule_roundtrip(seed + 11); });
  add("boundedness_duality", [&] { return boundedness_duality(seed + 12); });
  add("boundedness_nesting", [&] { return boundedness_nesting(seed + 13); });
  add("wa_section_compatibility", [&] { return wa_section_compatibility(seed + 14); });
  add("wa_preimage_inclusion", [&] { return wa_preimage_inclusion(seed + 15); });
  add("subobject_hodge_bound", [&] { return subobject_hodge_bound(seed + 16); });
  add("newton_forward", [&] { return newton_forward(seed + 17); });
  add("newton_reverse_rank2", [&] { return newton_reverse_rank2(); });
  add("lambda_functional_equation", [&] { return lambda_functional_equation(); });
  add("nnabla_commutator_samples", [&] { return nnabla_commutator_samples(seed + 18); });
  add("eta_inverse_identity", [&] { return eta_inverse_identity(seed + 19); });
  add("eta_unipotence", [&] { return eta_unipotence(seed + 20); });
  add("zero_section_detection", [&] { return zero_section_detection(seed + 21); });
  add("zero_section_basis_invariance", [&] { return zero_section_basis_invariance(seed + 22); });
  add("hn_properties", [&] { return hn_properties(seed + 23); });
  add("cyclotomic_fixtures", [&] { return cyclotomic_fixtures(); });
  add("rank2_dichotomy", [&] { return rank2_dichotomy(); });
  return out;
}

} // namespace hodgepink::selftest
