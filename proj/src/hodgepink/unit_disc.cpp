#include "hodgepink/unit_disc.hpp"

namespace hodgepink {

void EisensteinPoly::validate(const PrimeContext& ctx) const {
  if (lower.empty()) throw InputError("Eisenstein polynomial must have degree >= 1");
  Valuation v0 = padic_valuation(lower[0], ctx);
  if (v0.infinite || v0.value != 1) throw InputError("val(E(0)) must equal 1");
  for (const auto& a : lower) {
    Valuation v = padic_valuation(a, ctx);
    if (!v.infinite && v.value < 1) throw InputError("all lower coefficients need val >= 1");
  }
}

TruncatedLaurent EisensteinPoly::as_series() const {
  TruncatedLaurent s(Var::u);
  for (size_t i = 0; i < lower.size(); ++i) s.set_coeff(static_cast<long>(i), lower[i]);
  s.set_coeff(degree(), 1);
  return s;
}

TruncatedLaurent EisensteinPoly::normalized(long prec) const {
  return (as_series() * (1 / constant())).truncated(prec);
}

USeriesContext::USeriesContext(PrimeContext c, EisensteinPoly e, long prec)
    : ctx(std::move(c)), e_poly(std::move(e)), precision(prec) {
  e_poly.validate(ctx);
  if (precision < e_poly.degree() + 1)
    throw InputError("precision must be at least deg E + 1");
}

TruncatedLaurent lambda_series(const USeriesContext& c) {
  long p = c.ctx.p.get_si();
  // lowest positive degree of E/E(0) - 1 controls when a factor becomes 1 mod u^P
  long l = c.e_poly.degree();
  for (long i = 1; i < c.e_poly.degree(); ++i)
    if (c.e_poly.lower[i] != 0) {
      l = i;
      break;
    }
  TruncatedLaurent acc = TruncatedLaurent::constant(Var::u, 1, c.precision);
  TruncatedLaurent factor = c.e_poly.normalized(c.precision);
  long scale = 1;
  while (scale * l < c.precision) {
    acc = acc * factor;
    factor = factor.frobenius_substitute(c.ctx.p).truncated(c.precision);
    scale *= p;
  }
  return acc;
}

TruncatedLaurent nnabla(const TruncatedLaurent& g, const USeriesContext& c) {
  TruncatedLaurent lam = lambda_series(c);
  return (lam * g.derivative()).shifted(1) * Rat(-1);
}

TruncatedLaurent nnabla_commutator(const TruncatedLaurent& g, const USeriesContext& c) {
  Rat p(c.ctx.p);
  TruncatedLaurent lhs = nnabla(g.frobenius_substitute(c.ctx.p), c);
  TruncatedLaurent rhs =
      c.e_poly.normalized(c.precision) * nnabla(g, c).frobenius_substitute(c.ctx.p) * p;
  return (lhs - rhs).truncated(c.precision);
}

LaurentMatrix eta_matrix(const RatMatrix& n0, long t_precision, EtaDirection dir) {
  long d = n0.rows();
  if (!n0.power(d).is_zero()) throw NotNilpotent("eta needs a nilpotent matrix");
  TruncatedLaurent log1mt =
      TruncatedLaurent::monomial(Var::t, 1, 1, t_precision).log_one_minus();
  LaurentMatrix acc = LaurentMatrix::identity(d, Var::t);
  RatMatrix n_pow = RatMatrix::identity(d);
  TruncatedLaurent log_pow = TruncatedLaurent::constant(Var::t, 1, t_precision);
  Rat factorial = 1;
  for (long i = 1; i < d; ++i) {
    n_pow = n_pow * n0;
    if (n_pow.is_zero()) break;
    log_pow = log_pow * log1mt;
    factorial *= i;
    Rat sign = (dir == EtaDirection::forward && i % 2 == 1) ? Rat(-1) : Rat(1);
    acc = acc + LaurentMatrix::from_rat(n_pow, Var::t) * (log_pow * (sign / factorial));
  }
  return acc;
}

TruncatedLaurent rank1_twist_factor(long n, const USeriesContext& c) {
  TruncatedLaurent base = c.e_poly.as_series() * (Rat(c.ctx.p) / c.e_poly.constant());
  if (n >= 0) return base.pow(n);
  return base.truncated(c.precision).pow(n, c.precision);
}

namespace {

LaurentMatrix eta_for_component(const RatMatrix& n0, long window, EtaDirection dir) {
  return eta_matrix(n0, window, dir);
}

} // namespace

bool is_zero_section(const PhiNModule& m, const HodgePinkLattice& q, EtaConvention convention) {
  require_valid(m);
  HodgePinkLattice probe = q;
  if (convention == EtaConvention::id && !m.monodromy.is_zero()) {
    if (m.f != 1)
      throw InputError("identity convention is implemented for unramified degree f = 1");
    long window = q.m + q.n + q.d + 6;
    LaurentMatrix eta = eta_for_component(m.monodromy, window, EtaDirection::forward);
    std::vector<std::pair<std::string, LaurentMatrix>> comps;
    for (const auto& [lab, mat] : q.components) comps.emplace_back(lab, eta * mat);
    probe = HodgePinkLattice::make(std::move(comps), q.m + q.d, q.n + q.d);
  }
  HodgePinkLattice image = filtration_to_lattice(lattice_to_filtration(probe));
  return same_hp_lattice(probe, image);
}

HodgePinkLattice section_image(const PhiNModule& m, const KFiltration& fil,
                               EtaConvention convention) {
  HodgePinkLattice q = filtration_to_lattice(fil);
  if (convention == EtaConvention::eta || m.monodromy.is_zero()) return q;
  if (m.f != 1)
    throw InputError("identity convention is implemented for unramified degree f = 1");
  long window = q.m + q.n + q.d + 6;
  LaurentMatrix eta_inv = eta_for_component(m.monodromy, window, EtaDirection::inverse);
  std::vector<std::pair<std::string, LaurentMatrix>> comps;
  for (const auto& [lab, mat] : q.components) comps.emplace_back(lab, eta_inv * mat);
  return HodgePinkLattice::make(std::move(comps), q.m + q.d, q.n + q.d);
}

} // namespace hodgepink
