#include "hodgepink/hodge_pink.hpp"

#include <algorithm>

namespace hodgepink {

std::vector<std::string> HodgePinkLattice::labels() const {
  std::vector<std::string> out;
  for (const auto& [lab, _] : components) out.push_back(lab);
  return out;
}

const LaurentMatrix& HodgePinkLattice::component(const std::string& label) const {
  for (const auto& [lab, mat] : components)
    if (lab == label) return mat;
  throw InputError("unknown embedding label " + label);
}

HodgePinkLattice HodgePinkLattice::single(LaurentMatrix basis) {
  long lo = std::min<long>(basis.min_entry_order(), 0);
  long hi = std::max<long>(basis.max_entry_degree(), 0);
  std::vector<std::pair<std::string, LaurentMatrix>> comps;
  comps.emplace_back("psi0", std::move(basis));
  // a crude but safe window certificate for a matrix with entries in [lo, hi]
  long d = comps[0].second.rows();
  return make(std::move(comps), -lo * d + hi * (d - 1), hi * d - lo * (d - 1));
}

HodgePinkLattice HodgePinkLattice::make(std::vector<std::pair<std::string, LaurentMatrix>> comps,
                                        long m, long n) {
  HodgePinkLattice q;
  if (comps.empty()) throw InputError("lattice needs at least one component");
  q.d = comps[0].second.rows();
  q.m = m;
  q.n = n;
  q.components = std::move(comps);
  for (const auto& [lab, mat] : q.components)
    if (mat.rows() != q.d || mat.cols() != q.d)
      throw ShapeMismatch("component " + lab + " is not d x d");
  return q;
}

std::vector<std::string> KFiltration::labels() const {
  std::vector<std::string> out;
  for (const auto& c : components) out.push_back(c.label);
  return out;
}

const KFiltration::Component& KFiltration::component(const std::string& label) const {
  for (const auto& c : components)
    if (c.label == label) return c;
  throw InputError("unknown embedding label " + label);
}

void KFiltration::validate() const {
  if (components.empty()) throw InputError("filtration needs at least one component");
  for (const auto& c : components) {
    if (c.basis.rows() != d || c.basis.cols() != d)
      throw ShapeMismatch("filtration basis at " + c.label + " is not d x d");
    if (static_cast<long>(c.jumps.size()) != d)
      throw ShapeMismatch("jump vector length mismatch at " + c.label);
    for (size_t j = 0; j + 1 < c.jumps.size(); ++j)
      if (c.jumps[j] < c.jumps[j + 1]) throw InputError("jumps not nonincreasing at " + c.label);
    if (c.basis.rank() != d) throw RankDeficient("filtration basis at " + c.label + " is singular");
  }
}

KFiltration KFiltration::single(RatMatrix basis, std::vector<long> jumps) {
  KFiltration f;
  f.d = basis.rows();
  f.components.push_back({"psi0", std::move(basis), std::move(jumps)});
  f.validate();
  return f;
}

LatticeReport validate_lattice(const HodgePinkLattice& q) {
  for (const auto& [lab, mat] : q.components) {
    if (laurent_rank(mat) != q.d) return {false, "RankDeficient"};
    // q <= t^{-m} p: all entries of t^m Q integral
    if (!mat.shifted(q.m).all_orders_at_least(0)) return {false, "WindowViolated"};
    // t^n p <= q: Q^{-1} t^n integral
    LaurentMatrix inv = laurent_inverse(mat, default_working_precision(mat));
    if (!inv.shifted(q.n).all_orders_at_least(0)) return {false, "WindowViolated"};
  }
  return {true, ""};
}

void require_valid(const HodgePinkLattice& q) {
  LatticeReport rep = validate_lattice(q);
  if (rep.valid) return;
  if (rep.failure == "RankDeficient") throw RankDeficient("lattice component not of full rank");
  throw WindowViolated("window certificate does not hold");
}

Cocharacter hodge_polygon(const HodgePinkLattice& q, long e, long f) {
  Cocharacter mu;
  mu.d = q.d;
  mu.f = f;
  mu.e = e > 0 ? e : static_cast<long>(q.components.size()) / f;
  if (mu.e * mu.f != static_cast<long>(q.components.size()))
    throw ShapeMismatch("e*f does not match the number of components");
  for (const auto& [lab, mat] : q.components) {
    std::vector<long> exps = smith_exponents(mat);
    std::vector<long> w(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) w[i] = -exps[i];
    // negation of a nondecreasing list is nonincreasing
    mu.labels.push_back(lab);
    mu.weights[lab] = std::move(w);
  }
  mu.validate();
  return mu;
}

Cocharacter filtration_type(const KFiltration& fil, long e, long f) {
  Cocharacter mu;
  mu.d = fil.d;
  mu.f = f;
  mu.e = e > 0 ? e : static_cast<long>(fil.components.size()) / f;
  if (mu.e * mu.f != static_cast<long>(fil.components.size()))
    throw ShapeMismatch("e*f does not match the number of components");
  for (const auto& c : fil.components) {
    mu.labels.push_back(c.label);
    mu.weights[c.label] = c.jumps; // already nonincreasing
  }
  mu.validate();
  return mu;
}

bool bounded_by(const HodgePinkLattice& q, const Cocharacter& mu, BoundMethod method) {
  if (mu.d != q.d) throw ShapeMismatch("rank mismatch");
  if (mu.labels != q.labels()) throw ShapeMismatch("embedding labels differ");
  for (const auto& [lab, mat] : q.components) {
    const auto& w = mu.weight(lab);
    if (method == BoundMethod::primal) {
      long head = 0;
      for (long j = 1; j <= q.d; ++j) {
        head += w[j - 1];
        LaurentMatrix wedge = exterior_lattice(mat, j);
        if (!wedge.all_orders_at_least(-head)) return false;
        if (j == q.d) {
          const auto& det = wedge.at(0, 0);
          if (!det.has_certified_leading_term() || det.order() != -head) return false;
        }
      }
    } else {
      long abs_total = 0;
      for (const auto& l2 : mu.labels)
        for (long v : mu.weight(l2)) abs_total += std::abs(v);
      LaurentMatrix inv = laurent_inverse(mat, default_working_precision(mat) + abs_total + 2);
      long tail = 0;
      for (long j = 1; j <= q.d; ++j) {
        tail += w[q.d - j];
        LaurentMatrix wedge = exterior_lattice(inv, j);
        if (!wedge.all_orders_at_least(tail)) return false;
        if (j == q.d) {
          const auto& det = wedge.at(0, 0);
          if (!det.has_certified_leading_term() || det.order() != tail) return false;
        }
      }
    }
  }
  return true;
}

HodgePinkLattice filtration_to_lattice(const KFiltration& fil) {
  fil.validate();
  std::vector<std::pair<std::string, LaurentMatrix>> comps;
  long max_jump = 0, min_jump = 0;
  for (const auto& c : fil.components) {
    LaurentMatrix basis = LaurentMatrix::from_rat(c.basis, Var::t);
    LaurentMatrix q(fil.d, fil.d, Var::t);
    for (long j = 0; j < fil.d; ++j) {
      max_jump = std::max(max_jump, c.jumps[j]);
      min_jump = std::min(min_jump, c.jumps[j]);
      for (long i = 0; i < fil.d; ++i) q.at(i, j) = basis.at(i, j).shifted(-c.jumps[j]);
    }
    comps.emplace_back(c.label, std::move(q));
  }
  return HodgePinkLattice::make(std::move(comps), std::max<long>(max_jump, 0),
                                std::max<long>(-min_jump, 0));
}

KFiltration lattice_to_filtration(const HodgePinkLattice& q) {
  KFiltration fil;
  fil.d = q.d;
  for (const auto& [lab, mat] : q.components) {
    SmithForm sf = smith_form(mat);
    if (sf.rank != q.d) throw RankDeficient("lattice component not of full rank");
    // q = U^{-1} diag(t^{a_k}) [[t]]^d, so the flag is adapted to the columns of
    // U^{-1} mod t, column k carrying jump -a_k; Smith order makes them nonincreasing.
    LaurentMatrix u_inv = laurent_inverse(sf.left, q.d + q.m + q.n + 4);
    RatMatrix basis = u_inv.constant_term();
    std::vector<long> jumps(sf.exponents.size());
    for (size_t k = 0; k < jumps.size(); ++k) jumps[k] = -sf.exponents[k];
    fil.components.push_back({lab, std::move(basis), std::move(jumps)});
  }
  fil.validate();
  return fil;
}

bool same_filtration(const KFiltration& a, const KFiltration& b) {
  if (a.d != b.d || a.labels() != b.labels()) return false;
  for (const auto& ca : a.components) {
    const auto& cb = b.component(ca.label);
    if (ca.jumps != cb.jumps) return false;
    // flags agree: span of columns with jump >= i coincide for every jump level
    for (long level : ca.jumps) {
      std::vector<long> ia, ib;
      for (long j = 0; j < a.d; ++j) {
        if (ca.jumps[j] >= level) ia.push_back(j);
        if (cb.jumps[j] >= level) ib.push_back(j);
      }
      RatMatrix sa = ca.basis.cols_subset(ia);
      RatMatrix sb = cb.basis.cols_subset(ib);
      if (!sa.spans(sb) || !sb.spans(sa)) return false;
    }
  }
  return true;
}

bool same_hp_lattice(const HodgePinkLattice& a, const HodgePinkLattice& b) {
  if (a.d != b.d || a.labels() != b.labels()) return false;
  for (const auto& [lab, mat] : a.components)
    if (!same_lattice(mat, b.component(lab))) return false;
  return true;
}

} // namespace hodgepink
