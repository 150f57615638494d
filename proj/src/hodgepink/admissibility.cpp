#include "hodgepink/admissibility.hpp"

#include <algorithm>

namespace hodgepink {

namespace {

Rat val_or_throw(const Rat& x, const PrimeContext& ctx) {
  Valuation v = padic_valuation(x, ctx);
  if (v.infinite) throw SingularFrobenius("zero determinant");
  return v.value;
}

Rat lattice_t_h(const HodgePinkLattice& q) {
  Rat acc = 0;
  for (const auto& [lab, mat] : q.components) {
    long h = 0;
    for (long a : smith_exponents(mat)) h -= a;
    acc += h;
  }
  return acc / static_cast<long>(q.components.size());
}

bool is_scalar(const RatMatrix& f) {
  for (long i = 0; i < f.rows(); ++i)
    for (long j = 0; j < f.cols(); ++j)
      if (f.at(i, j) != (i == j ? f.at(0, 0) : Rat(0))) return false;
  return true;
}

} // namespace

SlopeData t_invariants(const PhiNModule& m, const HodgePinkLattice& q) {
  require_valid(m);
  if (q.d != m.rank()) throw ShapeMismatch("rank mismatch between module and lattice");
  SlopeData s;
  s.rank = m.rank();
  s.t_n = val_or_throw(m.frobenius_power.det(), m.ctx) / m.f;
  s.t_h = lattice_t_h(q);
  s.sigma = (s.t_h - s.t_n) / s.rank;
  return s;
}

SlopeData t_invariants(const PhiNModule& m, const KFiltration& fil) {
  require_valid(m);
  if (fil.d != m.rank()) throw ShapeMismatch("rank mismatch between module and filtration");
  SlopeData s;
  s.rank = m.rank();
  s.t_n = val_or_throw(m.frobenius_power.det(), m.ctx) / m.f;
  Rat acc = 0;
  for (const auto& c : fil.components)
    for (long j : c.jumps) acc += j;
  s.t_h = acc / static_cast<long>(fil.components.size());
  s.sigma = (s.t_h - s.t_n) / s.rank;
  return s;
}

std::vector<RatMatrix> stable_subspaces(const PhiNModule& m) {
  require_valid(m);
  long d = m.rank();
  if (d == 1) return {};

  std::vector<Rat> roots = charpoly_rational_roots(m.frobenius_power.charpoly());

  if (static_cast<long>(roots.size()) == d) {
    std::vector<Rat> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

    if (distinct) {
      // class (i): eigenvector-subset spans that are closed under N0
      RatMatrix vecs(d, d);
      for (long i = 0; i < d; ++i) {
        RatMatrix shifted = m.frobenius_power;
        for (long k = 0; k < d; ++k) shifted.at(k, k) -= sorted[i];
        RatMatrix ker = shifted.kernel_basis();
        for (long k = 0; k < d; ++k) vecs.at(k, i) = ker.at(k, 0);
      }
      RatMatrix n_eig = vecs.inverse() * m.monodromy * vecs;
      std::vector<RatMatrix> out;
      for (long mask = 1; mask + 1 < (1L << d); ++mask) {
        std::vector<long> idx;
        for (long i = 0; i < d; ++i)
          if (mask & (1L << i)) idx.push_back(i);
        bool stable = true;
        for (long j : idx) {
          for (long i = 0; i < d && stable; ++i)
            if (n_eig.at(i, j) != 0 && std::find(idx.begin(), idx.end(), i) == idx.end())
              stable = false;
          if (!stable) break;
        }
        if (stable) out.push_back(vecs.cols_subset(idx));
      }
      return out;
    }

    const Rat& c0 = sorted[0];
    if (std::all_of(sorted.begin(), sorted.end(), [&](const Rat& r) { return r == c0; })) {
      // class (ii): single eigenvalue; the unipotent part must be one Jordan
      // chain, whose invariant subspaces are the kernel flag
      RatMatrix nilp = m.frobenius_power;
      for (long k = 0; k < d; ++k) nilp.at(k, k) -= c0;
      if (nilp.is_zero())
        throw UnsupportedSpectrum(
            "scalar Frobenius in rank >= 2: every subspace is stable (infinite list)");
      if (nilpotent_jordan_type(nilp) != std::vector<long>{d})
        throw UnsupportedSpectrum(
            "single eigenvalue with non-cyclic unipotent part: stable subspaces form a family");
      std::vector<RatMatrix> out;
      for (long k = 1; k < d; ++k) out.push_back(nilp.power(k).kernel_basis());
      return out;
    }
    throw UnsupportedSpectrum("repeated eigenvalues with distinct values are not supported");
  }
  // rank two with an irreducible charpoly: a stable line would carry a rational
  // eigenvalue, so the list is provably empty
  if (d == 2 && roots.empty()) return {};
  throw UnsupportedSpectrum("charpoly of F does not split into rational linear factors");
}

PhiNModule induced_module(const PhiNModule& m, const RatMatrix& s) {
  long d = m.rank(), k = s.cols();
  if (s.rows() != d || k < 1 || k > d) throw ShapeMismatch("subspace basis shape");
  RatMatrix ext = s.completed_to_basis();
  RatMatrix inv = ext.inverse();
  auto restrict_to = [&](const RatMatrix& op) {
    RatMatrix coords = inv * (op * s);
    for (long i = k; i < d; ++i)
      for (long j = 0; j < k; ++j)
        if (coords.at(i, j) != 0) throw NotStable("subspace is not stable under the operator");
    RatMatrix top(k, k);
    for (long i = 0; i < k; ++i)
      for (long j = 0; j < k; ++j) top.at(i, j) = coords.at(i, j);
    return top;
  };
  return PhiNModule(m.f, m.ctx, restrict_to(m.frobenius_power), restrict_to(m.monodromy));
}

SubObject induced_subobject(const PhiNModule& m, const HodgePinkLattice& q, const RatMatrix& s) {
  PhiNModule sub = induced_module(m, s);
  std::vector<std::pair<std::string, LaurentMatrix>> comps;
  for (const auto& [lab, mat] : q.components)
    comps.emplace_back(lab, lattice_intersection(mat, s));
  return SubObject{std::move(sub), HodgePinkLattice::make(std::move(comps), q.m, q.n)};
}

KFiltration induced_filtration(const KFiltration& fil, const RatMatrix& s) {
  long d = fil.d, k = s.cols();
  KFiltration out;
  out.d = k;
  RatMatrix s_inv = s.completed_to_basis().inverse();
  for (const auto& c : fil.components) {
    std::vector<long> levels;
    for (long j : c.jumps)
      if (levels.empty() || levels.back() != j) levels.push_back(j);

    RatMatrix basis(k, 0);
    std::vector<long> jumps;
    RatMatrix prev(d, 0);
    for (long level : levels) {
      std::vector<long> idx;
      for (long j = 0; j < d; ++j)
        if (c.jumps[j] >= level) idx.push_back(j);
      RatMatrix step = c.basis.cols_subset(idx);
      // intersection of column spans via the kernel of [step | -s]
      RatMatrix ker = step.hconcat(s * Rat(-1)).kernel_basis();
      RatMatrix inter(d, ker.cols());
      for (long col = 0; col < ker.cols(); ++col)
        for (long i = 0; i < d; ++i) {
          Rat acc = 0;
          for (long j = 0; j < step.cols(); ++j) acc += step.at(i, j) * ker.at(j, col);
          inter.at(i, col) = acc;
        }
      RatMatrix span = inter.column_span_basis();
      for (long col = 0; col < span.cols(); ++col) {
        RatMatrix cand(d, 1);
        for (long i = 0; i < d; ++i) cand.at(i, 0) = span.at(i, col);
        if (prev.cols() > 0 && prev.spans(cand)) continue;
        prev = prev.cols() == 0 ? cand : prev.hconcat(cand);
        RatMatrix coords = s_inv * cand;
        RatMatrix top(k, 1);
        for (long i = 0; i < k; ++i) top.at(i, 0) = coords.at(i, 0);
        basis = basis.cols() == 0 ? top : basis.hconcat(top);
        jumps.push_back(level);
      }
    }
    if (basis.cols() != k) throw RankDeficient("induced filtration is not exhaustive");
    out.components.push_back({c.label, std::move(basis), std::move(jumps)});
  }
  out.validate();
  return out;
}

namespace {

// C_h = {constant w : t^{-h} w in q_psi} for h in [h_lo, h_hi], as kernels of
// the coefficient constraints on Q^{-1} w below t^h.
std::vector<RatMatrix> jump_subspaces(const LaurentMatrix& q_comp, long h_lo, long h_hi, long d) {
  long guard = h_hi + d + 6;
  LaurentMatrix inv = laurent_inverse(q_comp, default_working_precision(q_comp) + guard);
  if (inv.min_entry_precision() < h_hi)
    throw InsufficientPrecision("jump subspaces need coefficients up to t^" +
                                std::to_string(h_hi));
  std::vector<RatMatrix> out;
  for (long h = h_lo; h <= h_hi; ++h) {
    std::vector<std::vector<Rat>> rows;
    for (long i = 0; i < d; ++i) {
      long lowest = h;
      for (long k = 0; k < d; ++k)
        if (inv.at(i, k).has_certified_leading_term())
          lowest = std::min(lowest, inv.at(i, k).order());
      for (long j = lowest; j < h; ++j) {
        std::vector<Rat> row(d);
        bool nonzero = false;
        for (long k = 0; k < d; ++k) {
          row[k] = inv.at(i, k).coeff(j);
          if (row[k] != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
    if (rows.empty()) {
      out.push_back(RatMatrix::identity(d));
      continue;
    }
    RatMatrix constraints(static_cast<long>(rows.size()), d);
    for (size_t r = 0; r < rows.size(); ++r)
      for (long k = 0; k < d; ++k) constraints.at(r, k) = rows[r][k];
    out.push_back(constraints.kernel_basis());
  }
  return out;
}

// Scalar Frobenius, zero monodromy, rank two: every line is stable, and the
// Hodge number of a line is read from the jump subspaces.
WaReport wa_scalar_rank2(const PhiNModule& m, const HodgePinkLattice& q, const SlopeData& full) {
  WaReport rep;
  rep.full = full;
  Rat line_t_n = val_or_throw(m.frobenius_power.at(0, 0), m.ctx) / m.f;
  long d = 2;
  long ef = static_cast<long>(q.components.size());

  std::vector<std::vector<RatMatrix>> jumps;
  for (const auto& [lab, mat] : q.components)
    jumps.push_back(jump_subspaces(mat, -q.n, q.m, d));

  auto line_hodge = [&](const RatMatrix& line) -> Rat {
    Rat acc = 0;
    for (const auto& comp : jumps) {
      long best = -q.n;
      for (long h = -q.n; h <= q.m; ++h) {
        const RatMatrix& c_h = comp[h + q.n];
        if (c_h.cols() > 0 && c_h.spans(line)) best = h;
      }
      acc += best;
    }
    return acc / ef;
  };

  std::vector<RatMatrix> candidates;
  for (const auto& comp : jumps)
    for (const auto& c_h : comp)
      if (c_h.cols() == 1) candidates.push_back(c_h.column_span_basis());
  for (long k = 0;; ++k) {
    RatMatrix generic(d, 1);
    generic.at(0, 0) = 1;
    generic.at(1, 0) = k;
    bool hits = false;
    for (const auto& cand : candidates)
      if (cand.spans(generic)) hits = true;
    if (!hits) {
      candidates.push_back(generic);
      break;
    }
  }

  for (const auto& line : candidates) {
    if (line_hodge(line) > line_t_n) {
      rep.weakly_admissible = false;
      rep.witness = line;
      return rep;
    }
  }
  rep.weakly_admissible = true;
  return rep;
}

} // namespace

WaReport is_weakly_admissible(const PhiNModule& m, const HodgePinkLattice& q) {
  require_valid(m);
  WaReport rep;
  rep.full = t_invariants(m, q);
  if (rep.full.t_h != rep.full.t_n) {
    rep.weakly_admissible = false;
    rep.witness = RatMatrix::identity(m.rank());
    return rep;
  }

  if (m.rank() == 2 && is_scalar(m.frobenius_power) && m.monodromy.is_zero())
    return wa_scalar_rank2(m, q, rep.full);

  for (const auto& s : stable_subspaces(m)) {
    SubObject sub = induced_subobject(m, q, s);
    SlopeData sl = t_invariants(sub.module, sub.lattice);
    if (sl.t_h > sl.t_n) {
      rep.weakly_admissible = false;
      rep.witness = s;
      return rep;
    }
  }
  rep.weakly_admissible = true;
  return rep;
}

WaReport is_weakly_admissible(const PhiNModule& m, const KFiltration& fil) {
  require_valid(m);
  WaReport rep;
  rep.full = t_invariants(m, fil);
  if (rep.full.t_h != rep.full.t_n) {
    rep.weakly_admissible = false;
    rep.witness = RatMatrix::identity(m.rank());
    return rep;
  }

  if (m.rank() == 2 && is_scalar(m.frobenius_power) && m.monodromy.is_zero())
    return wa_scalar_rank2(m, filtration_to_lattice(fil), rep.full);

  for (const auto& s : stable_subspaces(m)) {
    PhiNModule sub = induced_module(m, s);
    KFiltration sub_fil = induced_filtration(fil, s);
    SlopeData sl = t_invariants(sub, sub_fil);
    if (sl.t_h > sl.t_n) {
      rep.weakly_admissible = false;
      rep.witness = s;
      return rep;
    }
  }
  rep.weakly_admissible = true;
  return rep;
}

HNFiltration harder_narasimhan(const PhiNModule& m, const HodgePinkLattice& q) {
  require_valid(m);
  long d = m.rank();
  std::vector<RatMatrix> stables = stable_subspaces(m);
  stables.push_back(RatMatrix::identity(d));

  struct Node {
    RatMatrix basis;
    long rank;
    Rat t_n, t_h;
  };
  std::vector<Node> nodes;
  for (const auto& s : stables) {
    SubObject sub = induced_subobject(m, q, s);
    SlopeData sl = t_invariants(sub.module, sub.lattice);
    nodes.push_back({s, s.cols(), sl.t_n, sl.t_h});
  }

  HNFiltration hn;
  long cur_rank = 0;
  Rat cur_t_n = 0, cur_t_h = 0;
  const Node* cur = nullptr;
  while (cur_rank < d) {
    const Node* best = nullptr;
    Rat best_sigma = 0;
    for (const auto& node : nodes) {
      if (node.rank <= cur_rank) continue;
      if (cur && !node.basis.spans(cur->basis)) continue;
      Rat sigma = ((node.t_h - cur_t_h) - (node.t_n - cur_t_n)) / (node.rank - cur_rank);
      if (!best || sigma > best_sigma || (sigma == best_sigma && node.rank > best->rank)) {
        best = &node;
        best_sigma = sigma;
      }
    }
    SlopeData step;
    step.rank = best->rank - cur_rank;
    step.t_n = best->t_n - cur_t_n;
    step.t_h = best->t_h - cur_t_h;
    step.sigma = best_sigma;
    hn.subquotients.push_back(step);
    if (best->rank < d) hn.chain.push_back(best->basis);
    cur = best;
    cur_rank = best->rank;
    cur_t_n = best->t_n;
    cur_t_h = best->t_h;
  }
  return hn;
}

NewtonPoint newton_point(const PhiNModule& m) {
  NewtonPoint np;
  np.coefficients = adjoint_quotient_point(m);
  for (const auto& c : np.coefficients) np.valuations.push_back(padic_valuation(c, m.ctx));
  if (np.coefficients.back() == 0) throw SingularFrobenius("c_d vanishes");
  return np;
}

bool newton_membership(const NewtonPoint& c, const Cocharacter& mu) {
  long d = static_cast<long>(c.coefficients.size());
  if (mu.d != d) throw ShapeMismatch("rank mismatch");
  std::vector<Rat> l = l_vector(mu);
  for (long i = 1; i <= d; ++i) {
    Rat bound = l[i - 1] * mu.f;
    const Valuation& v = c.valuations[i - 1];
    if (i == d) {
      if (v.infinite || v.value != bound) return false;
    } else {
      if (!v.infinite && v.value < bound) return false;
    }
  }
  return true;
}

} // namespace hodgepink
