#pragma once

#include "hodgepink/admissibility.hpp"

namespace hodgepink {

// Monic Eisenstein polynomial E(u) = u^e + a_{e-1} u^{e-1} + ... + a_0 with
// val(a_i) >= 1 and val(a_0) = 1; E(0) = a_0.
struct EisensteinPoly {
  std::vector<Rat> lower; // a_0, ..., a_{e-1}

  long degree() const { return static_cast<long>(lower.size()); }
  const Rat& constant() const { return lower[0]; }
  void validate(const PrimeContext& ctx) const;

  TruncatedLaurent as_series() const;                 // exact polynomial in u
  TruncatedLaurent normalized(long prec) const;       // E(u)/E(0), truncated
};

// Truncation context for the open-unit-disc computations. The unramified
// degree is pinned to 1 here: the Frobenius fixes coefficients and acts by
// u -> u^p.
struct USeriesContext {
  PrimeContext ctx;
  EisensteinPoly e_poly;
  long precision = 0;

  USeriesContext(PrimeContext c, EisensteinPoly e, long prec);
};

// lambda = prod_{n>=0} phi^n(E(u)/E(0)); satisfies lambda = (E/E(0)) phi(lambda).
TruncatedLaurent lambda_series(const USeriesContext& c);

// N_nabla(g) = -u lambda dg/du.
TruncatedLaurent nnabla(const TruncatedLaurent& g, const USeriesContext& c);

// Residual N_nabla(phi(g)) - p (E/E(0)) phi(N_nabla(g)); vanishes within the
// provable window.
TruncatedLaurent nnabla_commutator(const TruncatedLaurent& g, const USeriesContext& c);

enum class EtaDirection { forward, inverse };

// sum_i N0^i (-+1)^i/i! log(1-t)^i, a unipotent matrix over Q[[t]]/t^P.
LaurentMatrix eta_matrix(const RatMatrix& n0, long t_precision, EtaDirection dir);

// (p E(u)/E(0))^n, the rank-one twist factor.
TruncatedLaurent rank1_twist_factor(long n, const USeriesContext& c);

enum class EtaConvention { eta, id };

// Detects lattices lying on the section F -> q(F): the locus where the induced
// meromorphic connection is holomorphic. Under the identity convention the
// section is twisted by the inverse eta, so the test untwists first.
bool is_zero_section(const PhiNModule& m, const HodgePinkLattice& q,
                     EtaConvention convention = EtaConvention::eta);

// The section image itself under either convention (used by the tests).
HodgePinkLattice section_image(const PhiNModule& m, const KFiltration& fil,
                               EtaConvention convention);

} // namespace hodgepink
