#pragma once

#include <optional>

#include "hodgepink/hodge_pink.hpp"
#include "hodgepink/phi_module.hpp"

namespace hodgepink {

// Additive Newton and Hodge numbers; weak admissibility reads t_H <= t_N on
// subobjects with equality on the whole module.
struct SlopeData {
  Rat t_n = 0;
  Rat t_h = 0;
  long rank = 0;
  Rat sigma = 0; // (t_h - t_n) / rank
};

SlopeData t_invariants(const PhiNModule& m, const HodgePinkLattice& q);
SlopeData t_invariants(const PhiNModule& m, const KFiltration& fil);

// The complete finite list of proper nonzero F- and N0-stable rational
// subspaces, for the supported spectra: distinct rational eigenvalues, or a
// single eigenvalue whose unipotent part is one Jordan chain.
std::vector<RatMatrix> stable_subspaces(const PhiNModule& m);

struct SubObject {
  PhiNModule module;
  HodgePinkLattice lattice;
};

// Restriction of (m, q) to the Phi- and N-stable subspace S, in S-coordinates.
SubObject induced_subobject(const PhiNModule& m, const HodgePinkLattice& q, const RatMatrix& s);
PhiNModule induced_module(const PhiNModule& m, const RatMatrix& s);
KFiltration induced_filtration(const KFiltration& fil, const RatMatrix& s);

struct WaReport {
  bool weakly_admissible = false;
  std::optional<RatMatrix> witness; // a destabilizing subspace, or D itself when
                                    // the top slope condition fails
  SlopeData full;
};

WaReport is_weakly_admissible(const PhiNModule& m, const HodgePinkLattice& q);
WaReport is_weakly_admissible(const PhiNModule& m, const KFiltration& fil);

struct HNFiltration {
  std::vector<RatMatrix> chain;         // proper steps, excluding 0 and D
  std::vector<SlopeData> subquotients;  // slopes of the r graded pieces
  bool semistable() const { return chain.empty(); }
};

// Unique filtration with strictly decreasing subquotient sigma (multiplicative
// slopes strictly increasing).
HNFiltration harder_narasimhan(const PhiNModule& m, const HodgePinkLattice& q);

struct NewtonPoint {
  std::vector<Rat> coefficients; // c_1, ..., c_d with c_d != 0
  std::vector<Valuation> valuations;
};

NewtonPoint newton_point(const PhiNModule& m);

// val(c_i) >= f l_i with equality at i = d: the closed Newton stratum that is
// the image of the weakly admissible locus.
bool newton_membership(const NewtonPoint& c, const Cocharacter& mu);

} // namespace hodgepink
