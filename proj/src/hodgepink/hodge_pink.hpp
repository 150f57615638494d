#pragma once

#include <string>
#include <vector>

#include "hodgepink/cocharacter.hpp"
#include "hodgepink/smith.hpp"

namespace hodgepink {

// A Hodge-Pink lattice over a field: per embedding label a full d x d basis
// matrix over Q[[t]] (columns generate the lattice relative to the tautological
// lattice), plus a window certificate t^n p <= q <= t^{-m} p.
struct HodgePinkLattice {
  long d = 0;
  long m = 0, n = 0;
  std::vector<std::pair<std::string, LaurentMatrix>> components;

  std::vector<std::string> labels() const;
  const LaurentMatrix& component(const std::string& label) const;

  static HodgePinkLattice single(LaurentMatrix basis); // one label "psi0", window inferred
  static HodgePinkLattice make(std::vector<std::pair<std::string, LaurentMatrix>> comps,
                               long m, long n);
};

// A K-filtration over a field: per embedding label a full-rank rational basis
// adapted to the flag, with nonincreasing integer jumps attached to columns.
// F^i = span of the columns with jump >= i.
struct KFiltration {
  long d = 0;
  struct Component {
    std::string label;
    RatMatrix basis;
    std::vector<long> jumps;
  };
  std::vector<Component> components;

  std::vector<std::string> labels() const;
  const Component& component(const std::string& label) const;
  void validate() const;

  static KFiltration single(RatMatrix basis, std::vector<long> jumps);
};

struct LatticeReport {
  bool valid = false;
  std::string failure;
};

// Window inclusions and full rank, certified per component.
LatticeReport validate_lattice(const HodgePinkLattice& q);
void require_valid(const HodgePinkLattice& q);

// Per label, the negated elementary divisors sorted nonincreasing. e and f of
// the returned cocharacter default to (#labels, 1) unless supplied.
Cocharacter hodge_polygon(const HodgePinkLattice& q, long e = 0, long f = 1);

// Jump type of a filtration as a cocharacter on the same labels.
Cocharacter filtration_type(const KFiltration& fil, long e = 0, long f = 1);

enum class BoundMethod { primal, dual };

// Exterior-power boundedness of the Hodge polygon by mu, with equality at the
// top degree. The two methods are the two sides of the Cramer duality.
bool bounded_by(const HodgePinkLattice& q, const Cocharacter& mu,
                BoundMethod method = BoundMethod::primal);

// q(F) = sum_i t^{-i} F^i[[t]] per component.
HodgePinkLattice filtration_to_lattice(const KFiltration& fil);

// F^i = image of (p intersect t^i q) in p/tp, read off the Smith transform.
KFiltration lattice_to_filtration(const HodgePinkLattice& q);

bool same_filtration(const KFiltration& a, const KFiltration& b);
bool same_hp_lattice(const HodgePinkLattice& a, const HodgePinkLattice& b);

} // namespace hodgepink
