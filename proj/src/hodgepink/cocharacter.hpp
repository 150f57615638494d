#pragma once

#include <map>
#include <string>
#include <vector>

#include "hodgepink/rational.hpp"

namespace hodgepink {

// Dominant cocharacter of the restriction of scalars of GL_d: one nonincreasing
// integer d-vector per embedding label, with e*f labels in a fixed order.
struct Cocharacter {
  long d = 0;
  long e = 1;
  long f = 1;
  std::vector<std::string> labels;
  std::map<std::string, std::vector<long>> weights;

  static Cocharacter single(std::vector<long> w); // one label "psi0", e = f = 1
  static Cocharacter make(long e, long f, std::vector<std::vector<long>> per_label);

  void validate() const;
  const std::vector<long>& weight(const std::string& label) const;
  long total() const; // sum of all weights
};

// Permutation action on the embedding labels, given by generators.
struct GaloisAction {
  // each generator maps label -> label bijectively
  std::vector<std::map<std::string, std::string>> generators;
};

struct ReflexReport {
  long degree = 0;
  std::vector<std::vector<std::string>> orbits;
  long group_order = 0;
};

// mu' <= mu in the Bruhat (dominance) order: partial sums dominate per label,
// totals equal.
bool bruhat_leq(const Cocharacter& mu_prime, const Cocharacter& mu);

// Index of the stabilizer of mu inside the group generated by the action.
ReflexReport reflex_degree(const Cocharacter& mu, const GaloisAction& act);

enum class LVectorMethod { direct, reconstruction };

// l_i = (1/ef) sum_psi (mu_{psi,d} + ... + mu_{psi,d+1-i}), i = 1..d.
std::vector<Rat> l_vector(const Cocharacter& mu, LVectorMethod method = LVectorMethod::direct);

struct DimensionReport {
  long dim_q = 0;    // sum_{psi,j} (d+1-2j) mu_{psi,j}
  long dim_flag = 0; // sum_psi #{(i,j) : mu_{psi,i} > mu_{psi,j}}
  long dim_p = 0;    // f d^2
};

DimensionReport dimension_formulas(const Cocharacter& mu);

struct GapReport {
  long gap = 0;
  bool exceptional = false; // all r_i = 1
};

// gap = sum r_i^2 - sum r_i r_{i+1}; when sum r_i >= n this exceeds 1 unless
// all entries are 1.
GapReport combinatorial_gap(const std::vector<long>& r);

} // namespace hodgepink
