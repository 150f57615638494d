#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgepink/laurent_matrix.hpp"
#include "hodgepink/rat_matrix.hpp"

namespace hodgepink {

// A rank-d module over the unramified degree-f base, in normalized coordinates:
// the pair (F, N0) with F invertible and p^f F N0 = N0 F. N0 is then nilpotent.
struct PhiNModule {
  long f = 1;
  PrimeContext ctx;
  RatMatrix frobenius_power; // F = (Phi^f)_0
  RatMatrix monodromy;       // N0

  PhiNModule(long f_, PrimeContext ctx_, RatMatrix F, RatMatrix N0)
      : f(f_), ctx(std::move(ctx_)), frobenius_power(std::move(F)), monodromy(std::move(N0)) {}

  long rank() const { return frobenius_power.rows(); }
  Rat p_to_f() const; // p^f as a rational
};

struct ValidationReport {
  bool valid = false;
  std::string failure; // name of the first violated condition, empty when valid
};

// Checks invertibility of F, the commutation relation, and nilpotence of N0.
// Throws nothing; the CLI and strict callers use require_valid instead.
ValidationReport validate_module(const PhiNModule& m);
void require_valid(const PhiNModule& m); // throws the typed error of the first violation

struct JordanType {
  std::vector<long> partition; // nonincreasing block sizes, summing to d
  // certificate: eigenvalues in chain order and the set of chained positions
  std::vector<Rat> eigenvalues;       // lambda_1, ..., lambda_d
  std::vector<bool> chained;          // chained[i]: p^f lambda_i = lambda_{i+1} within a block
};

// Classification of a generic point: eigenvalue chains lambda, p^f lambda, ...
// must match the Jordan type of N0.
JordanType jordan_component(const PhiNModule& m);

// A valid module whose jordan_component is exactly the given partition.
PhiNModule generic_representative(const std::vector<long>& partition, const Rat& lambda0,
                                  const PrimeContext& ctx, long f);

enum class DegenerationCase : char { a = 'a', b = 'b', c = 'c', d = 'd' };

struct DegenerationWitness {
  bool holds = false;
  LaurentMatrix j_tilde_i, j_tilde_j, n_tilde; // entries in Q[z, z^{-1}]
};

// The one-parameter families splitting a maximal Jordan block: builds the
// z-deformed blocks and checks p^f J~_i N~ = N~ J~_j as an exact identity.
DegenerationWitness degeneration_identity_check(long s_i, long s_j, const Rat& rho_i,
                                                const Rat& rho_j, const RatMatrix& n_base,
                                                DegenerationCase which, const PrimeContext& ctx,
                                                long f);

// Admissible base blocks for the degeneration: the general solution of
// p^f J_i N = N J_j, parameterized by the free last-column entries.
RatMatrix degeneration_base_block(long s_i, long s_j, const std::vector<Rat>& last_col,
                                  const PrimeContext& ctx, long f);

// Coefficients (c_1, ..., c_d) of charpoly(F); invariant under conjugation.
std::vector<Rat> adjoint_quotient_point(const PhiNModule& m);

long p_scheme_dimension(long f, long d);

// Rational roots (with multiplicity) of X^d + c[0] X^{d-1} + ... + c[d-1].
std::vector<Rat> charpoly_rational_roots(const std::vector<Rat>& c);

} // namespace hodgepink
