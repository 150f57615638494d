#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hodgepink::selftest {

struct Result {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Individual property suites. Each returns a single pass/fail with a short
// counterexample description on failure.
Result valuation_laws(uint64_t seed);
Result series_ring_laws(uint64_t seed);
Result smith_invariance(uint64_t seed);
Result exterior_divisors(uint64_t seed);
Result intersection_membership(uint64_t seed);
Result module_validation_fuzz(uint64_t seed);
Result jordan_roundtrip();
Result adjoint_invariance(uint64_t seed);
Result degeneration_cases(uint64_t seed);
Result bruhat_partial_order();
Result l_vector_agreement();
Result l_vector_monotonicity();
Result gap_lemma_bruteforce();
Result dimension_cross_check(uint64_t seed);
Result filtration_roundtrip(uint64_t seed);
Result minuscule_roundtrip(uint64_t seed);
Result boundedness_duality(uint64_t seed);
Result boundedness_nesting(uint64_t seed);
Result wa_section_compatibility(uint64_t seed);
Result wa_preimage_inclusion(uint64_t seed);
Result subobject_hodge_bound(uint64_t seed);
Result newton_forward(uint64_t seed);
Result newton_reverse_rank2();
Result lambda_functional_equation();
Result nnabla_commutator_samples(uint64_t seed);
Result eta_inverse_identity(uint64_t seed);
Result eta_unipotence(uint64_t seed);
Result zero_section_detection(uint64_t seed);
Result zero_section_basis_invariance(uint64_t seed);
Result hn_properties(uint64_t seed);
Result cyclotomic_fixtures();
Result rank2_dichotomy();

std::vector<Result> run_all(uint64_t seed = 1);

} // namespace hodgepink::selftest
