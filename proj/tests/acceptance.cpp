// Acceptance suite: runs every top-level criterion and prints one line each.
// Usage: acceptance [fixtures-dir] [cli-binary]

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "hodgepink.h"
#include "hodgepink/selftest.hpp"

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok, const std::string& detail = "") {
  std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

void criterion(int number, const std::string& label,
               const std::vector<hodgepink::selftest::Result>& results) {
  bool ok = true;
  std::string detail;
  for (const auto& r : results) {
    if (!r.passed) {
      ok = false;
      detail += r.name + (r.detail.empty() ? "" : (": " + r.detail)) + "; ";
    }
  }
  report(number, label, ok, detail);
}

bool cli_exit_is(const std::string& cli, const std::string& args, int expected) {
  std::string cmd = cli + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) && WEXITSTATUS(rc) == expected;
}

} // namespace

int main(int argc, char** argv) {
  using namespace hodgepink::selftest;
  std::string fixtures = argc > 1 ? argv[1] : "fixtures";
  std::string cli = argc > 2 ? argv[2] : "";

  criterion(1, "cyclotomic fixtures: t_N = t_H = -/+1, weakly admissible, on the section",
            {cyclotomic_fixtures()});

  criterion(2, "rank-2 mu=(2,0) dichotomy with witness span(u,v)", {rank2_dichotomy()});

  criterion(3, "filtration/lattice roundtrips (200 random; 100 minuscule both ways)",
            {filtration_roundtrip(1001), minuscule_roundtrip(1002)});

  criterion(4, "primal/dual boundedness agreement and Bruhat semicontinuity (200 pairs)",
            {boundedness_duality(1003), boundedness_nesting(1004)});

  criterion(5, "l-vector: direct = reconstruction (exhaustive) and the gap bound",
            {l_vector_agreement(), gap_lemma_bruteforce(), l_vector_monotonicity()});

  criterion(6, "Jordan roundtrip, component counts, degeneration identities a-d",
            {jordan_roundtrip(), degeneration_cases(1005)});

  criterion(7, "Newton stratum: forward on 100 weakly admissible, reverse on a rank-2 grid",
            {newton_forward(1006), newton_reverse_rank2()});

  criterion(8, "series identities at precision 40 and the zero-section detector",
            {lambda_functional_equation(), nnabla_commutator_samples(1007),
             eta_inverse_identity(1008), zero_section_detection(1009)});

  criterion(9, "Harder-Narasimhan: strict slopes, semistability test, order independence",
            {hn_properties(1010)});

  criterion(10, "dimension formulas against independent re-evaluation (50 random)",
            {dimension_cross_check(1011)});

  // the CLI surface over the shipped fixtures, exercising the exit-code contract
  if (!cli.empty()) {
    bool cli_ok = true;
    cli_ok &= cli_exit_is(cli, "wa --input " + fixtures + "/cyclotomic.json", 0);
    cli_ok &= cli_exit_is(cli, "wa --input " + fixtures + "/dependent_vectors.json", 1);
    cli_ok &= cli_exit_is(cli, "wa --input " + fixtures + "/independent_vectors.json", 0);
    cli_ok &= cli_exit_is(cli, "dims --input " + fixtures + "/mu_2_0.json --json", 0);
    cli_ok &= cli_exit_is(cli, "jordan --input " + fixtures + "/jordan_chain.json", 0);
    cli_ok &= cli_exit_is(cli, "zero-section --input " + fixtures + "/independent_vectors.json", 1);
    cli_ok &= cli_exit_is(cli, "hn --input " + fixtures + "/hn_nontrivial.json --json", 0);
    cli_ok &= cli_exit_is(cli, "bound --input " + fixtures + "/independent_vectors.json", 0);
    cli_ok &= cli_exit_is(cli, "bound --input " + fixtures + "/independent_vectors.json --mu " +
                                   fixtures + "/mu_2_0.json --method dual", 0);
    cli_ok &= cli_exit_is(cli, "newton --input " + fixtures + "/independent_vectors.json", 0);
    cli_ok &= cli_exit_is(cli, "convert --input " + fixtures + "/filtration_cyclotomic.json", 0);
    cli_ok &= cli_exit_is(cli, "validate --input " + fixtures + "/eisenstein_p2.json", 0);
    cli_ok &= cli_exit_is(cli, "wa --input " + fixtures + "/no_such_file.json", 2);
    report(11, "CLI exit-code contract over the shipped fixtures (supplementary)", cli_ok);
  }

  if (failures == 0) std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
