#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hodgepink.h"
#include "hodgepink/io.hpp"

using namespace hodgepink;

namespace {

std::string fixtures_dir() {
  const char* env = std::getenv("HODGEPINK_FIXTURES");
  if (env) return env;
  // relative to the build tree
  for (const char* cand : {"../fixtures", "fixtures", "../../fixtures"})
    if (std::filesystem::exists(std::string(cand) + "/cyclotomic.json")) return cand;
  return "fixtures";
}

} // namespace

TEST(Io, SeriesRoundtrip) {
  TruncatedLaurent s(Var::t, 5);
  s.set_coeff(-2, Rat(1, 3));
  s.set_coeff(0, Rat(-7));
  Json j = series_to_json(s);
  TruncatedLaurent back = series_from_json(j, Var::t);
  EXPECT_TRUE(back == s);

  // exact series carry a null precision
  TruncatedLaurent e(Var::t);
  e.set_coeff(1, 2);
  Json je = series_to_json(e);
  EXPECT_TRUE(je.at("precision").is_null());
  EXPECT_TRUE(series_from_json(je, Var::t) == e);
}

TEST(Io, ModuleRoundtrip) {
  RatMatrix f(2, 2);
  f.at(0, 0) = Rat(1, 2);
  f.at(1, 1) = Rat(1);
  PhiNModule m(1, PrimeContext(2), f, RatMatrix(2, 2));
  Json j = module_to_json(m);
  PhiNModule back = module_from_json(j);
  EXPECT_TRUE(back.frobenius_power == m.frobenius_power);
  EXPECT_TRUE(back.monodromy == m.monodromy);
  EXPECT_EQ(back.f, m.f);
}

TEST(Io, FullTupleNormalization) {
  // f = 2: the loader composes the tuple into (Phi^2)_0 = Phi_0 Phi_1
  Json j = Json::parse(R"({
    "f": 2, "p": 2,
    "frobenius_tuple": [[["1", "0"], ["0", "2"]], [["3", "0"], ["0", "1"]]],
    "monodromy_tuple": [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]]
  })");
  PhiNModule m = module_from_json(j);
  EXPECT_EQ(m.frobenius_power.at(0, 0), Rat(3));
  EXPECT_EQ(m.frobenius_power.at(1, 1), Rat(2));
  EXPECT_TRUE(m.monodromy.is_zero());
  EXPECT_TRUE(validate_module(m).valid);

  // a tuple violating the componentwise relation is rejected at load time
  Json bad = Json::parse(R"({
    "f": 2, "p": 2,
    "frobenius_tuple": [[["1", "0"], ["0", "4"]], [["1", "0"], ["0", "1"]]],
    "monodromy_tuple": [[["0", "1"], ["0", "0"]], [["0", "1"], ["0", "0"]]]
  })");
  EXPECT_THROW(module_from_json(bad), RelationViolated);
}

TEST(Io, MalformedInput) {
  EXPECT_THROW(module_from_json(Json{{"f", 1}}), InputError);
  EXPECT_THROW(rat_from_json(Json(1.5)), InputError);
  Json bad_lattice = Json::parse(R"({"window": {"m": 0, "n": 0}, "components": []})");
  EXPECT_THROW(lattice_from_json(bad_lattice), InputError);
}

TEST(CApi, WaOnCyclotomicFixture) {
  std::string path = fixtures_dir() + "/cyclotomic.json";
  char* err = nullptr;
  hp_instance* inst = hp_instance_load(path.c_str(), &err);
  ASSERT_NE(inst, nullptr) << (err ? err : "");

  char* report = nullptr;
  int verdict = -1;
  hp_status st = hp_eval(inst, "wa", nullptr, &report, &verdict);
  EXPECT_EQ(st, HP_OK);
  EXPECT_EQ(verdict, 1);
  Json rep = Json::parse(report);
  EXPECT_EQ(rep.at("report").at("slopes").at("t_N").get<std::string>(), "-1");
  EXPECT_EQ(rep.at("report").at("slopes").at("t_H").get<std::string>(), "-1");
  hp_string_free(report);
  hp_instance_free(inst);
}

TEST(CApi, WitnessOnDependentFixture) {
  std::string path = fixtures_dir() + "/dependent_vectors.json";
  hp_instance* inst = hp_instance_load(path.c_str(), nullptr);
  ASSERT_NE(inst, nullptr);
  char* report = nullptr;
  int verdict = -1;
  EXPECT_EQ(hp_eval(inst, "wa", nullptr, &report, &verdict), HP_OK);
  EXPECT_EQ(verdict, 0);
  Json rep = Json::parse(report);
  EXPECT_TRUE(rep.at("report").contains("witness"));
  hp_string_free(report);
  hp_instance_free(inst);
}

TEST(CApi, ErrorCodes) {
  char* err = nullptr;
  EXPECT_EQ(hp_instance_parse("{ not json", &err), nullptr);
  ASSERT_NE(err, nullptr);
  hp_string_free(err);

  // scalar Frobenius in rank 3: unsupported spectrum for hn
  const char* doc = R"({
    "module": {"f": 1, "p": 2,
      "frobenius_power": [["2","0","0"],["0","2","0"],["0","0","2"]],
      "monodromy": [["0","0","0"],["0","0","0"],["0","0","0"]]},
    "lattice": {"window": {"m": 0, "n": 0}, "components": [
      {"label": "psi0", "matrix": [
        [{"0":"1"},{},{}],[{},{"0":"1"},{}],[{},{},{"0":"1"}]]}]}
  })";
  hp_instance* inst = hp_instance_parse(doc, nullptr);
  ASSERT_NE(inst, nullptr);
  char* report = nullptr;
  EXPECT_EQ(hp_eval(inst, "hn", nullptr, &report, nullptr), HP_ERR_SPECTRUM);
  hp_string_free(report);

  EXPECT_EQ(hp_eval(inst, "no-such-command", nullptr, &report, nullptr), HP_ERR_INPUT);
  hp_string_free(report);
  hp_instance_free(inst);
}

TEST(CApi, FixtureReEvaluationIsStable) {
  // each fixture reloads from its own dump and re-evaluates to the same report
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"cyclotomic.json", "wa"},
      {"cyclotomic_dual.json", "wa"},
      {"independent_vectors.json", "wa"},
      {"dependent_vectors.json", "wa"},
      {"mu_2_0.json", "dims"},
      {"mu_pair_20_11.json", "dims"},
      {"mu_pair_20_20.json", "dims"},
      {"mu_pair_11_11.json", "dims"},
      {"jordan_chain.json", "jordan"},
      {"hn_nontrivial.json", "hn"},
      {"wa_filtered.json", "wa"},
      {"filtration_cyclotomic.json", "convert"},
      {"filtration_cyclotomic_dual.json", "convert"},
      {"eisenstein_p2.json", "validate"},
      {"independent_vectors.json", "zero-section"},
      {"independent_vectors.json", "polygon"},
      {"independent_vectors.json", "bound"},
      {"cyclotomic.json", "newton"},
  };
  for (const auto& [file, cmd] : runs) {
    std::string path = fixtures_dir() + "/" + file;
    hp_instance* inst = hp_instance_load(path.c_str(), nullptr);
    ASSERT_NE(inst, nullptr) << path;
    char* rep1 = nullptr;
    int v1 = -1;
    ASSERT_EQ(hp_eval(inst, cmd.c_str(), nullptr, &rep1, &v1), HP_OK) << file << " " << cmd
                                                                      << ": " << (rep1 ? rep1 : "");

    char* dumped = hp_instance_dump(inst);
    hp_instance* again = hp_instance_parse(dumped, nullptr);
    ASSERT_NE(again, nullptr);
    char* rep2 = nullptr;
    int v2 = -1;
    ASSERT_EQ(hp_eval(again, cmd.c_str(), nullptr, &rep2, &v2), HP_OK);
    EXPECT_STREQ(rep1, rep2) << file << " " << cmd;
    EXPECT_EQ(v1, v2);

    hp_string_free(rep1);
    hp_string_free(rep2);
    hp_string_free(dumped);
    hp_instance_free(inst);
    hp_instance_free(again);
  }
}

TEST(CApi, DimsReport) {
  std::string path = fixtures_dir() + "/mu_pair_20_11.json";
  hp_instance* inst = hp_instance_load(path.c_str(), nullptr);
  ASSERT_NE(inst, nullptr);
  char* report = nullptr;
  ASSERT_EQ(hp_eval(inst, "dims", nullptr, &report, nullptr), HP_OK);
  Json rep = Json::parse(report);
  EXPECT_EQ(rep.at("report").at("reflex_degree").get<long>(), 2);
  hp_string_free(report);
  hp_instance_free(inst);
}

TEST(CApi, Version) {
  EXPECT_NE(std::string(hp_version()).find("hodgepink"), std::string::npos);
}
