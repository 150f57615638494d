#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "hodgepink.h"

namespace {

struct CommonArgs {
  std::string input;
  std::string mu_file;
  std::string method = "both";
  std::string convention = "eta";
  long precision = 0;
  uint64_t seed = 1;
  bool json_output = false;
};

void render_human(const nlohmann::ordered_json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render_human(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    return;
  }
  if (j.is_array()) {
    // arrays of scalars print inline, arrays of objects recurse
    bool scalars = true;
    for (const auto& v : j)
      if (v.is_object() || v.is_array()) scalars = false;
    if (scalars) {
      std::cout << prefix << " = " << j.dump() << "\n";
      return;
    }
    long i = 0;
    for (const auto& v : j) render_human(v, prefix + "[" + std::to_string(i++) + "]");
    return;
  }
  std::cout << prefix << " = " << j.dump() << "\n";
}

int run_command(const std::string& command, const CommonArgs& args) {
  hp_instance* inst = nullptr;
  char* err = nullptr;
  if (!args.input.empty()) {
    inst = hp_instance_load(args.input.c_str(), &err);
    if (!inst) {
      std::cerr << (err ? err : "cannot load input") << "\n";
      hp_string_free(err);
      return 2;
    }
  }

  nlohmann::ordered_json options;
  options["method"] = args.method;
  options["convention"] = args.convention;
  options["seed"] = args.seed;
  if (args.precision > 0) options["precision"] = args.precision;
  if (!args.mu_file.empty()) {
    hp_instance* mu = hp_instance_load(args.mu_file.c_str(), &err);
    if (!mu) {
      std::cerr << (err ? err : "cannot load mu") << "\n";
      hp_string_free(err);
      hp_instance_free(inst);
      return 2;
    }
    char* dumped = hp_instance_dump(mu);
    nlohmann::ordered_json mu_doc = nlohmann::ordered_json::parse(dumped);
    // accept either a bare cocharacter or a file with a "cocharacter" section
    options["mu"] = mu_doc.contains("cocharacter") ? mu_doc.at("cocharacter") : mu_doc;
    hp_string_free(dumped);
    hp_instance_free(mu);
  }

  char* report = nullptr;
  int verdict = -1;
  hp_status status =
      hp_eval(inst, command.c_str(), options.dump().c_str(), &report, &verdict);
  hp_instance_free(inst);

  if (status != HP_OK) {
    std::cerr << (report ? report : "error") << "\n";
    hp_string_free(report);
    return static_cast<int>(status);
  }

  if (args.json_output) {
    std::cout << (report ? report : "{}") << "\n";
  } else {
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(report ? report : "{}");
    render_human(doc, "");
  }
  hp_string_free(report);
  return verdict == 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(hp_version()) +
               " - exact computations with (phi,N)-modules and Hodge-Pink lattices"};
  app.require_subcommand(1);

  CommonArgs args;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "check a module / lattice / filtration / series context"},
      {"polygon", "Hodge polygon of a lattice (or jump type of a filtration)"},
      {"bound", "test boundedness of the Hodge polygon by a cocharacter"},
      {"convert", "filtration -> lattice, or lattice -> filtration"},
      {"wa", "weak admissibility with witness on failure"},
      {"hn", "Harder-Narasimhan filtration and subquotient slopes"},
      {"newton", "adjoint-quotient point and Newton-stratum membership"},
      {"dims", "moduli dimension formulas (and reflex degree when an action is given)"},
      {"jordan", "Jordan component classification of a module"},
      {"zero-section", "detect lattices on the filtration section"},
      {"selftest", "run every built-in property suite"},
  };

  std::string chosen;
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    if (name != "selftest")
      sub->add_option("--input", args.input, "instance JSON file")->required();
    sub->add_flag("--json", args.json_output, "machine-readable output");
    sub->add_option("--precision", args.precision, "truncate series to this precision");
    if (name == "bound") {
      sub->add_option("--mu", args.mu_file, "cocharacter JSON file");
      sub->add_option("--method", args.method, "primal | dual | both");
    }
    if (name == "newton") sub->add_option("--mu", args.mu_file, "cocharacter JSON file");
    if (name == "zero-section")
      sub->add_option("--convention", args.convention, "eta | id");
    if (name == "selftest") sub->add_option("--seed", args.seed, "random seed");
    sub->callback([&chosen, name] { chosen = name; });
  }

  CLI11_PARSE(app, argc, argv);
  try {
    return run_command(chosen, args);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
