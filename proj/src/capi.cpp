#include "hodgepink.h"

#include <cstring>
#include <fstream>
#include <sstream>

#include "hodgepink/io.hpp"
#include "hodgepink/selftest.hpp"

using namespace hodgepink;

struct hp_instance {
  Json doc;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

hp_status status_of(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::insufficient_precision:
      return HP_ERR_PRECISION;
    case ErrorKind::unsupported_spectrum:
      return HP_ERR_SPECTRUM;
    default:
      return HP_ERR_INPUT;
  }
}

LaurentMatrix truncate_component(const LaurentMatrix& m, long prec) {
  return m.truncated(prec);
}

HodgePinkLattice lattice_from_instance(const Json& doc, long precision_override) {
  HodgePinkLattice q = lattice_from_json(doc.at("lattice"));
  if (precision_override <= 0) return q;
  std::vector<std::pair<std::string, LaurentMatrix>> comps;
  for (const auto& [lab, mat] : q.components)
    comps.emplace_back(lab, truncate_component(mat, precision_override));
  return HodgePinkLattice::make(std::move(comps), q.m, q.n);
}

Json witness_json(const RatMatrix& w) {
  return ratmatrix_to_json(w);
}

struct Options {
  std::string method = "both";
  std::string convention = "eta";
  long precision = 0;
  uint64_t seed = 1;
  Json mu; // optional explicit cocharacter
};

Options parse_options(const char* options_json) {
  Options o;
  if (!options_json || !*options_json) return o;
  Json j = Json::parse(options_json);
  if (j.contains("method")) o.method = j.at("method").get<std::string>();
  if (j.contains("convention")) o.convention = j.at("convention").get<std::string>();
  if (j.contains("precision")) o.precision = j.at("precision").get<long>();
  if (j.contains("seed")) o.seed = j.at("seed").get<uint64_t>();
  if (j.contains("mu")) o.mu = j.at("mu");
  return o;
}

Cocharacter cocharacter_from_instance(const Json& doc, const Options& o) {
  if (!o.mu.is_null()) return cocharacter_from_json(o.mu);
  if (doc.contains("cocharacter")) return cocharacter_from_json(doc.at("cocharacter"));
  throw InputError("command needs a cocharacter (section 'cocharacter' or option 'mu')");
}

Json selftest_report(uint64_t seed, int* verdict) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : selftest::run_all(seed)) {
    arr.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  if (verdict) *verdict = all ? 1 : 0;
  Json out;
  out["suites"] = std::move(arr);
  out["all_passed"] = all;
  return out;
}

Json eval_command(const Json& doc, const std::string& cmd, const Options& o, int* verdict) {
  if (verdict) *verdict = -1;
  Json rep;
  rep["command"] = cmd;

  if (cmd == "selftest") {
    rep["report"] = selftest_report(o.seed, verdict);
    return rep;
  }

  if (cmd == "validate") {
    bool ok = true;
    Json sections = Json::object();
    if (doc.contains("module")) {
      ValidationReport r = validate_module(module_from_json(doc.at("module")));
      sections["module"] = Json{{"valid", r.valid}, {"failure", r.failure}};
      ok = ok && r.valid;
    }
    if (doc.contains("lattice")) {
      LatticeReport r = validate_lattice(lattice_from_instance(doc, o.precision));
      sections["lattice"] = Json{{"valid", r.valid}, {"failure", r.failure}};
      ok = ok && r.valid;
    }
    if (doc.contains("filtration")) {
      bool valid = true;
      std::string failure;
      try {
        filtration_from_json(doc.at("filtration"));
      } catch (const Error& e) {
        valid = false;
        failure = e.what();
      }
      sections["filtration"] = Json{{"valid", valid}, {"failure", failure}};
      ok = ok && valid;
    }
    if (doc.contains("series")) {
      bool valid = true;
      std::string failure;
      try {
        useries_from_json(doc.at("series"));
      } catch (const Error& e) {
        valid = false;
        failure = e.what();
      }
      sections["series"] = Json{{"valid", valid}, {"failure", failure}};
      ok = ok && valid;
    }
    if (sections.empty()) throw InputError("nothing to validate");
    rep["report"] = std::move(sections);
    if (verdict) *verdict = ok ? 1 : 0;
    return rep;
  }

  if (cmd == "polygon") {
    if (doc.contains("lattice")) {
      HodgePinkLattice q = lattice_from_instance(doc, o.precision);
      rep["report"] = cocharacter_to_json(hodge_polygon(q));
    } else if (doc.contains("filtration")) {
      rep["report"] = cocharacter_to_json(filtration_type(filtration_from_json(doc.at("filtration"))));
    } else {
      throw InputError("polygon needs a lattice or a filtration");
    }
    return rep;
  }

  if (cmd == "bound") {
    HodgePinkLattice q = lattice_from_instance(doc, o.precision);
    Cocharacter mu = cocharacter_from_instance(doc, o);
    bool result;
    Json detail = Json::object();
    if (o.method == "primal" || o.method == "dual") {
      result = bounded_by(q, mu, o.method == "primal" ? BoundMethod::primal : BoundMethod::dual);
      detail[o.method] = result;
    } else if (o.method == "both") {
      bool primal = bounded_by(q, mu, BoundMethod::primal);
      bool dual = bounded_by(q, mu, BoundMethod::dual);
      detail["primal"] = primal;
      detail["dual"] = dual;
      detail["agree"] = primal == dual;
      result = primal && dual;
    } else {
      throw InputError("method must be primal, dual or both");
    }
    rep["report"] = std::move(detail);
    if (verdict) *verdict = result ? 1 : 0;
    return rep;
  }

  if (cmd == "convert") {
    if (doc.contains("filtration")) {
      KFiltration f = filtration_from_json(doc.at("filtration"));
      rep["report"] = Json{{"lattice", lattice_to_json(filtration_to_lattice(f))}};
    } else if (doc.contains("lattice")) {
      HodgePinkLattice q = lattice_from_instance(doc, o.precision);
      rep["report"] = Json{{"filtration", filtration_to_json(lattice_to_filtration(q))}};
    } else {
      throw InputError("convert needs a lattice or a filtration");
    }
    return rep;
  }

  if (cmd == "wa") {
    PhiNModule m = module_from_json(doc.at("module"));
    WaReport r;
    if (doc.contains("lattice"))
      r = is_weakly_admissible(m, lattice_from_instance(doc, o.precision));
    else if (doc.contains("filtration"))
      r = is_weakly_admissible(m, filtration_from_json(doc.at("filtration")));
    else
      throw InputError("wa needs a lattice or a filtration");
    Json body;
    body["wa"] = r.weakly_admissible;
    body["slopes"] = slopes_to_json(r.full);
    if (r.witness) body["witness"] = witness_json(*r.witness);
    rep["report"] = std::move(body);
    if (verdict) *verdict = r.weakly_admissible ? 1 : 0;
    return rep;
  }

  if (cmd == "hn") {
    PhiNModule m = module_from_json(doc.at("module"));
    HodgePinkLattice q = lattice_from_instance(doc, o.precision);
    HNFiltration hn = harder_narasimhan(m, q);
    Json steps = Json::array();
    for (const auto& s : hn.chain) steps.push_back(witness_json(s));
    Json slopes = Json::array();
    for (const auto& s : hn.subquotients) slopes.push_back(slopes_to_json(s));
    rep["report"] = Json{{"semistable", hn.semistable()},
                         {"chain", std::move(steps)},
                         {"subquotient_slopes", std::move(slopes)}};
    return rep;
  }

  if (cmd == "newton") {
    PhiNModule m = module_from_json(doc.at("module"));
    NewtonPoint np = newton_point(m);
    Json coeffs = Json::array(), vals = Json::array();
    for (const auto& c : np.coefficients) coeffs.push_back(rat_to_string(c));
    for (const auto& v : np.valuations) vals.push_back(v.str());
    Json body;
    body["coefficients"] = std::move(coeffs);
    body["valuations"] = std::move(vals);
    if (doc.contains("cocharacter") || !o.mu.is_null()) {
      Cocharacter mu = cocharacter_from_instance(doc, o);
      bool member = newton_membership(np, mu);
      body["member"] = member;
      Json bounds = Json::array();
      std::vector<Rat> l = l_vector(mu);
      for (const auto& li : l) bounds.push_back(rat_to_string(li * mu.f));
      body["stratum_bounds"] = std::move(bounds);
      if (verdict) *verdict = member ? 1 : 0;
    }
    rep["report"] = std::move(body);
    return rep;
  }

  if (cmd == "dims") {
    Cocharacter mu = cocharacter_from_instance(doc, o);
    DimensionReport d = dimension_formulas(mu);
    Json body;
    body["dim_Q"] = d.dim_q;
    body["dim_flag"] = d.dim_flag;
    body["dim_P"] = d.dim_p;
    if (doc.contains("galois")) {
      GaloisAction act = galois_from_json(doc.at("galois"), mu.labels);
      ReflexReport r = reflex_degree(mu, act);
      Json orbits = Json::array();
      for (const auto& orb : r.orbits) orbits.push_back(orb);
      body["reflex_degree"] = r.degree;
      body["galois_orbits"] = std::move(orbits);
    }
    rep["report"] = std::move(body);
    return rep;
  }

  if (cmd == "jordan") {
    PhiNModule m = module_from_json(doc.at("module"));
    JordanType jt = jordan_component(m);
    Json evs = Json::array();
    for (const auto& ev : jt.eigenvalues) evs.push_back(rat_to_string(ev));
    rep["report"] = Json{{"partition", jt.partition},
                         {"eigenvalues", std::move(evs)},
                         {"chained", jt.chained}};
    return rep;
  }

  if (cmd == "zero-section") {
    PhiNModule m = module_from_json(doc.at("module"));
    HodgePinkLattice q = lattice_from_instance(doc, o.precision);
    EtaConvention conv = o.convention == "id" ? EtaConvention::id : EtaConvention::eta;
    bool zs = is_zero_section(m, q, conv);
    rep["report"] = Json{{"zero_section", zs}, {"convention", o.convention}};
    if (verdict) *verdict = zs ? 1 : 0;
    return rep;
  }

  throw InputError("unknown command '" + cmd + "'");
}

} // namespace

extern "C" {

const char* hp_version(void) { return "hodgepink 0.1.0"; }

hp_instance* hp_instance_parse(const char* json_text, char** err) {
  try {
    Json doc = Json::parse(json_text ? json_text : "");
    return new hp_instance{std::move(doc)};
  } catch (const std::exception& e) {
    set_err(err, std::string("parse error: ") + e.what());
    return nullptr;
  }
}

hp_instance* hp_instance_load(const char* path, char** err) {
  std::ifstream in(path ? path : "");
  if (!in) {
    set_err(err, std::string("cannot open ") + (path ? path : "(null)"));
    return nullptr;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return hp_instance_parse(buf.str().c_str(), err);
}

void hp_instance_free(hp_instance* inst) { delete inst; }

char* hp_instance_dump(const hp_instance* inst) {
  if (!inst) return dup_string("null");
  return dup_string(inst->doc.dump(2));
}

hp_status hp_eval(const hp_instance* inst, const char* command, const char* options_json,
                  char** report, int* verdict) {
  if (verdict) *verdict = -1;
  if (!command) {
    if (report) *report = dup_string("missing command");
    return HP_ERR_INPUT;
  }
  try {
    Options o = parse_options(options_json);
    static const hp_instance empty{Json::object()};
    const hp_instance& in = inst ? *inst : empty;
    Json rep = eval_command(in.doc, command, o, verdict);
    if (report) *report = dup_string(rep.dump(2));
    return HP_OK;
  } catch (const Error& e) {
    if (report) *report = dup_string(e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    if (report) *report = dup_string(e.what());
    return HP_ERR_INPUT;
  }
}

hp_status hp_selftest(unsigned long long seed, char** report, int* verdict) {
  try {
    Json rep;
    rep["command"] = "selftest";
    rep["report"] = selftest_report(seed, verdict);
    if (report) *report = dup_string(rep.dump(2));
    return HP_OK;
  } catch (const std::exception& e) {
    if (report) *report = dup_string(e.what());
    return HP_ERR_INPUT;
  }
}

void hp_string_free(char* s) { std::free(s); }

} // extern "C"
