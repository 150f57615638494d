#include "hodgepink/io.hpp"

namespace hodgepink {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

long need_int(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

} // namespace

Json rat_to_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw InputError("rational must be a string 'num/den' or an integer");
}

Json series_to_json(const TruncatedLaurent& s) {
  Json coeffs = Json::object();
  for (const auto& [e, v] : s.coeffs()) coeffs[std::to_string(e)] = rat_to_string(v);
  Json out;
  out["coeffs"] = std::move(coeffs);
  out["precision"] = s.exact() ? Json(nullptr) : Json(s.precision());
  return out;
}

TruncatedLaurent series_from_json(const Json& j, Var v) {
  long prec = kExactPrec;
  const Json* coeffs = &j;
  if (j.is_object() && j.contains("coeffs")) {
    coeffs = &j.at("coeffs");
    if (j.contains("precision") && !j.at("precision").is_null())
      prec = j.at("precision").get<long>();
  }
  if (!coeffs->is_object()) throw InputError("series must be an object of exponent -> rational");
  TruncatedLaurent s(v, prec);
  for (auto it = coeffs->begin(); it != coeffs->end(); ++it) {
    long e;
    try {
      e = std::stol(it.key());
    } catch (const std::exception&) {
      throw InputError("bad exponent key '" + it.key() + "'");
    }
    s.set_coeff(e, rat_from_json(it.value()));
  }
  return s;
}

Json ratmatrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix ratmatrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.at(0).is_array())
    throw InputError("matrix must be a nonempty array of arrays");
  long rows = static_cast<long>(j.size());
  long cols = static_cast<long>(j.at(0).size());
  RatMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    if (static_cast<long>(j.at(i).size()) != cols) throw InputError("ragged matrix rows");
    for (long c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(j.at(i).at(c));
  }
  return m;
}

Json module_to_json(const PhiNModule& m) {
  Json out;
  out["f"] = m.f;
  out["p"] = m.ctx.p.get_si();
  out["frobenius_power"] = ratmatrix_to_json(m.frobenius_power);
  out["monodromy"] = ratmatrix_to_json(m.monodromy);
  return out;
}

PhiNModule module_from_json(const Json& j) {
  long f = need_int(j, "f");
  PrimeContext ctx(need_int(j, "p"));

  RatMatrix F;
  std::vector<RatMatrix> phis;
  if (j.contains("frobenius_tuple")) {
    // full f-tuple (Phi_0, ..., Phi_{f-1}); the loader normalizes to the
    // composite around the cycle, (Phi^f)_0 = Phi_0 Phi_{f-1} ... Phi_1
    for (const auto& mat : j.at("frobenius_tuple")) phis.push_back(ratmatrix_from_json(mat));
    if (static_cast<long>(phis.size()) != f)
      throw InputError("frobenius_tuple must contain f matrices");
    F = phis[0];
    for (long i = f - 1; i >= 1; --i) F = F * phis[i];
  } else {
    F = ratmatrix_from_json(need(j, "frobenius_power"));
  }

  RatMatrix N(F.rows(), F.cols());
  if (j.contains("monodromy_tuple")) {
    std::vector<RatMatrix> ns;
    for (const auto& mat : j.at("monodromy_tuple")) ns.push_back(ratmatrix_from_json(mat));
    if (static_cast<long>(ns.size()) != f)
      throw InputError("monodromy_tuple must contain f matrices");
    if (!phis.empty()) {
      // componentwise relation p Phi_i N_{i-1} = N_i Phi_i
      Rat p(ctx.p);
      for (long i = 0; i < f; ++i) {
        long prev = (i + f - 1) % f;
        if (!(phis[i] * ns[prev] * p - ns[i] * phis[i]).is_zero())
          throw RelationViolated("component " + std::to_string(i) + " of the monodromy tuple");
      }
    }
    N = ns[0];
  } else if (j.contains("monodromy")) {
    N = ratmatrix_from_json(j.at("monodromy"));
  }
  return PhiNModule(f, std::move(ctx), std::move(F), std::move(N));
}

Json lattice_to_json(const HodgePinkLattice& q) {
  Json out;
  out["window"] = Json{{"m", q.m}, {"n", q.n}};
  Json comps = Json::array();
  for (const auto& [lab, mat] : q.components) {
    Json rows = Json::array();
    for (long i = 0; i < mat.rows(); ++i) {
      Json row = Json::array();
      for (long c = 0; c < mat.cols(); ++c) row.push_back(series_to_json(mat.at(i, c)));
      rows.push_back(std::move(row));
    }
    comps.push_back(Json{{"label", lab}, {"matrix", std::move(rows)}});
  }
  out["components"] = std::move(comps);
  return out;
}

HodgePinkLattice lattice_from_json(const Json& j) {
  const Json& win = need(j, "window");
  long m = need_int(win, "m"), n = need_int(win, "n");
  const Json& comps = need(j, "components");
  if (!comps.is_array() || comps.empty()) throw InputError("lattice needs components");
  std::vector<std::pair<std::string, LaurentMatrix>> out;
  for (const auto& comp : comps) {
    std::string lab = need(comp, "label").get<std::string>();
    const Json& rows = need(comp, "matrix");
    long d = static_cast<long>(rows.size());
    LaurentMatrix mat(d, d, Var::t);
    for (long i = 0; i < d; ++i) {
      if (static_cast<long>(rows.at(i).size()) != d) throw InputError("lattice matrix must be square");
      for (long c = 0; c < d; ++c) mat.at(i, c) = series_from_json(rows.at(i).at(c), Var::t);
    }
    out.emplace_back(std::move(lab), std::move(mat));
  }
  return HodgePinkLattice::make(std::move(out), m, n);
}

Json filtration_to_json(const KFiltration& f) {
  Json comps = Json::array();
  for (const auto& c : f.components) {
    comps.push_back(Json{{"label", c.label},
                         {"matrix", ratmatrix_to_json(c.basis)},
                         {"jumps", c.jumps}});
  }
  Json out;
  out["components"] = std::move(comps);
  return out;
}

KFiltration filtration_from_json(const Json& j) {
  const Json& comps = need(j, "components");
  if (!comps.is_array() || comps.empty()) throw InputError("filtration needs components");
  KFiltration f;
  for (const auto& comp : comps) {
    KFiltration::Component c;
    c.label = need(comp, "label").get<std::string>();
    c.basis = ratmatrix_from_json(need(comp, "matrix"));
    for (const auto& v : need(comp, "jumps")) c.jumps.push_back(v.get<long>());
    f.components.push_back(std::move(c));
  }
  f.d = f.components[0].basis.rows();
  f.validate();
  return f;
}

Json cocharacter_to_json(const Cocharacter& mu) {
  Json weights = Json::object();
  for (const auto& lab : mu.labels) weights[lab] = mu.weight(lab);
  Json out;
  out["d"] = mu.d;
  out["e"] = mu.e;
  out["f"] = mu.f;
  out["labels"] = mu.labels;
  out["weights"] = std::move(weights);
  return out;
}

Cocharacter cocharacter_from_json(const Json& j) {
  Cocharacter mu;
  mu.d = need_int(j, "d");
  mu.e = j.contains("e") ? j.at("e").get<long>() : 1;
  mu.f = j.contains("f") ? j.at("f").get<long>() : 1;
  const Json& weights = need(j, "weights");
  if (j.contains("labels")) {
    for (const auto& lab : j.at("labels")) mu.labels.push_back(lab.get<std::string>());
  } else {
    for (auto it = weights.begin(); it != weights.end(); ++it) mu.labels.push_back(it.key());
    std::sort(mu.labels.begin(), mu.labels.end());
  }
  for (const auto& lab : mu.labels) {
    if (!weights.contains(lab)) throw InputError("missing weights for label " + lab);
    std::vector<long> w;
    for (const auto& v : weights.at(lab)) w.push_back(v.get<long>());
    mu.weights[lab] = std::move(w);
  }
  mu.validate();
  return mu;
}

GaloisAction galois_from_json(const Json& j, const std::vector<std::string>& labels) {
  GaloisAction act;
  if (!j.is_array()) throw InputError("galois action must be an array of permutations");
  for (const auto& gen : j) {
    std::map<std::string, std::string> perm;
    if (gen.is_array()) {
      // image of labels[i] in order
      if (gen.size() != labels.size()) throw InputError("permutation length mismatch");
      for (size_t i = 0; i < labels.size(); ++i) perm[labels[i]] = gen.at(i).get<std::string>();
    } else if (gen.is_object()) {
      for (auto it = gen.begin(); it != gen.end(); ++it) perm[it.key()] = it.value().get<std::string>();
    } else {
      throw InputError("permutation must be an array or an object");
    }
    act.generators.push_back(std::move(perm));
  }
  return act;
}

USeriesContext useries_from_json(const Json& j) {
  PrimeContext ctx(need_int(j, "p"));
  EisensteinPoly e;
  for (const auto& v : need(j, "eisenstein")) e.lower.push_back(rat_from_json(v));
  long prec = need_int(j, "precision");
  return USeriesContext(std::move(ctx), std::move(e), prec);
}

Json slopes_to_json(const SlopeData& s) {
  Json out;
  out["t_N"] = rat_to_string(s.t_n);
  out["t_H"] = rat_to_string(s.t_h);
  out["rank"] = s.rank;
  out["sigma"] = rat_to_string(s.sigma);
  return out;
}

} // namespace hodgepink
