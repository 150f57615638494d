#include "hodgepink/cocharacter.hpp"

#include <algorithm>
#include <set>

namespace hodgepink {

Cocharacter Cocharacter::single(std::vector<long> w) {
  Cocharacter mu;
  mu.d = static_cast<long>(w.size());
  mu.e = mu.f = 1;
  mu.labels = {"psi0"};
  mu.weights["psi0"] = std::move(w);
  mu.validate();
  return mu;
}

Cocharacter Cocharacter::make(long e, long f, std::vector<std::vector<long>> per_label) {
  Cocharacter mu;
  mu.e = e;
  mu.f = f;
  mu.d = per_label.empty() ? 0 : static_cast<long>(per_label[0].size());
  for (size_t i = 0; i < per_label.size(); ++i) {
    std::string lab = "psi" + std::to_string(i);
    mu.labels.push_back(lab);
    mu.weights[lab] = std::move(per_label[i]);
  }
  mu.validate();
  return mu;
}

void Cocharacter::validate() const {
  if (d <= 0) throw InputError("cocharacter rank must be positive");
  if (e < 1 || f < 1) throw InputError("e and f must be at least 1");
  if (static_cast<long>(labels.size()) != e * f)
    throw InputError("expected e*f = " + std::to_string(e * f) + " embedding labels, got " +
                     std::to_string(labels.size()));
  std::set<std::string> seen;
  for (const auto& lab : labels) {
    if (!seen.insert(lab).second) throw InputError("duplicate embedding label " + lab);
    auto it = weights.find(lab);
    if (it == weights.end()) throw InputError("missing weights for label " + lab);
    const auto& w = it->second;
    if (static_cast<long>(w.size()) != d) throw InputError("weight vector length mismatch at " + lab);
    for (size_t j = 0; j + 1 < w.size(); ++j)
      if (w[j] < w[j + 1]) throw InputError("weights not nonincreasing at " + lab);
  }
}

const std::vector<long>& Cocharacter::weight(const std::string& label) const {
  auto it = weights.find(label);
  if (it == weights.end()) throw InputError("unknown embedding label " + label);
  return it->second;
}

long Cocharacter::total() const {
  long s = 0;
  for (const auto& lab : labels)
    for (long w : weight(lab)) s += w;
  return s;
}

bool bruhat_leq(const Cocharacter& mu_prime, const Cocharacter& mu) {
  if (mu.d != mu_prime.d || mu.labels != mu_prime.labels)
    throw ShapeMismatch("cocharacters live on different data");
  for (const auto& lab : mu.labels) {
    const auto& a = mu_prime.weight(lab);
    const auto& b = mu.weight(lab);
    long pa = 0, pb = 0;
    for (long j = 0; j < mu.d; ++j) {
      pa += a[j];
      pb += b[j];
      if (pb < pa) return false;
      if (j == mu.d - 1 && pa != pb) return false;
    }
  }
  return true;
}

namespace {

using Perm = std::map<std::string, std::string>;

Perm compose(const Perm& a, const Perm& b) {
  // (a then b): x -> b(a(x))
  Perm c;
  for (const auto& [x, y] : a) c[x] = b.at(y);
  return c;
}

std::vector<Perm> generated_group(const std::vector<std::string>& labels,
                                  const std::vector<Perm>& gens) {
  Perm id;
  for (const auto& lab : labels) id[lab] = lab;
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& g : frontier)
      for (const auto& gen : gens) {
        Perm h = compose(g, gen);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

} // namespace

ReflexReport reflex_degree(const Cocharacter& mu, const GaloisAction& act) {
  std::set<std::string> label_set(mu.labels.begin(), mu.labels.end());
  for (const auto& gen : act.generators) {
    std::set<std::string> image;
    for (const auto& lab : mu.labels) {
      auto it = gen.find(lab);
      if (it == gen.end()) throw InputError("permutation does not cover label " + lab);
      image.insert(it->second);
      if (!label_set.count(it->second)) throw InputError("permutation leaves the label set");
    }
    if (image.size() != label_set.size()) throw InputError("generator is not a bijection");
  }

  auto group = generated_group(mu.labels, act.generators);
  long stab = 0;
  for (const auto& g : group) {
    bool fixes = true;
    for (const auto& lab : mu.labels)
      if (mu.weight(g.at(lab)) != mu.weight(lab)) {
        fixes = false;
        break;
      }
    if (fixes) ++stab;
  }

  ReflexReport rep;
  rep.group_order = static_cast<long>(group.size());
  rep.degree = rep.group_order / stab;

  std::set<std::string> remaining(mu.labels.begin(), mu.labels.end());
  for (const auto& lab : mu.labels) {
    if (!remaining.count(lab)) continue;
    std::vector<std::string> orbit;
    for (const auto& g : group) {
      const std::string& img = g.at(lab);
      if (remaining.count(img)) {
        orbit.push_back(img);
        remaining.erase(img);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    rep.orbits.push_back(std::move(orbit));
  }
  return rep;
}

std::vector<Rat> l_vector(const Cocharacter& mu, LVectorMethod method) {
  long ef = mu.e * mu.f;
  std::vector<Rat> l(mu.d);
  if (method == LVectorMethod::direct) {
    for (long i = 1; i <= mu.d; ++i) {
      Rat acc = 0;
      for (const auto& lab : mu.labels) {
        const auto& w = mu.weight(lab);
        for (long k = mu.d - i; k < mu.d; ++k) acc += w[k];
      }
      l[i - 1] = acc / ef;
    }
    return l;
  }

  // reconstruction through the distinct values x_{psi,j}, the multiplicity
  // counters n_{psi,j} = #{k : mu_{psi,k} >= x_{psi,j}} and
  // m_{psi,j}(i) = max(0, n_{psi,j} + i - d)
  for (long i = 1; i <= mu.d; ++i) {
    Rat acc = 0;
    for (const auto& lab : mu.labels) {
      const auto& w = mu.weight(lab);
      std::vector<long> x;
      for (long v : w)
        if (x.empty() || x.back() != v) x.push_back(v);
      long r = static_cast<long>(x.size());
      std::vector<long> n(r);
      for (long j = 0; j < r; ++j) {
        long cnt = 0;
        for (long v : w)
          if (v >= x[j]) ++cnt;
        n[j] = cnt;
      }
      auto m_of = [&](long j) { return std::max<long>(0, n[j] + i - mu.d); };
      for (long j = 0; j + 1 < r; ++j) acc += Rat(x[j] - x[j + 1]) * m_of(j);
      acc += Rat(x[r - 1]) * m_of(r - 1);
    }
    l[i - 1] = acc / ef;
  }
  return l;
}

DimensionReport dimension_formulas(const Cocharacter& mu) {
  DimensionReport rep;
  for (const auto& lab : mu.labels) {
    const auto& w = mu.weight(lab);
    for (long j = 1; j <= mu.d; ++j) rep.dim_q += (mu.d + 1 - 2 * j) * w[j - 1];
    for (long i = 0; i < mu.d; ++i)
      for (long j = 0; j < mu.d; ++j)
        if (w[i] > w[j]) ++rep.dim_flag;
  }
  rep.dim_p = mu.f * mu.d * mu.d;
  return rep;
}

GapReport combinatorial_gap(const std::vector<long>& r) {
  GapReport rep;
  long n = static_cast<long>(r.size());
  if (n == 0) throw InputError("empty vector");
  long sum = 0;
  rep.exceptional = true;
  for (long i = 0; i < n; ++i) {
    rep.gap += r[i] * r[i];
    if (i + 1 < n) rep.gap -= r[i] * r[i + 1];
    sum += r[i];
    if (r[i] != 1) rep.exceptional = false;
  }
  if (sum >= n && !rep.exceptional && rep.gap <= 1)
    throw InputError("combinatorial bound violated; not reachable for integer input");
  return rep;
}

} // namespace hodgepink
