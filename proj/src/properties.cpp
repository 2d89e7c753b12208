#include "kext/properties.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "kext/factor.hpp"
#include "kext/serialize.hpp"

namespace kext {

namespace {

bool radical_ok(const Field& f) { return f.characteristic() == 0 || f.is_finite(); }

struct Named {
  std::string name;
  ModulePtr module;
  bool simple = false;
};

// Thrown by a checker body for an instance outside the check's regime.
struct Skip {};

json inclusion_json(const TowerInclusion& inc) {
  return json{{"small", field_to_json(inc.small())}, {"large", field_to_json(inc.large())}};
}

json instance_detail(const Algebra& a, const std::vector<const Named*>& mods, const TowerInclusion* inc) {
  json j{{"algebra", algebra_to_json(a)}};
  json m = json::array();
  for (const auto* n : mods) {
    json x = module_to_json(*n->module, false);
    x["name"] = n->name;
    m.push_back(x);
  }
  j["modules"] = m;
  if (inc) j["extension"] = inclusion_json(*inc);
  return j;
}

class Runner {
public:
  Runner(PropertyReport& rep, std::uint64_t seed, CheckId id)
      : rep_(rep), rng_(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(id) + 1) {}

  std::mt19937_64& rng() { return rng_; }
  std::size_t pick(std::size_t n) { return uniform_below(rng_, n); }

  void run(const std::string& instance, const std::function<InstanceOutcome()>& body,
           const std::function<json()>& detail) {
    InstanceOutcome o;
    try {
      o = body();
    } catch (const Skip&) {
      return;
    } catch (const Error& e) {
      o = InstanceOutcome{};
      o.pass = false;
      o.error = e.what();
    }
    o.instance = instance;
    if (!o.pass && !rep_.counterexample) {
      json c{{"instance", instance}, {"seed", rep_.seed}};
      try {
        c["detail"] = detail();
      } catch (const Error& e) {
        c["detail_error"] = e.what();
      }
      rep_.counterexample = c;
    }
    rep_.instances.push_back(std::move(o));
  }

  // Catalog modules plus submodules and quotients of the regular module.
  const std::vector<Named>& pool(const CatalogAlgebra& ca) {
    auto it = pools_.find(ca.name);
    if (it != pools_.end()) return it->second;
    std::vector<Named> p;
    for (const auto& m : ca.modules) p.push_back({m.name, m.module, m.simple});
    if (radical_ok(*ca.algebra->field())) {
      const auto& reg = ca.modules.front().module;
      const auto soc = socle(reg);
      if (soc.dim() > 0 && soc.dim() < reg->dim()) {
        p.push_back({ca.name + ":soc(regular)", submodule(reg, soc), false});
        p.push_back({ca.name + ":regular/soc", quotient(reg, soc), false});
      }
      const auto& rad = ca.algebra->radical();
      if (rad.dim() > 0) {
        p.push_back({ca.name + ":rad(regular)", submodule(reg, rad), false});
        p.push_back({ca.name + ":top(regular)", quotient(reg, rad), false});
      }
      std::vector<const CatalogModule*> simples;
      for (const auto& m : ca.modules)
        if (m.simple && m.module->dim() < reg->dim()) simples.push_back(&m);
      if (simples.size() >= 2) {
        const auto* a = simples[0];
        const auto* b = simples[1];
        p.push_back({a->name + "+" + b->name.substr(ca.name.size() + 1), direct_sum(*a->module, *b->module), false});
      }
    }
    return pools_.emplace(ca.name, std::move(p)).first->second;
  }

  ModulePtr semisimplification(const ModulePtr& m) {
    auto it = ss_.find(m.get());
    if (it != ss_.end()) return it->second.second;
    auto s = semisimplify(m);
    ss_.emplace(m.get(), std::make_pair(m, s));
    return s;
  }

private:
  PropertyReport& rep_;
  std::mt19937_64 rng_;
  std::map<std::string, std::vector<Named>> pools_;
  std::map<const Module*, std::pair<ModulePtr, ModulePtr>> ss_;
};

std::vector<const CatalogAlgebra*> algebras_where(const std::function<bool(const CatalogAlgebra&)>& pred) {
  std::vector<const CatalogAlgebra*> out;
  for (const auto& a : catalog().algebras())
    if (pred(a)) out.push_back(&a);
  return out;
}

std::string pair_name(const Named& a, const Named& b, const TowerInclusion* inc) {
  std::string s = a.name + " , " + b.name;
  if (inc) s += " @ " + inc->name();
  return s;
}

// ---------------------------------------------------------------------------

void check_ff(Runner& r, std::size_t trials) {
  auto one = [&](const CatalogAlgebra& ca, const TowerInclusion& inc, const Named& m, const Named& n) {
    r.run(
        pair_name(m, n, &inc),
        [&] {
          const auto rep = check_relative_full_faithfulness(m.module, n.module, inc);
          InstanceOutcome o;
          o.pass = rep.pass;
          o.dims = json{{"small", rep.dim_small}, {"large", rep.dim_large}};
          return o;
        },
        [&] { return instance_detail(*ca.algebra, {&m, &n}, &inc); });
  };
  const auto algs = algebras_where([](const CatalogAlgebra& a) { return !a.extensions.empty(); });
  for (const auto* ca : algs) {
    std::vector<Named> mods;
    for (const auto& m : ca->modules)
      if (mods.size() < 3) mods.push_back({m.name, m.module, m.simple});
    for (const auto& inc : ca->extensions)
      for (const auto& m : mods)
        for (const auto& n : mods) one(*ca, inc, m, n);
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& ca = *algs[r.pick(algs.size())];
    const auto& inc = ca.extensions[r.pick(ca.extensions.size())];
    const auto& p = r.pool(ca);
    one(ca, inc, p[r.pick(p.size())], p[r.pick(p.size())]);
  }
}

void check_hom_ss(Runner& r, std::size_t trials) {
  auto one = [&](const CatalogAlgebra& ca, const Named& x, const Named& y) {
    r.run(
        pair_name(x, y, nullptr),
        [&] {
          const std::size_t a = hom_dim(x.module, y.module);
          const std::size_t b = hom_dim(r.semisimplification(x.module), r.semisimplification(y.module));
          InstanceOutcome o;
          o.pass = a <= b;
          o.dims = json{{"hom", a}, {"hom_ss", b}};
          return o;
        },
        [&] { return instance_detail(*ca.algebra, {&x, &y}, nullptr); });
  };
  const auto algs = algebras_where([](const CatalogAlgebra& a) { return radical_ok(*a.algebra->field()); });
  const auto& first = catalog().algebra("Q[x]/(x^2)");
  one(first, r.pool(first)[0], r.pool(first)[0]);
  for (const auto* ca : algs) {
    const auto& p = r.pool(*ca);
    const std::size_t k = p.size() > 1 ? p.size() - 1 : 0;
    if (ca != &first) one(*ca, p[0], p[0]);
    one(*ca, p[0], p[k]);
    one(*ca, p[k], p[0]);
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& ca = *algs[r.pick(algs.size())];
    const auto& p = r.pool(ca);
    one(ca, p[r.pick(p.size())], p[r.pick(p.size())]);
  }
}

void check_ss_separable(Runner& r, std::size_t trials) {
  auto one = [&](const CatalogAlgebra& ca, const TowerInclusion& inc, const Named& m) {
    r.run(
        m.name + " @ " + inc.name(),
        [&] {
          InstanceOutcome o;
          if (radical_ok(*inc.large())) {
            const auto tm = t_extend_module(m.module, inc);
            const std::size_t s = socle(tm).dim();
            o.pass = s == tm->dim();
            o.dims = json{{"dim", tm->dim()}, {"socle", s}};
          } else {
            PermanenceReport p;
            try {
              p = check_semisimplicity_permanence(m.module, inc);
            } catch (const Error& e) {
              if (e.kind() == ErrorKind::Undecidable) throw Skip{};
              throw;
            }
            o.pass = p.pass && p.extended_semisimple;
            o.dims = json{{"dim", m.module->dim()}, {"regime", regime_name(p.regime)}};
          }
          return o;
        },
        [&] { return instance_detail(*ca.algebra, {&m}, &inc); });
  };
  std::vector<std::pair<const CatalogAlgebra*, const TowerInclusion*>> cases;
  for (const auto& ca : catalog().algebras())
    for (const auto& inc : ca.extensions)
      if (inc.separable()) cases.emplace_back(&ca, &inc);
  for (const auto& [ca, inc] : cases) {
    const bool ss = radical_ok(*ca->algebra->field()) && is_semisimple(*ca->algebra);
    for (const auto& m : ca->modules)
      if (m.simple || (m.name == ca->name + ":regular" && ss)) one(*ca, *inc, {m.name, m.module, m.simple});
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& [ca, inc] = cases[r.pick(cases.size())];
    std::vector<const CatalogModule*> simples;
    for (const auto& m : ca->modules)
      if (m.simple) simples.push_back(&m);
    if (simples.empty() || !radical_ok(*ca->algebra->field())) continue;
    const auto* a = simples[r.pick(simples.size())];
    const auto* b = simples[r.pick(simples.size())];
    one(*ca, *inc, {a->name + "+" + b->name.substr(ca->name.size() + 1), direct_sum(*a->module, *b->module), false});
  }
}

void check_ss_endosep(Runner& r, std::size_t trials) {
  auto one = [&](const CatalogAlgebra& ca, const TowerInclusion& inc, const Named& m) {
    r.run(
        m.name + " @ " + inc.name(),
        [&] {
          const auto end = endomorphism_algebra(hom_space(m.module, m.module));
          bool sep = false;
          try {
            sep = is_separable_algebra(*end);
          } catch (const Error& e) {
            if (e.kind() == ErrorKind::UnsupportedField) throw Skip{};
            throw;
          }
          if (!sep) throw Skip{};
          PermanenceReport p;
          try {
            p = check_semisimplicity_permanence(m.module, inc);
          } catch (const Error& e) {
            if (e.kind() == ErrorKind::Undecidable) throw Skip{};
            throw;
          }
          InstanceOutcome o;
          o.pass = p.pass && p.extended_semisimple;
          o.dims = json{{"dim", m.module->dim()}, {"end_dim", end->dim()}, {"regime", regime_name(p.regime)}};
          return o;
        },
        [&] { return instance_detail(*ca.algebra, {&m}, &inc); });
  };
  std::vector<std::pair<const CatalogAlgebra*, const TowerInclusion*>> cases;
  for (const auto& ca : catalog().algebras())
    for (const auto& inc : ca.extensions) cases.emplace_back(&ca, &inc);
  for (const auto& [ca, inc] : cases)
    for (const auto& m : ca->modules)
      if (m.simple) one(*ca, *inc, {m.name, m.module, true});
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& [ca, inc] = cases[r.pick(cases.size())];
    std::vector<const CatalogModule*> simples;
    for (const auto& m : ca->modules)
      if (m.simple) simples.push_back(&m);
    if (simples.empty()) continue;
    const auto* s = simples[r.pick(simples.size())];
    one(*ca, *inc, {s->name, s->module, true});
  }
}

void check_insep(Runner& r) {
  const std::vector<std::pair<std::string, std::string>> cases = {{"GF(2)(t)[x]/(x^2+t)", "GF(2)(t)(s)"},
                                                                   {"GF(3)(t)[x]/(x^3+(2*t))", "GF(3)(t)(s)"}};
  for (const auto& [alg, large] : cases) {
    const auto& ca = catalog().algebra(alg);
    const auto& inc = catalog().inclusion(ca.algebra->field(), named_field(large));
    const Named s{ca.modules.front().name, ca.modules.front().module, true};
    r.run(
        s.name + " @ " + inc.name(),
        [&] {
          const Field& big = *inc.large();
          const StepSpec& st = *big.step();
          const bool step_sep = is_separable_step(Poly(big.parent(), st.minpoly));
          const auto rep = split_simple(s.module, inc);
          const auto perm = check_semisimplicity_permanence(s.module, inc);
          InstanceOutcome o;
          bool ok = !step_sep && !inc.separable() && rep.witness && rep.semisimple == false &&
                    perm.regime == PermanenceRegime::NilpotentWitness && !perm.extended_semisimple;
          if (rep.witness) {
            const auto& w = *rep.witness;
            Mat pw = Mat::identity(inc.large(), s.module->dim());
            for (std::uint64_t k = 0; k < big.characteristic(); ++k) pw = pw * w.action;
            ok = ok && !w.action.is_zero() && pw.is_zero() && w.exponent <= big.characteristic();
            o.witness = witness_to_json(w, big);
          }
          o.pass = ok;
          o.dims = json{{"dim", s.module->dim()},
                        {"end_dim", rep.end_dim_small},
                        {"separable_step", step_sep},
                        {"extended_semisimple", false}};
          return o;
        },
        [&] { return instance_detail(*ca.algebra, {&s}, &inc); });
  }
}

void check_frobenius_soc_top(Runner& r, std::size_t trials) {
  auto one = [&](const std::string& name, const AlgebraPtr& a, bool expect_neither) {
    r.run(
        name,
        [&] {
          const auto fr = is_frobenius(*a);
          const auto reg = regular_module(a);
          const auto soc = submodule(reg, socle(reg));
          const auto top = quotient(reg, a->radical());
          const bool iso = soc->dim() == top->dim() && are_isomorphic(soc, top);
          InstanceOutcome o;
          o.pass = (!fr.frobenius || iso) && (!expect_neither || (!fr.frobenius && fr.certain && !iso));
          o.dims = json{{"dim", a->dim()},
                        {"frobenius", fr.frobenius},
                        {"soc_top_iso", iso},
                        {"soc", soc->dim()},
                        {"top", top->dim()}};
          if (fr.functional) o.witness = json{{"functional", vec_to_json(*a->field(), *fr.functional)}};
          return o;
        },
        [&] { return json{{"algebra", algebra_to_json(*a)}}; });
  };
  const auto algs = algebras_where([](const CatalogAlgebra& a) { return radical_ok(*a.algebra->field()); });
  for (const auto* ca : algs) one(ca->name, ca->algebra, ca->name.rfind("T2(", 0) == 0);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto* a = algs[r.pick(algs.size())];
    const auto* b = algs[r.pick(algs.size())];
    if (!same_field(*a->algebra->field(), *b->algebra->field()) || a->algebra->dim() + b->algebra->dim() > 10) continue;
    auto p = product_algebra(*a->algebra, *b->algebra);
    one(p->name(), p, false);
  }
}

void check_frobenius_stable(Runner& r, std::size_t trials) {
  auto one = [&](const CatalogAlgebra& ca, const TowerInclusion& inc) {
    r.run(
        ca.name + " @ " + inc.name(),
        [&] {
          const auto fr = is_frobenius(*ca.algebra);
          if (!fr.frobenius) throw Skip{};
          const auto big = inc.extend(ca.algebra);
          Vec lambda;
          for (const auto& x : *fr.functional) lambda.push_back(embed(*ca.algebra->field(), *inc.large(), x));
          const bool nondeg = !inc.large()->is_zero(determinant(frobenius_gram(*big, lambda)));
          const auto fr2 = is_frobenius(*big);
          InstanceOutcome o;
          o.pass = nondeg && fr2.frobenius;
          o.dims = json{{"dim", big->dim()}, {"reinterpreted_nondegenerate", nondeg}, {"frobenius", fr2.frobenius}};
          o.witness = json{{"functional", vec_to_json(*inc.large(), lambda)}};
          return o;
        },
        [&] { return json{{"algebra", algebra_to_json(*ca.algebra)}, {"extension", inclusion_json(inc)}}; });
  };
  std::vector<std::pair<const CatalogAlgebra*, const TowerInclusion*>> cases;
  for (const auto& ca : catalog().algebras())
    for (const auto& inc : ca.extensions) cases.emplace_back(&ca, &inc);
  for (const auto& [ca, inc] : cases) one(*ca, *inc);
  for (std::size_t t = 0; t < trials && !cases.empty(); ++t) {
    const auto& [ca, inc] = cases[r.pick(cases.size())];
    one(*ca, *inc);
  }
}

void check_semisimple_frobenius(Runner& r, std::size_t trials) {
  auto one = [&](const std::string& name, const AlgebraPtr& a) {
    r.run(
        name,
        [&] {
          if (!radical_ok(*a->field()) || !is_semisimple(*a)) throw Skip{};
          const auto fr = is_frobenius(*a);
          InstanceOutcome o;
          o.pass = fr.frobenius;
          o.dims = json{{"dim", a->dim()}, {"frobenius", fr.frobenius}};
          if (fr.functional) o.witness = json{{"functional", vec_to_json(*a->field(), *fr.functional)}};
          return o;
        },
        [&] { return json{{"algebra", algebra_to_json(*a)}}; });
  };
  const auto algs = algebras_where([](const CatalogAlgebra& a) { return radical_ok(*a.algebra->field()); });
  for (const auto* ca : algs) {
    one(ca->name, ca->algebra);
    for (const auto& inc : ca->extensions)
      if (radical_ok(*inc.large())) one(ca->name + " @ " + inc.name(), inc.extend(ca->algebra));
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const auto* a = algs[r.pick(algs.size())];
    const auto* b = algs[r.pick(algs.size())];
    if (!same_field(*a->algebra->field(), *b->algebra->field()) || a->algebra->dim() + b->algebra->dim() > 10) continue;
    auto p = product_algebra(*a->algebra, *b->algebra);
    one(p->name(), p);
  }
}

bool within(const Field& f, std::size_t exponent) {
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), f.order().get_mpz_t(), exponent);
  return total <= 65536;
}

void check_ideal_lattice(Runner& r, std::size_t trials) {
  auto one = [&](const CatalogAlgebra& ca, const TowerInclusion& inc, const Named& s) {
    r.run(
        s.name + " @ " + inc.name(),
        [&] {
          const std::size_t end_dim = hom_dim(s.module, s.module);
          if (!within(*inc.large(), end_dim) || !within(*inc.large(), s.module->dim())) throw Skip{};
          const auto rep = ideal_subobject_check(s.module, inc);
          InstanceOutcome o;
          o.pass = rep.pass;
          o.dims = json{{"ideals", rep.ideals},
                        {"submodules", rep.submodules},
                        {"bijective", rep.bijective},
                        {"inclusion_preserving", rep.inclusion_preserving}};
          return o;
        },
        [&] { return instance_detail(*ca.algebra, {&s}, &inc); });
  };
  std::vector<std::pair<const CatalogAlgebra*, TowerInclusion>> cases;
  for (const auto& ca : catalog().algebras()) {
    if (!ca.algebra->field()->is_finite()) continue;
    cases.emplace_back(&ca, TowerInclusion(ca.algebra->field(), ca.algebra->field()));
    for (const auto& inc : ca.extensions) cases.emplace_back(&ca, inc);
  }
  for (const auto& [ca, inc] : cases)
    for (const auto& m : ca->modules)
      if (m.simple) one(*ca, inc, {m.name, m.module, true});
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& [ca, inc] = cases[r.pick(cases.size())];
    std::vector<const CatalogModule*> simples;
    for (const auto& m : ca->modules)
      if (m.simple) simples.push_back(&m);
    if (simples.empty()) continue;
    const auto* s = simples[r.pick(simples.size())];
    one(*ca, inc, {s->name, s->module, true});
  }
}

void check_tensor(Runner& r, std::size_t trials) {
  auto one = [&](const CatalogAlgebra& ca, const TowerInclusion& inc, const Named& m, const Named& n) {
    r.run(
        pair_name(m, n, &inc),
        [&] {
          const auto rep = check_tensor_functoriality(m.module, n.module, inc);
          InstanceOutcome o;
          o.pass = rep.pass;
          o.dims = json{{"tensor_dim", m.module->dim() * n.module->dim()},
                        {"tensor_equal", rep.tensor_equal},
                        {"duals_equal", rep.dual_m_equal && rep.dual_n_equal}};
          return o;
        },
        [&] { return instance_detail(*ca.algebra, {&m, &n}, &inc); });
  };
  std::vector<std::pair<const CatalogAlgebra*, const TowerInclusion*>> cases;
  for (const auto& ca : catalog().algebras())
    if (ca.algebra->group())
      for (const auto& inc : ca.extensions) cases.emplace_back(&ca, &inc);
  for (const auto& [ca, inc] : cases) {
    std::vector<Named> mods;
    for (const auto& m : ca->modules)
      if (m.module->dim() <= 4) mods.push_back({m.name, m.module, m.simple});
    for (std::size_t i = 0; i < mods.size(); ++i)
      for (std::size_t j = i; j < mods.size(); ++j) one(*ca, *inc, mods[i], mods[j]);
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& [ca, inc] = cases[r.pick(cases.size())];
    std::vector<Named> mods;
    for (const auto& m : r.pool(*ca))
      if (m.module->dim() <= 6) mods.push_back(m);
    if (mods.empty()) continue;
    one(*ca, *inc, mods[r.pick(mods.size())], mods[r.pick(mods.size())]);
  }
}

void check_length_end(Runner& r, std::size_t trials) {
  auto simple_case = [&](const CatalogAlgebra& ca, const TowerInclusion& inc, const Named& s) {
    r.run(
        s.name + " @ " + inc.name(),
        [&] {
          const auto rep = split_simple(s.module, inc);
          if (!rep.length || !rep.end_length) throw Skip{};
          InstanceOutcome o;
          o.pass = rep.consistent && *rep.length == *rep.end_length && rep.end_dim_large == rep.end_dim_small &&
                   *rep.length <= rep.end_dim_small;
          o.dims = json{{"length", *rep.length},
                        {"end_length", *rep.end_length},
                        {"end_dim_small", rep.end_dim_small},
                        {"end_dim_large", rep.end_dim_large}};
          return o;
        },
        [&] { return instance_detail(*ca.algebra, {&s}, &inc); });
  };
  auto end_case = [&](const CatalogAlgebra& ca, const TowerInclusion& inc, const Named& m) {
    r.run(
        "End " + m.name + " @ " + inc.name(),
        [&] {
          const std::size_t a = hom_dim(m.module, m.module);
          const auto tm = t_extend_module(m.module, inc);
          const std::size_t b = hom_dim(tm, tm);
          InstanceOutcome o;
          o.pass = a == b;
          o.dims = json{{"end_small", a}, {"end_large", b}};
          return o;
        },
        [&] { return instance_detail(*ca.algebra, {&m}, &inc); });
  };
  std::vector<std::pair<const CatalogAlgebra*, const TowerInclusion*>> cases;
  for (const auto& ca : catalog().algebras())
    for (const auto& inc : ca.extensions)
      if (radical_ok(*inc.large())) cases.emplace_back(&ca, &inc);
  for (const auto& [ca, inc] : cases) {
    for (const auto& m : ca->modules)
      if (m.simple) simple_case(*ca, *inc, {m.name, m.module, true});
    end_case(*ca, *inc, {ca->modules.front().name, ca->modules.front().module, false});
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& [ca, inc] = cases[r.pick(cases.size())];
    const auto& p = r.pool(*ca);
    end_case(*ca, *inc, p[r.pick(p.size())]);
  }
}

void check_oracle_lattice(Runner& r, std::size_t trials) {
  auto one = [&](const CatalogAlgebra& ca, const Named& m) {
    r.run(
        m.name,
        [&] {
          const auto lat = oracle_submodule_lattice(m.module);
          const auto soc = socle(m.module);
          const auto d = decompose(m.module);
          const auto fr = socle_filtration(m.module);
          bool chain_ok = true;
          for (const auto& c : fr.chain) chain_ok = chain_ok && lat.find(c).has_value();
          bool size_ok = true;
          json dims{{"dim", m.module->dim()},
                    {"submodules", lat.size()},
                    {"length", d.length},
                    {"oracle_length", lat.length},
                    {"socle", soc.dim()}};
          if (d.semisimple) {
            const mpz_class n = semisimple_lattice_size(d, *m.module->field());
            size_ok = n == lat.size();
            dims["closed_form_submodules"] = n.get_str();
          }
          InstanceOutcome o;
          o.pass = soc == lat.socle && d.length == lat.length && chain_ok && size_ok;
          o.dims = dims;
          return o;
        },
        [&] { return instance_detail(*ca.algebra, {&m}, nullptr); });
  };
  const auto algs = algebras_where([](const CatalogAlgebra& a) {
    const Field& f = *a.algebra->field();
    return f.depth() == 0 && (f.characteristic() == 2 || f.characteristic() == 3);
  });
  std::vector<std::pair<const CatalogAlgebra*, Named>> small;
  for (const auto* ca : algs)
    for (const auto& m : r.pool(*ca))
      if (m.module->dim() <= 4) small.emplace_back(ca, m);
  for (const auto& [ca, m] : small) one(*ca, m);
  for (std::size_t t = 0; t < trials && !small.empty(); ++t) {
    const auto& [ca, a] = small[r.pick(small.size())];
    const auto& b = small[r.pick(small.size())];
    if (b.first != ca || a.module->dim() + b.second.module->dim() > 4) continue;
    one(*ca, {a.name + "+" + b.second.name.substr(ca->name.size() + 1), direct_sum(*a.module, *b.second.module), false});
  }
}

}  // namespace

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> ids = {
      CheckId::FF_T,           CheckId::SS_SEPARABLE,      CheckId::SS_ENDOSEP,
      CheckId::INSEP_COUNTEREXAMPLE, CheckId::HOM_SS_BOUND, CheckId::FROBENIUS_SOC_TOP,
      CheckId::FROBENIUS_STABLE, CheckId::SEMISIMPLE_IMPLIES_FROBENIUS, CheckId::IDEAL_LATTICE,
      CheckId::TENSOR_FUNCTOR, CheckId::LENGTH_END,        CheckId::ORACLE_LATTICE};
  return ids;
}

std::string check_name(CheckId id) {
  switch (id) {
    case CheckId::FF_T: return "FF_T";
    case CheckId::SS_SEPARABLE: return "SS_SEPARABLE";
    case CheckId::SS_ENDOSEP: return "SS_ENDOSEP";
    case CheckId::INSEP_COUNTEREXAMPLE: return "INSEP_COUNTEREXAMPLE";
    case CheckId::HOM_SS_BOUND: return "HOM_SS_BOUND";
    case CheckId::FROBENIUS_SOC_TOP: return "FROBENIUS_SOC_TOP";
    case CheckId::FROBENIUS_STABLE: return "FROBENIUS_STABLE";
    case CheckId::SEMISIMPLE_IMPLIES_FROBENIUS: return "SEMISIMPLE_IMPLIES_FROBENIUS";
    case CheckId::IDEAL_LATTICE: return "IDEAL_LATTICE";
    case CheckId::TENSOR_FUNCTOR: return "TENSOR_FUNCTOR";
    case CheckId::LENGTH_END: return "LENGTH_END";
    case CheckId::ORACLE_LATTICE: return "ORACLE_LATTICE";
  }
  return "?";
}

CheckId parse_check(const std::string& name) {
  for (auto id : all_checks())
    if (check_name(id) == name) return id;
  raise(ErrorKind::UnknownCheck, "'" + name + "'");
}

const InstanceOutcome* PropertyReport::find(const std::string& instance) const {
  for (const auto& o : instances)
    if (o.instance == instance) return &o;
  return nullptr;
}

json PropertyReport::to_json(bool with_time) const {
  json inst = json::array();
  for (const auto& o : instances) {
    json j{{"instance", o.instance}, {"pass", o.pass}, {"dims", o.dims}};
    if (o.witness) j["witness"] = *o.witness;
    if (o.error) j["error"] = *o.error;
    inst.push_back(j);
  }
  json j{{"check", check_name(check)},
         {"seed", seed},
         {"trials", trials},
         {"catalog_version", catalog_version()},
         {"instances", inst},
         {"counterexample", counterexample ? *counterexample : json(nullptr)},
         {"pass", pass}};
  if (with_time) j["wall_time_ms"] = wall_time_ms;
  return j;
}

PropertyReport run_check(CheckId id, std::uint64_t seed, std::size_t trials) {
  const auto start = std::chrono::steady_clock::now();
  PropertyReport rep;
  rep.check = id;
  rep.seed = seed;
  rep.trials = trials;
  Runner r(rep, seed, id);
  switch (id) {
    case CheckId::FF_T: check_ff(r, trials); break;
    case CheckId::SS_SEPARABLE: check_ss_separable(r, trials); break;
    case CheckId::SS_ENDOSEP: check_ss_endosep(r, trials); break;
    case CheckId::INSEP_COUNTEREXAMPLE: check_insep(r); break;
    case CheckId::HOM_SS_BOUND: check_hom_ss(r, trials); break;
    case CheckId::FROBENIUS_SOC_TOP: check_frobenius_soc_top(r, trials); break;
    case CheckId::FROBENIUS_STABLE: check_frobenius_stable(r, trials); break;
    case CheckId::SEMISIMPLE_IMPLIES_FROBENIUS: check_semisimple_frobenius(r, trials); break;
    case CheckId::IDEAL_LATTICE: check_ideal_lattice(r, trials); break;
    case CheckId::TENSOR_FUNCTOR: check_tensor(r, trials); break;
    case CheckId::LENGTH_END: check_length_end(r, trials); break;
    case CheckId::ORACLE_LATTICE: check_oracle_lattice(r, trials); break;
  }
  rep.pass = !rep.instances.empty() && !rep.counterexample;
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

SubmoduleLattice oracle_submodule_lattice(const ModulePtr& m, std::uint64_t limit) {
  return enumerate_submodules(m, limit);
}

mpz_class semisimple_lattice_size(const DecompositionReport& d, const Field& f) {
  if (!d.semisimple) raise(ErrorKind::NotSemisimple, "closed-form lattice size needs a semisimple module");
  if (!f.is_finite()) raise(ErrorKind::UnsupportedField, "closed-form lattice size needs a finite field");
  mpz_class total = 1;
  for (const auto& s : d.summands) {
    mpz_class q;
    mpz_pow_ui(q.get_mpz_t(), f.order().get_mpz_t(), s.end_dim);
    // sum over k of the Gaussian binomial [m, k]_q
    const std::size_t m = s.multiplicity;
    mpz_class sum = 0, gb = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      sum += gb;
      if (k == m) break;
      mpz_class num = 1, den = 1, qp;
      mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), m - k);
      num = qp - 1;
      mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), k + 1);
      den = qp - 1;
      gb = gb * num / den;
    }
    total *= sum;
  }
  return total;
}

}  // namespace kext
