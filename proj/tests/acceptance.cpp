// Acceptance run: one line per criterion, exact checks plus wall-time limits.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "kext/factor.hpp"
#include "kext/properties.hpp"

using namespace kext;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool ok = true;
  std::string note;
  void require(bool c, const std::string& what) {
    if (!c && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& name, double limit_ms, const std::function<Verdict()>& body) {
  const auto t0 = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.ok = false;
    v.note = e.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (ms >= limit_ms) v.require(false, "time limit exceeded");
  if (!v.ok) ++failures;
  std::printf("%-4s %2d %-28s %9.1f ms (limit %.0f ms)%s%s\n", v.ok ? "PASS" : "FAIL", n, name.c_str(), ms, limit_ms,
              v.note.empty() ? "" : "  ", v.note.c_str());
  std::fflush(stdout);
}

void require_report(Verdict& v, const PropertyReport& r) {
  v.require(r.pass, check_name(r.check) + " reported a counterexample");
  if (r.counterexample) v.require(false, r.counterexample->dump());
}

bool mentions(const PropertyReport& r, const std::string& s) {
  for (const auto& o : r.instances)
    if (o.instance.find(s) != std::string::npos) return true;
  return false;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  catalog();
  std::printf("catalog v%s: %zu algebras, built in %.1f ms\n", catalog_version().c_str(), catalog().algebras().size(),
              std::chrono::duration<double, std::milli>(Clock::now() - t0).count());

  criterion(1, "FF_T", 30000, [] {
    Verdict v;
    const auto r = run_check(CheckId::FF_T, 7, 100);
    require_report(v, r);
    v.require(r.instances.size() >= 100, "fewer than 100 instances");
    for (const auto& o : r.instances) v.require(o.dims["small"] == o.dims["large"], o.instance + ": dims differ");
    for (const char* f : {"GF(2) -> GF(4)", "GF(3) -> GF(9)", "GF(4) -> GF(16)", "Q -> Q(i)", "Q -> Q(w)",
                          "Q(i) -> ", "Q(w) -> ", "GF(2)(t) -> "})
      v.require(mentions(r, f), std::string("no instance along ") + f);
    return v;
  });

  criterion(2, "SS_SEPARABLE", 30000, [] {
    Verdict v;
    const auto r = run_check(CheckId::SS_SEPARABLE, 1, 20);
    require_report(v, r);
    for (const auto& o : r.instances)
      if (o.dims.contains("socle")) v.require(o.dims["socle"] == o.dims["dim"], o.instance);
    return v;
  });

  criterion(3, "INSEP_COUNTEREXAMPLE", 1000, [] {
    Verdict v;
    const auto r = run_check(CheckId::INSEP_COUNTEREXAMPLE, 1, 1);
    require_report(v, r);
    const auto small = named_field("GF(2)(t)");
    const Poly x2t = Poly::from_strings(small, {"t", "0", "1"});
    v.require(!is_separable_step(x2t), "x^2 - t reported separable");
    const auto& ca = catalog().algebra("GF(2)(t)[x]/(x^2+t)");
    const auto& inc = catalog().inclusion(small, named_field("GF(2)(t)(s)"));
    const auto rep = split_simple(ca.modules.front().module, inc);
    v.require(rep.semisimple == false, "t(S) not reported non-semisimple");
    v.require(rep.witness.has_value(), "no witness");
    if (rep.witness) {
      const Mat& z = rep.witness->action;
      v.require(!z.is_zero(), "z acts as zero");
      v.require((z * z).is_zero(), "z^2 != 0");
      const auto big = inc.extend(ca.algebra);
      const Vec zz = big->mul(rep.witness->element, rep.witness->element);
      bool zero = true;
      for (const auto& c : zz) zero = zero && inc.large()->is_zero(c);
      v.require(zero, "z^2 != 0 in the algebra");
    }
    return v;
  });

  criterion(4, "HOM_SS_BOUND", 60000, [] {
    Verdict v;
    const auto r = run_check(CheckId::HOM_SS_BOUND, 1, 50);
    require_report(v, r);
    v.require(r.instances.size() >= 200, "fewer than 200 pairs");
    const auto* o = r.find("Q[x]/(x^2):regular , Q[x]/(x^2):regular");
    v.require(o && o->dims["hom"] == 2 && o->dims["hom_ss"] == 4, "Q[x]/(x^2) regular witness is not 2 <= 4");
    return v;
  });

  criterion(5, "FROBENIUS", 30000, [] {
    Verdict v;
    for (auto id : {CheckId::SEMISIMPLE_IMPLIES_FROBENIUS, CheckId::FROBENIUS_STABLE, CheckId::FROBENIUS_SOC_TOP})
      require_report(v, run_check(id, 1, 10));
    const auto r = run_check(CheckId::FROBENIUS_SOC_TOP, 1, 0);
    for (const char* t : {"T2(Q)", "T2(GF(2))", "T2(GF(3))"}) {
      const auto* o = r.find(t);
      v.require(o && o->dims["frobenius"] == false && o->dims["soc_top_iso"] == false,
                std::string(t) + " should fail both Frobenius and soc = top");
    }
    return v;
  });

  criterion(6, "IDEAL_LATTICE", 60000, [] {
    Verdict v;
    const auto r = run_check(CheckId::IDEAL_LATTICE, 1, 0);
    require_report(v, r);
    const auto* o = r.find("GF(2)[x]/(x^2+x+1):regular @ GF(2) -> GF(4)");
    v.require(o && o->dims["ideals"] == 4 && o->dims["submodules"] == 4, "GF(4) over GF(2) lattice is not 4/4");
    return v;
  });

  criterion(7, "LENGTH_END", 30000, [] {
    Verdict v;
    const auto r = run_check(CheckId::LENGTH_END, 1, 20);
    require_report(v, r);
    return v;
  });

  criterion(8, "TENSOR_FUNCTOR", 30000, [] {
    Verdict v;
    const auto r = run_check(CheckId::TENSOR_FUNCTOR, 1, 20);
    require_report(v, r);
    return v;
  });

  criterion(9, "ORACLE_LATTICE", 60000, [] {
    Verdict v;
    const auto r = run_check(CheckId::ORACLE_LATTICE, 1, 0);
    require_report(v, r);
    std::size_t expected = 0;
    for (const auto& ca : catalog().algebras()) {
      const Field& f = *ca.algebra->field();
      if (f.depth() != 0 || (f.characteristic() != 2 && f.characteristic() != 3)) continue;
      for (const auto& m : ca.modules) {
        if (m.module->dim() > 4) continue;
        ++expected;
        v.require(r.find(m.name) != nullptr, m.name + " not covered");
      }
    }
    v.require(expected > 0, "no modules");
    return v;
  });

  criterion(10, "splitting examples", 10000, [] {
    Verdict v;
    {
      const auto& s = catalog().module("GF(2)[C3]:simple2").module;
      const auto& inc = catalog().inclusion(named_field("GF(2)"), named_field("GF(4)"));
      const auto rep = split_simple(s, inc);
      v.require(rep.decomposition && rep.decomposition->summands.size() == 2, "GF(2)[C3] simple2: not two summands");
      if (rep.decomposition)
        for (const auto& x : rep.decomposition->summands)
          v.require(x.simple->dim() == 1 && x.multiplicity == 1, "GF(2)[C3] simple2: summand is not 1-dim");
    }
    {
      const auto& s = catalog().module("Q[C3]:simple2").module;
      const auto& inc = catalog().inclusion(named_field("Q"), named_field("Q(w)"));
      const auto rep = split_simple(s, inc);
      v.require(rep.length == 2u, "Q[C3] simple2: length is not 2");
      const auto big = inc.extend(s->algebra());
      const Field& f = *big->field();
      const Elem w = f.generator();
      const Group& g = *big->group();
      Vec total(3, f.zero());
      std::size_t rank_sum = 0;
      for (long k = 0; k < 3; ++k) {
        // e_k = (1/3) sum_j w^(jk) g^-j
        Vec e(3, f.zero());
        for (std::size_t j = 0; j < 3; ++j)
          e[j] = f.div(f.pow(w, (k * static_cast<long>(g.inverse[j])) % 3), f.from_int(3));
        const Mat a = rep.extended->action_of(e);
        v.require(a * a == a, "character idempotent not idempotent");
        for (std::size_t j = 0; j < 3; ++j) {
          const Vec gj = big->basis_vec(j);
          const Vec l = big->mul(e, gj), rr = big->mul(gj, e);
          for (std::size_t i = 0; i < 3; ++i) v.require(f.equal(l[i], rr[i]), "character idempotent not central");
        }
        const std::size_t rk = rank(a);
        v.require(rk == (k == 0 ? 0u : 1u), "character idempotent has the wrong rank");
        rank_sum += rk;
        for (std::size_t j = 0; j < 3; ++j) total[j] = f.add(total[j], e[j]);
      }
      v.require(rank_sum == 2, "idempotent ranks do not sum to 2");
      for (std::size_t j = 0; j < 3; ++j) v.require(f.equal(total[j], big->unit()[j]), "idempotents do not sum to 1");
    }
    {
      const auto& ca = catalog().algebra("(-1,-1)_Q");
      const auto& inc = catalog().inclusion(named_field("Q"), named_field("Q(i)"));
      const auto tm = t_extend_module(ca.modules.front().module, inc);
      v.require(tm->dim() == 4, "quaternion regular module is not 4-dim");
      v.require(hom_dim(tm, tm) == 4, "End over Q(i) is not 4-dim");
      v.require(is_semisimple_module(tm), "extended quaternions not semisimple");
    }
    return v;
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
