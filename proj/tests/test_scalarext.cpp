#include "doctest.h"

#include <random>

#include "kext/factor.hpp"
#include "kext/scalarext.hpp"
#include "oracles.hpp"

using namespace kext;

namespace {

FieldPtr Q() { return make_rationals(); }
FieldPtr GF(std::uint64_t p) { return make_prime_field(p); }
FieldPtr ext(const FieldPtr& f, const std::string& var, std::vector<std::string> minpoly) {
  return tower_extend(FieldTower(f), {StepInput::algebraic(var, std::move(minpoly))}).field();
}
FieldPtr gf4() { return ext(GF(2), "w", {"1", "1", "1"}); }
FieldPtr q_i() { return ext(Q(), "i", {"1", "0", "1"}); }
FieldPtr q_omega() { return ext(Q(), "z", {"1", "1", "1"}); }
FieldPtr gf2t() { return tower_build(BaseKind::PrimeField, 2, {StepInput::transcendental("t")}).field(); }
FieldPtr gf2ts() { return ext(gf2t(), "s", {"t", "0", "1"}); }

AlgebraPtr grp(const std::string& name, FieldPtr f) { return group_algebra(named_group(name), std::move(f)); }
AlgebraPtr pq(FieldPtr f, std::vector<std::string> c) { return polyquotient_algebra(Poly::from_strings(f, c)); }

ModulePtr simple_of_dim(const AlgebraPtr& a, std::size_t d) {
  for (const auto& s : decompose(regular_module(a)).summands)
    if (s.simple->dim() == d) return s.simple;
  FAIL("no simple of that dimension");
  return nullptr;
}

// Idempotents of a finite algebra by exhaustive search.
std::size_t count_idempotents(const Algebra& a) {
  const Field& f = *a.field();
  std::size_t n = 0;
  oracle::for_each_vector(f, a.dim(), [&](const Vec& x) {
    const Vec y = a.mul(x, x);
    bool eq = true;
    for (std::size_t i = 0; i < x.size(); ++i) eq = eq && f.equal(x[i], y[i]);
    if (eq) ++n;
  });
  return n;
}

}  // namespace

TEST_CASE("tower inclusions") {
  TowerInclusion a(GF(2), gf4());
  CHECK(a.separable());
  CHECK(a.degree() == 2u);
  TowerInclusion b(gf2t(), gf2ts());
  CHECK_FALSE(b.separable());
  TowerInclusion c(Q(), Q());
  CHECK(c.trivial());
  CHECK_THROWS_AS(TowerInclusion(GF(3), gf4()), Error);
  CHECK_THROWS_AS(TowerInclusion(gf4(), GF(2)), Error);
  CHECK(TowerInclusion(gf2t(), ext(gf2t(), "u", {"t", "1", "1"})).separable());
}

TEST_CASE("extend_algebra examples") {
  // GF(4) over GF(2) becomes GF(4) x GF(4): four idempotents.
  auto e = pq(GF(2), {"1", "1", "1"});
  TowerInclusion inc(GF(2), gf4());
  auto e2 = extend_algebra(e, inc);
  CHECK(e2->dim() == 2);
  CHECK(count_idempotents(*e2) == 4);
  CHECK(count_idempotents(*e) == 2);
  CHECK(extend_algebra(e, inc) == e2);  // cached
  auto d = decompose(regular_module(e2));
  REQUIRE(d.summands.size() == 2);
  CHECK(d.summands[0].simple->dim() == 1);

  auto h = quaternion_algebra(Q()->from_int(-1), Q()->from_int(-1), Q());
  auto hi = extend_algebra(h, TowerInclusion(Q(), q_i()));
  CHECK(is_semisimple(*hi));
  CHECK(center(*hi).dim() == 1);
  CHECK(decompose(regular_module(hi)).summands.at(0).simple->dim() == 2);
  CHECK(decompose(regular_module(h)).summands.at(0).simple->dim() == 4);

  TowerInclusion id(Q(), Q());
  CHECK(extend_algebra(h, id) == h);
  CHECK_THROWS_AS(extend_algebra(e, TowerInclusion(Q(), q_i())), Error);
}

TEST_CASE("t keeps action matrices") {
  auto a = grp("C3", Q());
  TowerInclusion inc(Q(), q_omega());
  auto t = t_extend_module(trivial_module(a), inc);
  CHECK(t->field()->key() == q_omega()->key());
  for (const auto& m : t->actions()) CHECK(m.is_identity());
  CHECK(t->algebra()->group().has_value());

  // exactness: ranks of intertwiners do not change
  auto r = regular_module(grp("S3", Q()));
  auto hs = hom_space(r, r);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 5; ++k) {
    Vec c;
    for (std::size_t i = 0; i < hs.dim(); ++i) c.push_back(Q()->from_int(static_cast<long>(uniform_below(rng, 3)) - 1));
    Mat f = hs.element(c);
    CHECK(rank(f) == rank(t_extend_map(f, TowerInclusion(Q(), q_i()))));
  }
}

TEST_CASE("relative full faithfulness examples") {
  auto h = quaternion_algebra(Q()->from_int(-1), Q()->from_int(-1), Q());
  auto rh = regular_module(h);
  auto r1 = check_relative_full_faithfulness(rh, rh, TowerInclusion(Q(), q_i()));
  CHECK(r1.dim_small == 4);
  CHECK(r1.dim_large == 4);
  CHECK(r1.pass);
  auto c2 = grp("C2", GF(2));
  auto r2 = check_relative_full_faithfulness(trivial_module(c2), regular_module(c2), TowerInclusion(GF(2), gf4()));
  CHECK(r2.dim_small == 1);
  CHECK(r2.dim_large == 1);
  CHECK(r2.pass);
  auto r3 = check_relative_full_faithfulness(rh, rh, TowerInclusion(Q(), Q()));
  CHECK(r3.pass);
  // over a function field
  auto f = pq(gf2t(), {"t", "0", "1"});
  auto r4 = check_relative_full_faithfulness(regular_module(f), regular_module(f), TowerInclusion(gf2t(), gf2ts()));
  CHECK(r4.dim_small == 2);
  CHECK(r4.pass);
}

TEST_CASE("splitting the 2-dim simple of GF(2)[C3] over GF(4)") {
  auto s = simple_of_dim(grp("C3", GF(2)), 2);
  auto rep = split_simple(s, TowerInclusion(GF(2), gf4()));
  REQUIRE(rep.decomposition.has_value());
  CHECK(rep.semisimple == true);
  REQUIRE(rep.decomposition->summands.size() == 2);
  for (const auto& x : rep.decomposition->summands) CHECK(x.simple->dim() == 1);
  CHECK(rep.end_dim_small == 2);
  CHECK(rep.end_dim_large == 2);
  CHECK(rep.length == 2u);
  CHECK(rep.end_length == 2u);
  CHECK(rep.consistent);
  CHECK(rep.end_is_frobenius);
  CHECK(rep.sandwich == std::vector<bool>{true, true});
  // eigenvalues w, w^2 of the generator live in GF(4)
  const Field& f = *rep.extended->field();
  std::size_t eigen = 0;
  for (std::uint64_t x = 0; x < 4; ++x) {
    Mat m = rep.extended->action(1) - Mat::identity(rep.extended->field(), 2).scaled(f.from_index(x));
    if (rank(m) < 2) ++eigen;
  }
  CHECK(eigen == 2);
}

TEST_CASE("splitting GF(4)/GF(2) over GF(4)") {
  auto s = regular_module(pq(GF(2), {"1", "1", "1"}));
  auto rep = split_simple(s, TowerInclusion(GF(2), gf4()));
  CHECK(rep.length == 2u);
  CHECK(rep.end_length == 2u);
  CHECK(count_idempotents(*rep.end_large) == 4);
  CHECK_THROWS_AS(split_simple(regular_module(grp("C2", GF(2))), TowerInclusion(GF(2), gf4())), Error);
}

TEST_CASE("Q[C3] 2-dim simple over Q(omega) and the character idempotents") {
  auto a = grp("C3", Q());
  auto s = simple_of_dim(a, 2);
  TowerInclusion inc(Q(), q_omega());
  auto rep = split_simple(s, inc);
  CHECK(rep.semisimple == true);
  CHECK(rep.length == 2u);
  CHECK(rep.end_length == 2u);

  auto big = extend_algebra(a, inc);
  const Field& f = *big->field();
  const Elem w = f.generator();
  const Group& g = *big->group();
  REQUIRE(g.order() == 3);
  std::size_t total_rank = 0;
  Vec sum = zero_vec(f, 3);
  for (long k = 0; k < 3; ++k) {
    // chi_k(g^j) = w^{jk}; e = (1/3) sum_g chi(g^-1) g
    Vec e(3, f.zero());
    for (std::size_t j = 0; j < 3; ++j) e[j] = f.div(f.pow(w, (k * static_cast<long>(g.inverse[j])) % 3), f.from_int(3));
    const Vec e2 = big->mul(e, e);
    for (std::size_t j = 0; j < 3; ++j) CHECK(f.equal(e2[j], e[j]));
    for (std::size_t j = 0; j < 3; ++j) {
      const Vec gj = big->basis_vec(j);
      const Vec l = big->mul(e, gj), r = big->mul(gj, e);
      for (std::size_t i = 0; i < 3; ++i) CHECK(f.equal(l[i], r[i]));
    }
    const std::size_t rk = rank(rep.extended->action_of(e));
    CHECK(rk == (k == 0 ? 0u : 1u));
    total_rank += rk;
    sum = vec_add(f, sum, e);
  }
  CHECK(total_rank == 2);
  for (std::size_t j = 0; j < 3; ++j) CHECK(f.equal(sum[j], big->unit()[j]));
}

TEST_CASE("quaternions over Q(i)") {
  auto h = quaternion_algebra(Q()->from_int(-1), Q()->from_int(-1), Q());
  TowerInclusion inc(Q(), q_i());
  auto rep = split_simple(regular_module(h), inc);
  CHECK(rep.extended->dim() == 4);
  CHECK(rep.end_dim_large == 4);
  CHECK(rep.semisimple == true);
  CHECK(rep.length == 2u);
  auto p = check_semisimplicity_permanence(regular_module(h), inc);
  CHECK(p.extended_semisimple);
  CHECK(p.pass);
}

TEST_CASE("inseparable extension GF(2)(t)(s)/GF(2)(t)") {
  auto F = gf2t();
  auto Fs = gf2ts();
  CHECK_FALSE(is_separable_step(Poly::from_strings(F, {"t", "0", "1"})));
  auto e = pq(F, {"t", "0", "1"});
  auto s = regular_module(e);
  CHECK(test_simple(s).verdict == Simplicity::Simple);
  TowerInclusion inc(F, Fs);
  auto rep = split_simple(s, inc);
  CHECK(rep.semisimple == false);
  REQUIRE(rep.witness.has_value());
  const auto& z = *rep.witness;
  CHECK(z.exponent == 2);

  // Independent check: E' = F'[x]/(x^2 - t) with x^2 = t; z = a + b x squares to
  // a^2 + b^2 t + 2ab x, so z^2 = 0 iff a = b s up to the Frobenius-killed cross term.
  const Field& f = *Fs;
  const Elem& a = z.element[0];
  const Elem& b = z.element[1];
  CHECK_FALSE(f.is_zero(b));
  CHECK(f.equal(f.mul(a, a), f.mul(f.mul(b, b), f.parse("t"))));
  CHECK(f.equal(f.div(a, b), f.parse("s")));
  CHECK_FALSE(z.action.is_zero());
  CHECK((z.action * z.action).is_zero());

  auto p = check_semisimplicity_permanence(s, inc);
  CHECK(p.regime == PermanenceRegime::NilpotentWitness);
  CHECK_FALSE(p.extended_semisimple);
  CHECK(p.pass);
}

TEST_CASE("function-field permanence with separable End or separable extension") {
  auto F = gf2t();
  auto s = regular_module(pq(F, {"t", "1", "1"}));
  auto p1 = check_semisimplicity_permanence(s, TowerInclusion(F, gf2ts()));
  CHECK(p1.regime == PermanenceRegime::SeparableEnd);
  CHECK(p1.extended_semisimple);
  auto p2 = check_semisimplicity_permanence(s, TowerInclusion(F, ext(F, "u", {"t", "1", "1"})));
  CHECK(p2.regime == PermanenceRegime::SeparableExtension);
  CHECK(p2.extended_semisimple);
}

TEST_CASE("ideal lattice examples") {
  TowerInclusion inc(GF(2), gf4());
  auto r1 = ideal_subobject_check(regular_module(pq(GF(2), {"1", "1", "1"})), inc);
  CHECK(r1.ideals == 4);
  CHECK(r1.submodules == 4);
  CHECK(r1.pass);
  auto r2 = ideal_subobject_check(simple_of_dim(grp("C3", GF(2)), 2), inc);
  CHECK(r2.ideals == 4);
  CHECK(r2.submodules == 4);
  CHECK(r2.pass);
  auto r3 = ideal_subobject_check(trivial_module(grp("C2", GF(2))), inc);
  CHECK(r3.ideals == 2);
  CHECK(r3.submodules == 2);
  CHECK(r3.pass);
  CHECK_THROWS_AS(ideal_subobject_check(regular_module(pq(Q(), {"1", "0", "1"})), TowerInclusion(Q(), q_i())), Error);
}

TEST_CASE("enumerate_submodules agrees with subspace enumeration") {
  std::vector<ModulePtr> mods = {regular_module(grp("C2", GF(2))), regular_module(grp("S3", GF(2))),
                                 regular_module(triangular_algebra(2, GF(3))),
                                 regular_module(pq(GF(3), {"0", "0", "0", "1"}))};
  mods.push_back(t_extend_module(regular_module(pq(GF(2), {"1", "1", "1"})), TowerInclusion(GF(2), gf4())));
  for (const auto& m : mods) {
    CAPTURE(m->name());
    if (m->dim() > 4) continue;
    const auto lat = enumerate_submodules(m);
    const auto o = oracle::submodule_lattice(*m);
    CHECK(lat.size() == o.submodules.size());
    CHECK(lat.length == o.length);
    CHECK(oracle::elements_of(lat.socle) == o.socle);
  }
  CHECK(enumerate_submodules(regular_module(grp("C2", GF(2)))).size() == 3);
  CHECK(enumerate_submodules(trivial_module(grp("C2", GF(2)))).size() == 2);
  CHECK_THROWS_AS(enumerate_submodules(regular_module(grp("C12", GF(3)))), Error);
}

TEST_CASE("tensor functoriality") {
  TowerInclusion inc(GF(2), gf4());
  auto s = simple_of_dim(grp("C3", GF(2)), 2);
  auto r = check_tensor_functoriality(s, s, inc);
  CHECK(r.pass);
  auto triv = trivial_module(s->algebra());
  CHECK(check_tensor_functoriality(triv, s, inc).pass);
  auto c2 = grp("C2", Q());
  CHECK(check_tensor_functoriality(regular_module(c2), regular_module(c2), TowerInclusion(Q(), q_i())).pass);
  CHECK_THROWS_AS(check_tensor_functoriality(regular_module(triangular_algebra(2, Q())),
                                             regular_module(triangular_algebra(2, Q())), TowerInclusion(Q(), q_i())),
                  Error);
}

TEST_CASE("permanence over finite fields") {
  auto p = check_semisimplicity_permanence(regular_module(grp("C3", GF(2))), TowerInclusion(GF(2), gf4()));
  CHECK(p.regime == PermanenceRegime::SeparableExtension);
  CHECK(p.pass);
  CHECK_THROWS_AS(check_semisimplicity_permanence(regular_module(grp("C2", GF(2))), TowerInclusion(GF(2), gf4())),
                  Error);
}
