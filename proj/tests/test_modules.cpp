#include "doctest.h"

#include <random>

#include "kext/tower.hpp"
#include "oracles.hpp"

using namespace kext;

namespace {

FieldPtr Q() { return make_rationals(); }
FieldPtr GF(std::uint64_t p) { return make_prime_field(p); }
FieldPtr gf4() { return tower_build(BaseKind::PrimeField, 2, {StepInput::algebraic("w", {"1", "1", "1"})}).field(); }
AlgebraPtr grp(const std::string& name, FieldPtr f) { return group_algebra(named_group(name), std::move(f)); }
AlgebraPtr pq(FieldPtr f, std::vector<std::string> c) { return polyquotient_algebra(Poly::from_strings(f, c)); }
ModulePtr reg(const AlgebraPtr& a) { return regular_module(a); }

std::vector<std::size_t> chain_dims(const FiltrationReport& r) {
  std::vector<std::size_t> d;
  for (std::size_t i = 1; i < r.chain.size(); ++i) d.push_back(r.chain[i].dim());
  return d;
}

// The 2-dimensional simple of F[C3]: the augmentation kernel of the regular module.
ModulePtr c3_simple(const FieldPtr& f) {
  auto a = grp("C3", f);
  auto r = reg(a);
  const Field& k = *f;
  Mat aug(f, 3, 1);
  for (int i = 0; i < 3; ++i) aug.set(i, 0, k.one());
  return submodule(r, SubspaceBasis::span(left_kernel(aug.transpose().transpose())));
}

}  // namespace

TEST_CASE("hom space examples") {
  auto a = grp("C2", GF(2));
  CHECK(hom_dim(reg(a), trivial_module(a)) == 1);
  CHECK(hom_dim(trivial_module(a), reg(a)) == 1);
  auto h = quaternion_algebra(Q()->from_int(-1), Q()->from_int(-1), Q());
  CHECK(hom_dim(reg(h), reg(h)) == 4);
  auto c3 = grp("C3", Q());
  CHECK(hom_dim(reg(c3), reg(c3)) == 3);
  auto hs = hom_space(reg(c3), reg(c3));
  for (const auto& phi : hs.basis) CHECK(is_intertwiner(*reg(c3), *reg(c3), phi));
  CHECK_THROWS_AS(hom_space(reg(c3), reg(a)), Error);
}

TEST_CASE("End of the regular module is the opposite algebra") {
  for (auto a : {grp("S3", Q()), triangular_algebra(2, Q()), pq(GF(3), {"1", "0", "1"})}) {
    auto end = endomorphism_algebra(hom_space(reg(a), reg(a)));
    CHECK(end->dim() == a->dim());
    CHECK_FALSE(associativity_witness(*end->field(), end->dim(), end->structure_constants()));
    CHECK(end->is_commutative() == a->is_commutative());
  }
}

TEST_CASE("spin") {
  auto a = grp("C2", GF(2));
  const Field& f = *a->field();
  CHECK(spin_vector(*reg(a), a->unit()).dim() == 2);
  CHECK(spin_vector(*reg(a), Vec{f.one(), f.one()}).dim() == 1);
  CHECK(spin(*reg(a), Mat(a->field(), 0, 2)).dim() == 0);
}

TEST_CASE("socle and filtration") {
  auto x3 = pq(Q(), {"0", "0", "0", "1"});
  auto s = socle(reg(x3));
  REQUIRE(s.dim() == 1);
  CHECK(s.contains(x3->basis_vec(2)));
  auto fr = socle_filtration(reg(x3));
  CHECK(chain_dims(fr) == std::vector<std::size_t>{1, 2, 3});
  CHECK(fr.socle_length == 3);
  auto t2 = triangular_algebra(2, Q());
  auto st = socle(reg(t2));
  CHECK(st.dim() == 2);
  CHECK(st.contains(t2->basis_vec(1)));
  CHECK(st.contains(t2->basis_vec(2)));
  auto c2 = grp("C2", GF(2));
  CHECK(chain_dims(socle_filtration(reg(c2))) == std::vector<std::size_t>{1, 2});
  auto ss = reg(grp("C3", Q()));
  CHECK(socle_filtration(ss).socle_length == 1);
  // zero module
  auto zero = submodule(ss, SubspaceBasis::zero(ss->field(), 3));
  auto fz = socle_filtration(zero);
  CHECK(fz.socle_length == 0);
  CHECK(socle(zero).dim() == 0);
}

TEST_CASE("semisimplify") {
  auto x2 = pq(Q(), {"0", "0", "1"});
  auto ss = semisimplify(reg(x2));
  CHECK(ss->dim() == 2);
  CHECK(ss->action(1).is_zero());
  CHECK(socle(ss).dim() == 2);
  auto t2 = triangular_algebra(2, Q());
  auto d = decompose(reg(t2));
  CHECK_FALSE(d.semisimple);
  CHECK(d.length == 3);
  REQUIRE(d.summands.size() == 2);
  std::vector<std::size_t> mults = {d.summands[0].multiplicity, d.summands[1].multiplicity};
  std::sort(mults.begin(), mults.end());
  CHECK(mults == std::vector<std::size_t>{1, 2});
  // ss(ss(M)) is isomorphic to ss(M)
  auto s1 = semisimplify(reg(t2));
  CHECK(are_isomorphic(semisimplify(s1), s1));
}

TEST_CASE("decompose examples") {
  auto check_dims = [](const DecompositionReport& r, std::vector<std::size_t> dims, std::vector<std::size_t> ends) {
    std::vector<std::size_t> d, e;
    for (const auto& s : r.summands) {
      d.push_back(s.simple->dim());
      e.push_back(s.end_dim);
    }
    CHECK(d == dims);
    CHECK(e == ends);
  };
  auto q3 = decompose(reg(grp("C3", Q())));
  check_dims(q3, {1, 2}, {1, 2});
  CHECK(q3.certified);
  auto f3 = decompose(reg(grp("C3", GF(2))));
  check_dims(f3, {1, 2}, {1, 2});
  auto gf4alg = pq(GF(2), {"1", "1", "1"});
  auto g4 = decompose(reg(gf4alg));
  check_dims(g4, {2}, {2});
  CHECK(g4.summands[0].multiplicity == 1);
  auto s3 = decompose(reg(grp("S3", Q())));
  check_dims(s3, {1, 1, 2}, {1, 1, 1});
  CHECK(s3.summands[2].multiplicity == 2);
  CHECK(s3.length == 4);
  auto m2 = decompose(reg(matrix_algebra(2, Q())));
  check_dims(m2, {2}, {1});
  CHECK(m2.summands[0].multiplicity == 2);
  auto h = decompose(reg(quaternion_algebra(Q()->from_int(-1), Q()->from_int(-1), Q())));
  check_dims(h, {4}, {4});
  auto split = decompose(reg(quaternion_algebra(Q()->from_int(1), Q()->from_int(1), Q())));
  check_dims(split, {2}, {1});
  CHECK(split.summands[0].multiplicity == 2);
  auto a4 = decompose(reg(grp("A4", GF(3))));
  CHECK_FALSE(a4.semisimple);
  // Certificate: blocks
  for (const auto& rep : {q3, f3, s3, m2}) {
    std::size_t total = 0;
    for (auto b : rep.block_sizes) total += b;
    CHECK(total == rep.change_of_basis->rows());
  }
}

TEST_CASE("decompose over Q8 and D4 over Q") {
  auto q8 = decompose(reg(grp("Q8", Q())));
  // four 1-dim characters and the 4-dim rational quaternion representation
  std::size_t ones = 0, fours = 0;
  for (const auto& s : q8.summands) {
    if (s.simple->dim() == 1) ++ones;
    if (s.simple->dim() == 4) {
      ++fours;
      CHECK(s.end_dim == 4);
      CHECK(s.multiplicity == 1);
    }
  }
  CHECK(ones == 4);
  CHECK(fours == 1);
  auto d4 = decompose(reg(grp("D4", Q())));
  CHECK(d4.length == 6);
}

TEST_CASE("tensor and dual") {
  auto a = grp("C2", Q());
  const Field& f = *a->field();
  auto sign = make_module(a, {Mat::identity(a->field(), 1), Mat::identity(a->field(), 1).scaled(f.from_int(-1))});
  auto t = tensor_module(sign, sign);
  CHECK(t->action(1).is_identity());
  auto c3 = grp("C3", GF(2));
  auto triv = trivial_module(c3);
  auto r = reg(c3);
  auto tr = tensor_module(triv, r);
  for (std::size_t g = 0; g < 3; ++g) CHECK(tr->action(g) == r->action(g));
  auto s = c3_simple(GF(2));
  auto ds = dual_module(s);
  CHECK(test_simple(ds).verdict == Simplicity::Simple);
  CHECK_THROWS_AS(dual_module(reg(triangular_algebra(2, Q()))), Error);
}

TEST_CASE("oracle agreement on small finite-field modules") {
  std::vector<ModulePtr> mods;
  for (auto f : {GF(2), GF(3)}) {
    for (auto g : {"C2", "C3", "C4", "V4"}) mods.push_back(reg(grp(g, f)));
    mods.push_back(reg(triangular_algebra(2, f)));
    mods.push_back(reg(pq(f, {"0", "0", "1"})));
    mods.push_back(reg(pq(f, {"0", "0", "0", "1"})));
    mods.push_back(reg(pq(f, {"1", "0", "0", "0", "1"})));
    mods.push_back(trivial_module(grp("S3", f)));
    mods.push_back(coset_module(grp("S3", f), {3}));
    mods.push_back(coset_module(grp("A4", f), {1}));
    mods.push_back(semisimplify(reg(grp("C4", f))));
  }
  for (const auto& m : mods) {
    CAPTURE(m->name());
    const auto lat = oracle::submodule_lattice(*m);
    CHECK(oracle::elements_of(socle(m)) == lat.socle);
    CHECK(composition_length(m) == lat.length);
    const auto fr = socle_filtration(m);
    CHECK(fr.socle_length <= lat.length);
    for (const auto& s : fr.chain) {
      const auto el = oracle::elements_of(s);
      CHECK(std::find(lat.submodules.begin(), lat.submodules.end(), el) != lat.submodules.end());
    }
  }
}

TEST_CASE("Hom additivity and the semisimplification bound on random pairs") {
  std::mt19937_64 rng(3);
  std::vector<AlgebraPtr> algs = {grp("C4", GF(2)), grp("S3", GF(3)), triangular_algebra(3, Q()),
                                  pq(Q(), {"0", "0", "1"})};
  for (const auto& a : algs) {
    auto r = reg(a);
    auto fr = socle_filtration(r);
    std::vector<ModulePtr> pool = {r, fr.semisimplification};
    for (const auto& s : fr.chain)
      if (s.dim() > 0) {
        pool.push_back(submodule(r, s));
        if (s.dim() < r->dim()) pool.push_back(quotient(r, s));
      }
    for (int t = 0; t < 6; ++t) {
      auto x = pool[uniform_below(rng, pool.size())];
      auto y = pool[uniform_below(rng, pool.size())];
      auto z = pool[uniform_below(rng, pool.size())];
      CHECK(hom_dim(direct_sum(*x, *y), z) == hom_dim(x, z) + hom_dim(y, z));
      CHECK(hom_dim(x, y) <= hom_dim(semisimplify(x), semisimplify(y)));
    }
  }
}

TEST_CASE("isomorphism search") {
  auto a = grp("S3", Q());
  auto r = reg(a);
  auto ss = semisimplify(r);
  auto iso = find_isomorphism(r, ss);
  REQUIRE(iso.has_value());
  CHECK(is_intertwiner(*r, *ss, *iso));
  CHECK(inverse(*iso).has_value());
  auto t2 = triangular_algebra(2, Q());
  auto rt = reg(t2);
  auto top = quotient(rt, radical(*t2).dim() ? SubspaceBasis::span(Mat::from_rows(t2->field(), 3, {t2->basis_vec(1)}))
                                             : SubspaceBasis::zero(t2->field(), 3));
  auto soc = submodule(rt, socle(rt));
  CHECK_FALSE(are_isomorphic(soc, top));
}
