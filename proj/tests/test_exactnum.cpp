#include "doctest.h"

#include <random>

#include "kext/factor.hpp"
#include "kext/matrix.hpp"
#include "kext/tower.hpp"

using namespace kext;

namespace {

FieldTower gf4() {
  return tower_build(BaseKind::PrimeField, 2, {StepInput::algebraic("w", {"1", "1", "1"})});
}

Poly product_of(const FieldPtr& f, const std::vector<Factor>& fs) {
  Poly r(f, {f->one()});
  for (const auto& x : fs)
    for (int i = 0; i < x.multiplicity; ++i) r = r * x.poly;
  return r;
}

// Brute-force irreducibility over a small finite field: no monic divisor of
// degree 1..deg/2.
bool brute_irreducible(const Poly& p) {
  const Field& f = *p.field();
  const auto q = f.order().get_ui();
  const int n = p.degree();
  for (int d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      upoly::Coeffs c(d + 1);
      std::uint64_t x = code;
      for (int i = 0; i < d; ++i) {
        c[i] = f.from_index(x % q);
        x /= q;
      }
      c[d] = f.one();
      if (upoly::is_zero(upoly::rem(f, p.coeffs(), c))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("prime field arithmetic and characteristic errors") {
  auto f = make_prime_field(7);
  CHECK(f->to_string(f->mul(f->from_int(3), f->from_int(5))) == "1");
  CHECK(f->to_string(f->inv(f->from_int(3))) == "5");
  CHECK_THROWS_AS(make_prime_field(6), Error);
  try {
    make_prime_field(9);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPrimeCharacteristic);
  }
}

TEST_CASE("GF(4) tower: field axioms by exhaustion") {
  auto t = gf4();
  const Field& f = *t;
  CHECK(f.order() == 4);
  CHECK(t.name() == "GF(2)(w)");
  const Elem w = f.generator();
  // w^2 = w + 1
  CHECK(f.equal(f.mul(w, w), f.add(w, f.one())));
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) {
      Elem x = f.from_index(a), y = f.from_index(b);
      CHECK(f.equal(f.add(x, y), f.add(y, x)));
      CHECK(f.equal(f.mul(x, y), f.mul(y, x)));
      if (b != 0) CHECK(f.equal(f.mul(f.div(x, y), y), x));
    }
}

TEST_CASE("rationals and parsing") {
  auto q = make_rationals();
  CHECK(q->to_string(q->parse("1/2 + 1/3")) == "5/6");
  CHECK(q->to_string(q->parse("(2^3 - 1) * -1")) == "-7");
  CHECK_THROWS_AS(q->parse("1/0"), Error);
  CHECK_THROWS_AS(q->parse("x"), Error);
}

TEST_CASE("transcendental level normalizes fractions") {
  auto t = tower_build(BaseKind::PrimeField, 2, {StepInput::transcendental("t")});
  const Field& f = *t;
  Elem a = f.parse("(t^2 + 1)/(t + 1)");
  CHECK(f.equal(a, f.parse("t + 1")));
  CHECK(f.is_one(f.parse("(t+1)/(t+1)")));
}

TEST_CASE("tower validation") {
  CHECK_THROWS_AS(tower_build(BaseKind::Rationals, 0, {StepInput::algebraic("x", {"-1", "0", "1"})}), Error);
  try {
    tower_build(BaseKind::Rationals, 0, {StepInput::algebraic("x", {"-1", "0", "1"})});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReducibleMinPoly);
  }
  try {
    tower_build(BaseKind::PrimeField, 2, {StepInput::transcendental("t"), StepInput::transcendental("t")});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateVariable);
  }
  // s^2 - t over GF(2)(t): irreducible but inseparable.
  auto ins = tower_build(BaseKind::PrimeField, 2,
                         {StepInput::transcendental("t"), StepInput::algebraic("s", {"t", "0", "1"})});
  CHECK(ins.verified());
  const Field& f = *ins;
  const Elem s = f.generator();
  CHECK(f.equal(f.mul(s, s), f.parse("t")));
  CHECK_FALSE(is_separable_step(Poly(f.parent(), f.step()->minpoly)));
  auto j = ins.to_json();
  CHECK(FieldTower::from_json(j) == ins);
}

TEST_CASE("factorization over finite fields reproduces the input") {
  auto t = gf4();
  const FieldPtr& f = t.field();
  Poly p = Poly::from_strings(f, {"1", "1", "1"});
  auto fs = poly_factor(p);
  REQUIRE(fs.size() == 2);
  CHECK(product_of(f, fs) == p);
  for (const auto& x : fs) CHECK(x.poly.degree() == 1);

  std::mt19937_64 rng(11);
  auto g3 = make_prime_field(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int deg = 1 + static_cast<int>(uniform_below(rng, 8));
    upoly::Coeffs c;
    for (int i = 0; i < deg; ++i) c.push_back(g3->random(rng, 0));
    c.push_back(g3->one());
    Poly poly(g3, c);
    auto factors = poly_factor(poly);
    CHECK(product_of(g3, factors) == poly);
    for (const auto& x : factors) CHECK(brute_irreducible(x.poly));
  }
}

TEST_CASE("factorization over Q") {
  auto q = make_rationals();
  Poly p = Poly::from_strings(q, {"-1", "0", "1"});
  auto fs = poly_factor(p);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].poly.to_string() == "x+1");
  CHECK(fs[1].poly.to_string() == "x-1");
  CHECK(check_irreducible(Poly::from_strings(q, {"1", "0", "1"})) == Irreducibility::Irreducible);
  // x^4 + 1 is irreducible over Q but splits mod every prime.
  CHECK(check_irreducible(Poly::from_strings(q, {"1", "0", "0", "0", "1"})) == Irreducibility::Irreducible);
  Poly r = Poly::from_strings(q, {"-6", "11", "-6", "1"});
  CHECK(poly_roots(r).size() == 3);
  Poly sq = Poly::from_strings(q, {"1", "2", "1"});
  auto sf = poly_factor(sq);
  REQUIRE(sf.size() == 1);
  CHECK(sf[0].multiplicity == 2);
}

TEST_CASE("factorization over Q(i)") {
  auto t = tower_build(BaseKind::Rationals, 0, {StepInput::algebraic("i", {"1", "0", "1"})});
  Poly p = Poly::from_strings(t.field(), {"1", "0", "1"});
  auto fs = poly_factor(p);
  REQUIRE(fs.size() == 2);
  CHECK(product_of(t.field(), fs) == p);
  // x^2 - 2 stays irreducible over Q(i)
  CHECK(poly_factor(Poly::from_strings(t.field(), {"-2", "0", "1"})).size() == 1);
  // x^4 + 1 = (x^2 - i)(x^2 + i)
  auto f4 = poly_factor(Poly::from_strings(t.field(), {"1", "0", "0", "0", "1"}));
  CHECK(f4.size() == 2);
}

TEST_CASE("roots over GF(2)(t)") {
  auto t = tower_build(BaseKind::PrimeField, 2, {StepInput::transcendental("t")});
  // (x - t)(x - t - 1) = x^2 + x + t^2 + t
  Poly p = Poly::from_strings(t.field(), {"t^2 + t", "1", "1"});
  CHECK(poly_roots(p).size() == 2);
  CHECK(poly_roots(Poly::from_strings(t.field(), {"t", "0", "1"})).empty());
}

TEST_CASE("linear algebra basics") {
  auto f = make_prime_field(2);
  Mat a = Mat::from_rows(f, 2, {{f->one(), f->one()}, {f->one(), f->one()}});
  Mat k = kernel(a);
  REQUIRE(k.rows() == 1);
  CHECK(f->is_one(k(0, 0)));
  CHECK(f->is_one(k(0, 1)));
  CHECK(rank(a) == 1);
  CHECK_FALSE(inverse(a).has_value());

  auto q = make_rationals();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Mat m(q, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.set(i, j, q->random(rng, 5));
    auto inv = inverse(m);
    if (q->is_zero(determinant(m))) {
      CHECK_FALSE(inv.has_value());
    } else {
      REQUIRE(inv.has_value());
      CHECK((m * *inv).is_identity());
    }
    Mat lk = left_kernel(m);
    CHECK((lk * m).is_zero());
    CHECK(lk.rows() + rank(m) == 4);
  }
}

TEST_CASE("subspace intersection against dimension formula") {
  auto f = make_prime_field(3);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    Mat a(f, 3, 6), b(f, 3, 6);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 6; ++j) {
        a.set(i, j, f->random(rng, 0));
        b.set(i, j, f->random(rng, 0));
      }
    auto u = SubspaceBasis::span(a), w = SubspaceBasis::span(b);
    auto s = u.sum(w), x = u.intersect(w);
    CHECK(s.dim() + x.dim() == u.dim() + w.dim());
    CHECK(u.contains(x));
    CHECK(w.contains(x));
    EchelonBuilder eb(f, 6);
    for (int i = 0; i < 3; ++i) eb.insert(a.row(i));
    CHECK(eb.result() == u);
  }
}
