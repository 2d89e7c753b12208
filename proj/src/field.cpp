#include "kext/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "kext/poly.hpp"

namespace kext {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::ReducibleMinPoly: return "ReducibleMinPoly";
    case ErrorKind::DuplicateVariable: return "DuplicateVariable";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::BadUnit: return "BadUnit";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::DifferentAlgebras: return "DifferentAlgebras";
    case ErrorKind::NotAGroupAlgebra: return "NotAGroupAlgebra";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Undecidable: return "Undecidable";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::Internal: return "Internal";
  }
  return "Error";
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  // Rejection sampling keeps the stream identical across standard libraries.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// ---------------------------------------------------------------------------
// Field base

void Field::init_base(BaseKind kind, std::uint64_t p) {
  base_kind_ = kind;
  depth_ = 0;
  if (kind == BaseKind::Rationals) {
    characteristic_ = 0;
    finite_ = false;
    order_ = 0;
    key_ = "Q";
  } else {
    characteristic_ = p;
    finite_ = true;
    order_ = mpz_class(std::to_string(p));
    key_ = "GF(" + std::to_string(p) + ")";
  }
}

void Field::init_step(FieldPtr parent, StepSpec step) {
  parent_ = std::move(parent);
  depth_ = parent_->depth() + 1;
  base_kind_ = parent_->base_kind();
  characteristic_ = parent_->characteristic();
  std::string desc;
  if (step.kind == StepKind::Transcendental) {
    finite_ = false;
    order_ = 0;
    desc = "T:" + step.var;
  } else {
    finite_ = parent_->is_finite();
    const int d = upoly::degree(step.minpoly);
    if (finite_) mpz_pow_ui(order_.get_mpz_t(), parent_->order().get_mpz_t(), static_cast<unsigned long>(d));
    desc = "A:" + step.var + ":[";
    for (std::size_t i = 0; i < step.minpoly.size(); ++i) {
      if (i) desc += ",";
      desc += parent_->to_string(step.minpoly[i]);
    }
    desc += "]";
  }
  key_ = parent_->key() + "/" + desc;
  step_ = std::move(step);
}

const Field& Field::level(std::size_t d) const {
  if (d > depth_) raise(ErrorKind::BadParameters, "level beyond tower depth");
  const Field* f = this;
  while (f->depth() > d) f = f->parent().get();
  return *f;
}

FieldPtr Field::level_ptr(std::size_t d) const {
  if (d == depth_) return shared_from_this();
  if (d > depth_) raise(ErrorKind::BadParameters, "level beyond tower depth");
  FieldPtr f = parent_;
  while (f->depth() > d) f = f->parent();
  return f;
}

Elem Field::from_rational(const mpq_class& q) const {
  return div(from_integer(q.get_num()), from_integer(q.get_den()));
}

Elem Field::pow(const Elem& a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), mpz_class(-e));
  Elem result = one();
  Elem base = a;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, base);
    if (i + 1 < bits) base = mul(base, base);
  }
  return result;
}

Elem Field::embed_from_parent(const Elem&) const {
  raise(ErrorKind::BadParameters, "base field has no parent");
}

Elem Field::generator() const { raise(ErrorKind::BadParameters, "base field has no generator"); }

std::uint64_t Field::to_index(const Elem&) const {
  raise(ErrorKind::UnsupportedField, "element indexing needs a finite field");
}

Elem Field::from_index(std::uint64_t) const {
  raise(ErrorKind::UnsupportedField, "element indexing needs a finite field");
}

bool same_field(const Field& a, const Field& b) { return &a == &b || a.key() == b.key(); }

bool is_prefix_of(const Field& small, const Field& large) {
  if (small.depth() > large.depth()) return false;
  return same_field(small, large.level(small.depth()));
}

Elem embed(const Field& from, const Field& to, const Elem& a) {
  if (!is_prefix_of(from, to)) raise(ErrorKind::FieldMismatch, from.key() + " does not embed into " + to.key());
  Elem x = a;
  for (std::size_t d = from.depth() + 1; d <= to.depth(); ++d) x = to.level(d).embed_from_parent(x);
  return x;
}

// ---------------------------------------------------------------------------
// Q

namespace {

class Rationals final : public Field {
public:
  Rationals() { init_base(BaseKind::Rationals, 0); }

  Elem zero() const override { return Elem(mpq_class(0)); }
  Elem one() const override { return Elem(mpq_class(1)); }
  Elem from_integer(const mpz_class& n) const override { return Elem(mpq_class(n)); }
  bool is_zero(const Elem& a) const override { return sgn(a.rational()) == 0; }
  bool equal(const Elem& a, const Elem& b) const override { return a.rational() == b.rational(); }
  Elem add(const Elem& a, const Elem& b) const override { return Elem(mpq_class(a.rational() + b.rational())); }
  Elem sub(const Elem& a, const Elem& b) const override { return Elem(mpq_class(a.rational() - b.rational())); }
  Elem neg(const Elem& a) const override { return Elem(mpq_class(-a.rational())); }
  Elem mul(const Elem& a, const Elem& b) const override { return Elem(mpq_class(a.rational() * b.rational())); }
  Elem inv(const Elem& a) const override {
    if (is_zero(a)) raise(ErrorKind::DivisionByZero, "inverse of 0 in Q");
    return Elem(mpq_class(1 / a.rational()));
  }
  std::string to_string(const Elem& a) const override { return a.rational().get_str(); }
  Elem random(std::mt19937_64& rng, int spread) const override {
    const long s = std::max(spread, 1);
    const long num = static_cast<long>(uniform_below(rng, 2 * s + 1)) - s;
    const long den = 1 + static_cast<long>(uniform_below(rng, 2));
    mpq_class q(num, den);
    q.canonicalize();
    return Elem(q);
  }
};

// ---------------------------------------------------------------------------
// GF(p)

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) raise(ErrorKind::DivisionByZero, "no modular inverse");
  return t < 0 ? t + p : t;
}

class PrimeField final : public Field {
public:
  explicit PrimeField(std::uint64_t p) : p_(static_cast<std::int64_t>(p)) { init_base(BaseKind::PrimeField, p); }

  Elem zero() const override { return Elem(std::int64_t{0}); }
  Elem one() const override { return Elem(std::int64_t{1 % p_}); }
  Elem from_integer(const mpz_class& n) const override {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p_));
    return Elem(static_cast<std::int64_t>(r.get_ui()));
  }
  bool is_zero(const Elem& a) const override { return a.small() == 0; }
  bool equal(const Elem& a, const Elem& b) const override { return a.small() == b.small(); }
  Elem add(const Elem& a, const Elem& b) const override {
    std::int64_t s = a.small() + b.small();
    return Elem(s >= p_ ? s - p_ : s);
  }
  Elem sub(const Elem& a, const Elem& b) const override {
    std::int64_t s = a.small() - b.small();
    return Elem(s < 0 ? s + p_ : s);
  }
  Elem neg(const Elem& a) const override { return Elem(a.small() == 0 ? std::int64_t{0} : p_ - a.small()); }
  Elem mul(const Elem& a, const Elem& b) const override {
    const __int128 m = static_cast<__int128>(a.small()) * b.small();
    return Elem(static_cast<std::int64_t>(m % p_));
  }
  Elem inv(const Elem& a) const override {
    if (a.small() == 0) raise(ErrorKind::DivisionByZero, "inverse of 0 in " + key());
    return Elem(mod_inverse(a.small(), p_));
  }
  std::string to_string(const Elem& a) const override { return std::to_string(a.small()); }
  std::uint64_t to_index(const Elem& a) const override { return static_cast<std::uint64_t>(a.small()); }
  Elem from_index(std::uint64_t i) const override { return Elem(static_cast<std::int64_t>(i % p_)); }
  Elem random(std::mt19937_64& rng, int) const override {
    return Elem(static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(p_))));
  }

private:
  std::int64_t p_;
};

// ---------------------------------------------------------------------------
// Extension levels

using upoly::Coeffs;

const Coeffs& empty_coeffs() {
  static const Coeffs empty;
  return empty;
}

const Coeffs& num_of(const Elem& a) { return a.ext() ? a.ext()->num : empty_coeffs(); }

class AlgebraicLevel final : public Field {
public:
  AlgebraicLevel(FieldPtr parent, StepSpec step) {
    init_step(std::move(parent), std::move(step));
    deg_ = upoly::degree(step_->minpoly);
  }

  const Coeffs& minpoly() const { return step_->minpoly; }
  int degree() const { return deg_; }

  Elem make(Coeffs c) const {
    if (c.empty()) return Elem(std::shared_ptr<const ExtRepr>());
    auto r = std::make_shared<ExtRepr>();
    r->num = std::move(c);
    return Elem(std::shared_ptr<const ExtRepr>(std::move(r)));
  }

  Elem zero() const override { return make({}); }
  Elem one() const override { return make({parent_->one()}); }
  Elem from_integer(const mpz_class& n) const override { return embed_from_parent(parent_->from_integer(n)); }
  bool is_zero(const Elem& a) const override { return a.ext() == nullptr; }
  bool equal(const Elem& a, const Elem& b) const override {
    return upoly::equal(*parent_, num_of(a), num_of(b));
  }
  Elem add(const Elem& a, const Elem& b) const override {
    return make(upoly::add(*parent_, num_of(a), num_of(b)));
  }
  Elem sub(const Elem& a, const Elem& b) const override {
    return make(upoly::sub(*parent_, num_of(a), num_of(b)));
  }
  Elem neg(const Elem& a) const override { return make(upoly::neg(*parent_, num_of(a))); }
  Elem mul(const Elem& a, const Elem& b) const override {
    if (!a.ext() || !b.ext()) return zero();
    return make(upoly::rem(*parent_, upoly::mul(*parent_, num_of(a), num_of(b)), minpoly()));
  }
  Elem inv(const Elem& a) const override {
    if (!a.ext()) raise(ErrorKind::DivisionByZero, "inverse of 0 in " + key());
    auto x = upoly::xgcd(*parent_, num_of(a), minpoly());
    if (upoly::degree(x.g) != 0) raise(ErrorKind::DivisionByZero, "zero divisor in " + key() + " (minimal polynomial is reducible)");
    return make(upoly::rem(*parent_, x.s, minpoly()));
  }
  Elem embed_from_parent(const Elem& a) const override {
    if (parent_->is_zero(a)) return zero();
    return make({a});
  }
  Elem generator() const override {
    return make(upoly::rem(*parent_, upoly::monomial(*parent_, parent_->one(), 1), minpoly()));
  }
  std::string to_string(const Elem& a) const override { return upoly::to_string(*parent_, num_of(a), step_->var); }
  std::uint64_t to_index(const Elem& a) const override {
    if (!finite_) return Field::to_index(a);
    const std::uint64_t q = parent_->order().get_ui();
    std::uint64_t idx = 0, scale = 1;
    for (const auto& c : num_of(a)) {
      idx += parent_->to_index(c) * scale;
      scale *= q;
    }
    return idx;
  }
  Elem from_index(std::uint64_t i) const override {
    if (!finite_) return Field::from_index(i);
    const std::uint64_t q = parent_->order().get_ui();
    Coeffs c;
    for (int k = 0; k < deg_; ++k) {
      c.push_back(parent_->from_index(i % q));
      i /= q;
    }
    upoly::trim(*parent_, c);
    return make(std::move(c));
  }
  Elem random(std::mt19937_64& rng, int spread) const override {
    Coeffs c;
    for (int k = 0; k < deg_; ++k) c.push_back(parent_->random(rng, spread));
    upoly::trim(*parent_, c);
    return make(std::move(c));
  }

private:
  int deg_ = 0;
};

class TranscendentalLevel final : public Field {
public:
  TranscendentalLevel(FieldPtr parent, StepSpec step) { init_step(std::move(parent), std::move(step)); }

  Elem make(Coeffs num, Coeffs den) const {
    const Field& k = *parent_;
    if (num.empty()) return Elem(std::shared_ptr<const ExtRepr>());
    if (upoly::degree(den) > 0) {
      Coeffs g = upoly::gcd(k, num, den);
      if (upoly::degree(g) > 0) {
        num = upoly::quo(k, num, g);
        den = upoly::quo(k, den, g);
      }
    }
    if (!k.is_one(den.back())) {
      const Elem lc_inv = k.inv(den.back());
      num = upoly::scale(k, num, lc_inv);
      den = upoly::scale(k, den, lc_inv);
    }
    auto r = std::make_shared<ExtRepr>();
    r->num = std::move(num);
    r->den = std::move(den);
    return Elem(std::shared_ptr<const ExtRepr>(std::move(r)));
  }
  const Coeffs& den_of(const Elem& a) const { return a.ext() ? a.ext()->den : one_poly_; }

  Elem zero() const override { return Elem(std::shared_ptr<const ExtRepr>()); }
  Elem one() const override { return make({parent_->one()}, {parent_->one()}); }
  Elem from_integer(const mpz_class& n) const override { return embed_from_parent(parent_->from_integer(n)); }
  bool is_zero(const Elem& a) const override { return a.ext() == nullptr; }
  bool equal(const Elem& a, const Elem& b) const override {
    if (!a.ext() || !b.ext()) return !a.ext() && !b.ext();
    return upoly::equal(*parent_, a.ext()->num, b.ext()->num) && upoly::equal(*parent_, a.ext()->den, b.ext()->den);
  }
  Elem add(const Elem& a, const Elem& b) const override {
    if (!a.ext()) return b;
    if (!b.ext()) return a;
    const Field& k = *parent_;
    const Coeffs &n1 = a.ext()->num, &d1 = a.ext()->den, &n2 = b.ext()->num, &d2 = b.ext()->den;
    if (upoly::equal(k, d1, d2)) return make(upoly::add(k, n1, n2), d1);
    return make(upoly::add(k, upoly::mul(k, n1, d2), upoly::mul(k, n2, d1)), upoly::mul(k, d1, d2));
  }
  Elem sub(const Elem& a, const Elem& b) const override { return add(a, neg(b)); }
  Elem neg(const Elem& a) const override {
    if (!a.ext()) return a;
    return make(upoly::neg(*parent_, a.ext()->num), a.ext()->den);
  }
  Elem mul(const Elem& a, const Elem& b) const override {
    if (!a.ext() || !b.ext()) return zero();
    const Field& k = *parent_;
    Coeffs n1 = a.ext()->num, d1 = a.ext()->den, n2 = b.ext()->num, d2 = b.ext()->den;
    if (upoly::degree(d2) > 0) {
      Coeffs g = upoly::gcd(k, n1, d2);
      if (upoly::degree(g) > 0) {
        n1 = upoly::quo(k, n1, g);
        d2 = upoly::quo(k, d2, g);
      }
    }
    if (upoly::degree(d1) > 0) {
      Coeffs g = upoly::gcd(k, n2, d1);
      if (upoly::degree(g) > 0) {
        n2 = upoly::quo(k, n2, g);
        d1 = upoly::quo(k, d1, g);
      }
    }
    return make(upoly::mul(k, n1, n2), upoly::mul(k, d1, d2));
  }
  Elem inv(const Elem& a) const override {
    if (!a.ext()) raise(ErrorKind::DivisionByZero, "inverse of 0 in " + key());
    return make(a.ext()->den, a.ext()->num);
  }
  Elem embed_from_parent(const Elem& a) const override {
    if (parent_->is_zero(a)) return zero();
    return make({a}, {parent_->one()});
  }
  Elem generator() const override { return make({parent_->zero(), parent_->one()}, {parent_->one()}); }
  std::string to_string(const Elem& a) const override {
    const std::string& v = step_->var;
    if (!a.ext()) return "0";
    const std::string n = upoly::to_string(*parent_, a.ext()->num, v);
    if (upoly::degree(a.ext()->den) == 0) return n;
    return "(" + n + ")/(" + upoly::to_string(*parent_, a.ext()->den, v) + ")";
  }
  Elem random(std::mt19937_64& rng, int spread) const override {
    const int deg = static_cast<int>(uniform_below(rng, 3));
    Coeffs num;
    for (int k = 0; k <= deg; ++k) num.push_back(parent_->random(rng, spread));
    upoly::trim(*parent_, num);
    Coeffs den{parent_->one()};
    if (uniform_below(rng, 3) == 0) den = {parent_->random(rng, spread), parent_->one()};
    if (num.empty()) return zero();
    return make(std::move(num), std::move(den));
  }

private:
  Coeffs one_poly_;
};

// ---------------------------------------------------------------------------
// Tabulated finite fields: index = nested coordinates written in base |parent|,
// which makes the embedding of the parent the identity on indices.

constexpr std::uint64_t kMaxTabulated = 1u << 16;

class FiniteTableField final : public Field {
public:
  explicit FiniteTableField(std::shared_ptr<const AlgebraicLevel> generic) : generic_(std::move(generic)) {
    parent_ = generic_->parent();
    depth_ = generic_->depth();
    base_kind_ = generic_->base_kind();
    characteristic_ = generic_->characteristic();
    finite_ = true;
    order_ = generic_->order();
    key_ = generic_->key();
    step_ = *generic_->step();
    q_ = order_.get_ui();
    p_ = characteristic_;
    build_tables();
  }

  Elem zero() const override { return Elem(std::int64_t{0}); }
  Elem one() const override { return Elem(std::int64_t{1}); }
  Elem from_integer(const mpz_class& n) const override {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p_));
    return Elem(static_cast<std::int64_t>(r.get_ui()));
  }
  bool is_zero(const Elem& a) const override { return a.small() == 0; }
  bool equal(const Elem& a, const Elem& b) const override { return a.small() == b.small(); }
  Elem add(const Elem& a, const Elem& b) const override { return Elem(static_cast<std::int64_t>(add_idx(a.small(), b.small()))); }
  Elem sub(const Elem& a, const Elem& b) const override {
    return Elem(static_cast<std::int64_t>(add_idx(a.small(), neg_[b.small()])));
  }
  Elem neg(const Elem& a) const override { return Elem(static_cast<std::int64_t>(neg_[a.small()])); }
  Elem mul(const Elem& a, const Elem& b) const override {
    if (a.small() == 0 || b.small() == 0) return zero();
    std::uint64_t e = log_[a.small()] + log_[b.small()];
    if (e >= q_ - 1) e -= q_ - 1;
    return Elem(static_cast<std::int64_t>(exp_[e]));
  }
  Elem inv(const Elem& a) const override {
    if (a.small() == 0) raise(ErrorKind::DivisionByZero, "inverse of 0 in " + key());
    const std::uint64_t l = log_[a.small()];
    return Elem(static_cast<std::int64_t>(exp_[l == 0 ? 0 : q_ - 1 - l]));
  }
  Elem embed_from_parent(const Elem& a) const override { return a; }
  Elem generator() const override { return from_generic(generic_->generator()); }
  std::string to_string(const Elem& a) const override { return generic_->to_string(to_generic(a)); }
  std::uint64_t to_index(const Elem& a) const override { return static_cast<std::uint64_t>(a.small()); }
  Elem from_index(std::uint64_t i) const override { return Elem(static_cast<std::int64_t>(i)); }
  Elem random(std::mt19937_64& rng, int) const override {
    return Elem(static_cast<std::int64_t>(uniform_below(rng, q_)));
  }

private:
  Elem to_generic(const Elem& a) const { return generic_->from_index(static_cast<std::uint64_t>(a.small())); }
  Elem from_generic(const Elem& g) const { return Elem(static_cast<std::int64_t>(generic_->to_index(g))); }

  std::uint64_t add_idx(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    if (!add_.empty()) return add_[a * q_ + b];
    std::uint64_t r = 0, scale = 1;
    while (a || b) {
      r += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }

  void build_tables() {
    neg_.resize(q_);
    for (std::uint64_t i = 0; i < q_; ++i) {
      std::uint64_t a = i, r = 0, scale = 1;
      while (a) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
      }
      neg_[i] = static_cast<std::uint32_t>(r);
    }
    if (p_ != 2 && q_ <= 1024) {
      add_.resize(q_ * q_);
      for (std::uint64_t a = 0; a < q_; ++a)
        for (std::uint64_t b = 0; b < q_; ++b) {
          std::uint64_t x = a, y = b, r = 0, scale = 1;
          while (x || y) {
            r += ((x % p_ + y % p_) % p_) * scale;
            x /= p_;
            y /= p_;
            scale *= p_;
          }
          add_[a * q_ + b] = static_cast<std::uint32_t>(r);
        }
    }
    // Prime divisors of q - 1 for the primitivity test.
    std::vector<std::uint64_t> primes;
    std::uint64_t m = q_ - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        primes.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) primes.push_back(m);

    const AlgebraicLevel& g = *generic_;
    std::uint64_t prim = 1;
    for (std::uint64_t c = 1; c < q_; ++c) {
      const Elem x = g.from_index(c);
      bool ok = true;
      for (auto r : primes)
        if (g.is_one(g.pow(x, static_cast<long>((q_ - 1) / r)))) {
          ok = false;
          break;
        }
      if (ok) {
        prim = c;
        break;
      }
    }
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Elem x = g.one();
    const Elem gen = g.from_index(prim);
    for (std::uint64_t k = 0; k + 1 < q_; ++k) {
      const std::uint64_t idx = g.to_index(x);
      exp_[k] = static_cast<std::uint32_t>(idx);
      log_[idx] = static_cast<std::uint32_t>(k);
      x = g.mul(x, gen);
    }
  }

  std::shared_ptr<const AlgebraicLevel> generic_;
  std::uint64_t q_ = 0, p_ = 0;
  std::vector<std::uint32_t> exp_, log_, neg_, add_;
};

// ---------------------------------------------------------------------------
// Scalar expression parser

class Parser {
public:
  Parser(const Field& f, const std::string& s) : f_(f), s_(s) {}

  Elem run() {
    Elem v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    raise(ErrorKind::ParseError, "'" + s_ + "' at " + std::to_string(pos_) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Elem expr() {
    Elem v = term();
    for (;;) {
      if (eat('+')) v = f_.add(v, term());
      else if (eat('-')) v = f_.sub(v, term());
      else return v;
    }
  }
  Elem term() {
    Elem v = unary();
    for (;;) {
      if (eat('*')) v = f_.mul(v, unary());
      else if (eat('/')) v = f_.div(v, unary());
      else return v;
    }
  }
  Elem unary() {
    if (eat('-')) return f_.neg(unary());
    if (eat('+')) return unary();
    return power();
  }
  Elem power() {
    Elem base = atom();
    if (eat('^')) {
      bool negative = eat('-');
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      mpz_class e(s_.substr(start, pos_ - start));
      if (negative) e = -e;
      return f_.pow(base, e);
    }
    return base;
  }
  Elem atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Elem v = expr();
      if (!eat(')')) fail("expected )");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return f_.from_integer(mpz_class(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      for (std::size_t d = f_.depth(); d >= 1; --d) {
        const Field& lvl = f_.level(d);
        if (lvl.step()->var == name) return embed(lvl, f_, lvl.generator());
      }
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const Field& f_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Elem Field::parse(const std::string& text) const { return Parser(*this, text).run(); }

FieldPtr make_rationals() { return std::make_shared<Rationals>(); }

FieldPtr make_prime_field(std::uint64_t p) {
  mpz_class z(std::to_string(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    raise(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  return std::make_shared<PrimeField>(p);
}

FieldPtr adjoin_transcendental(const FieldPtr& parent, const std::string& var) {
  StepSpec s;
  s.kind = StepKind::Transcendental;
  s.var = var;
  return std::make_shared<TranscendentalLevel>(parent, std::move(s));
}

FieldPtr adjoin_algebraic(const FieldPtr& parent, const std::string& var, std::vector<Elem> minpoly, bool verified) {
  upoly::trim(*parent, minpoly);
  if (upoly::degree(minpoly) < 1) raise(ErrorKind::BadParameters, "minimal polynomial must have positive degree");
  if (!parent->is_one(minpoly.back())) raise(ErrorKind::BadParameters, "minimal polynomial must be monic");
  StepSpec s;
  s.kind = StepKind::Algebraic;
  s.var = var;
  s.minpoly = std::move(minpoly);
  s.verified = verified;
  auto generic = std::make_shared<AlgebraicLevel>(parent, std::move(s));
  if (generic->is_finite() && generic->order() <= kMaxTabulated) return std::make_shared<FiniteTableField>(generic);
  return generic;
}

}  // namespace kext
