#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "kext/error.hpp"

namespace kext {

struct ExtRepr;

/// Element of one level of a field tower.
///
/// The owning Field decides which alternative is live: prime fields and
/// tabulated finite fields use a packed integer, Q uses an mpq_class, and
/// transcendental/algebraic levels share an immutable ExtRepr. An Elem on its
/// own carries no field; all arithmetic goes through the Field.
class Elem {
public:
  Elem() = default;
  explicit Elem(std::int64_t v) : v_(v) {}
  explicit Elem(mpq_class q) : v_(std::move(q)) {}
  explicit Elem(std::shared_ptr<const ExtRepr> e) : v_(std::move(e)) {}

  std::int64_t small() const { return std::get<std::int64_t>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  const ExtRepr* ext() const { return std::get<std::shared_ptr<const ExtRepr>>(v_).get(); }

private:
  std::variant<std::int64_t, mpq_class, std::shared_ptr<const ExtRepr>> v_;
};

/// Coefficient lists over the parent level, lowest degree first, no trailing
/// zeros. Algebraic levels leave `den` empty; transcendental levels keep it
/// monic and coprime to `num`. The zero element is a null ExtRepr.
struct ExtRepr {
  std::vector<Elem> num;
  std::vector<Elem> den;
};

enum class BaseKind { Rationals, PrimeField };
enum class StepKind { Transcendental, Algebraic };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

struct StepSpec {
  StepKind kind = StepKind::Transcendental;
  std::string var;
  std::vector<Elem> minpoly;  // over the previous level; empty when transcendental
  bool verified = true;       // irreducibility of minpoly was certified
};

/// One level of a field tower. Levels are immutable and shared; two levels
/// with equal key() have interchangeable element representations.
class Field : public std::enable_shared_from_this<Field> {
public:
  virtual ~Field() = default;

  const FieldPtr& parent() const { return parent_; }
  std::size_t depth() const { return depth_; }
  BaseKind base_kind() const { return base_kind_; }
  std::uint64_t characteristic() const { return characteristic_; }
  bool is_finite() const { return finite_; }
  /// |F| for finite fields.
  const mpz_class& order() const { return order_; }
  const std::string& key() const { return key_; }
  /// Null for the base level.
  const StepSpec* step() const { return step_ ? &*step_ : nullptr; }
  /// Ancestor at the given depth (0 = base); `this` when d == depth().
  const Field& level(std::size_t d) const;
  FieldPtr level_ptr(std::size_t d) const;

  virtual Elem zero() const = 0;
  virtual Elem one() const = 0;
  virtual Elem from_integer(const mpz_class& n) const = 0;
  Elem from_int(long n) const { return from_integer(mpz_class(n)); }
  Elem from_rational(const mpq_class& q) const;

  virtual bool is_zero(const Elem& a) const = 0;
  virtual bool equal(const Elem& a, const Elem& b) const = 0;
  bool is_one(const Elem& a) const { return equal(a, one()); }

  virtual Elem add(const Elem& a, const Elem& b) const = 0;
  virtual Elem sub(const Elem& a, const Elem& b) const = 0;
  virtual Elem neg(const Elem& a) const = 0;
  virtual Elem mul(const Elem& a, const Elem& b) const = 0;
  /// Throws DivisionByZero on zero.
  virtual Elem inv(const Elem& a) const = 0;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, const mpz_class& e) const;
  Elem pow(const Elem& a, long e) const { return pow(a, mpz_class(e)); }

  /// Canonical image of a parent element.
  virtual Elem embed_from_parent(const Elem& a) const;
  /// The adjoined variable of this level.
  virtual Elem generator() const;

  virtual std::string to_string(const Elem& a) const = 0;
  /// Parses the scalar expression grammar (+ - * / ^, parentheses,
  /// integers, tower variable names).
  Elem parse(const std::string& text) const;

  /// Finite fields only: bijection with [0, |F|).
  virtual std::uint64_t to_index(const Elem& a) const;
  virtual Elem from_index(std::uint64_t i) const;

  /// Deterministic pseudo-random element; `spread` bounds coefficient size
  /// over infinite fields.
  virtual Elem random(std::mt19937_64& rng, int spread) const = 0;

protected:
  Field() = default;
  void init_base(BaseKind kind, std::uint64_t p);
  void init_step(FieldPtr parent, StepSpec step);

  FieldPtr parent_;
  std::size_t depth_ = 0;
  BaseKind base_kind_ = BaseKind::Rationals;
  std::uint64_t characteristic_ = 0;
  bool finite_ = false;
  mpz_class order_ = 0;
  std::string key_;
  std::optional<StepSpec> step_;
};

FieldPtr make_rationals();
/// Throws NonPrimeCharacteristic when p is not prime.
FieldPtr make_prime_field(std::uint64_t p);
FieldPtr adjoin_transcendental(const FieldPtr& parent, const std::string& var);
/// `minpoly` must be monic over `parent`; irreducibility is the caller's
/// business (see tower_build). Small finite results are tabulated.
FieldPtr adjoin_algebraic(const FieldPtr& parent, const std::string& var, std::vector<Elem> minpoly,
                          bool verified);

/// Lifts `a` from `from` into `to`, which must extend `from` (same key prefix).
Elem embed(const Field& from, const Field& to, const Elem& a);
/// True when `large` is `small` with zero or more extra steps on top.
bool is_prefix_of(const Field& small, const Field& large);
bool same_field(const Field& a, const Field& b);

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace kext
