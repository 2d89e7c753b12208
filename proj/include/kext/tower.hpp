#pragma once

#include "json.hpp"

#include <string>
#include <vector>

#include "kext/field.hpp"
#include "kext/poly.hpp"

namespace kext {

using json = nlohmann::json;

struct StepInput {
  StepKind kind = StepKind::Transcendental;
  std::string var;
  std::vector<std::string> minpoly;  // coefficient expressions, constant term first

  static StepInput transcendental(std::string var) { return {StepKind::Transcendental, std::move(var), {}}; }
  static StepInput algebraic(std::string var, std::vector<std::string> minpoly) {
    return {StepKind::Algebraic, std::move(var), std::move(minpoly)};
  }
};

/// Handle on the top level of a validated tower Q or GF(p) followed by
/// transcendental / algebraic steps.
class FieldTower {
public:
  FieldTower() = default;
  explicit FieldTower(FieldPtr top) : top_(std::move(top)) {}

  const FieldPtr& field() const { return top_; }
  const Field& operator*() const { return *top_; }
  const Field* operator->() const { return top_.get(); }
  std::size_t num_steps() const { return top_->depth(); }
  const StepSpec& step(std::size_t i) const { return *top_->level(i + 1).step(); }
  /// Every algebraic step had its irreducibility certified.
  bool verified() const;
  /// Short human name such as "GF(2)(t)(s)".
  std::string name() const;
  /// name(), except that finite fields print as "GF(q)".
  std::string label() const;

  json to_json() const;
  static FieldTower from_json(const json& j);

  bool operator==(const FieldTower& o) const { return same_field(*top_, *o.top_); }

private:
  FieldPtr top_;
};

/// Validates and builds a tower. Errors: NonPrimeCharacteristic,
/// DuplicateVariable, ReducibleMinPoly (when irreducibility is decidable),
/// BadParameters for non-monic or empty minimal polynomials.
FieldTower tower_build(BaseKind base, std::uint64_t p, const std::vector<StepInput>& steps);
/// Extends an existing tower by more steps (same validation).
FieldTower tower_extend(const FieldTower& tower, const std::vector<StepInput>& steps);

/// Field element bundled with its field, for API convenience.
class Scalar {
public:
  Scalar() = default;
  Scalar(FieldPtr field, Elem value) : field_(std::move(field)), value_(std::move(value)) {}
  static Scalar parse(const FieldPtr& field, const std::string& text) { return {field, field->parse(text)}; }

  const FieldPtr& field() const { return field_; }
  const Elem& value() const { return value_; }
  bool is_zero() const { return field_->is_zero(value_); }
  std::string to_string() const { return field_->to_string(value_); }

  Scalar operator+(const Scalar& o) const { return {field_, field_->add(value_, check(o))}; }
  Scalar operator-(const Scalar& o) const { return {field_, field_->sub(value_, check(o))}; }
  Scalar operator*(const Scalar& o) const { return {field_, field_->mul(value_, check(o))}; }
  Scalar operator/(const Scalar& o) const { return {field_, field_->div(value_, check(o))}; }
  Scalar operator-() const { return {field_, field_->neg(value_)}; }
  Scalar inverse() const { return {field_, field_->inv(value_)}; }
  bool operator==(const Scalar& o) const { return field_->equal(value_, check(o)); }

private:
  const Elem& check(const Scalar& o) const {
    if (!same_field(*field_, *o.field_)) raise(ErrorKind::MixedFields, field_->key() + " vs " + o.field_->key());
    return o.value_;
  }

  FieldPtr field_;
  Elem value_;
};

/// Accepts JSON numbers or scalar expression strings.
Elem parse_scalar(const Field& f, const json& j);

}  // namespace kext
