#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kext/field.hpp"

namespace kext {

/// Dense univariate polynomial arithmetic on raw coefficient vectors
/// (lowest degree first) over a field level. Results are always trimmed.
namespace upoly {

using Coeffs = std::vector<Elem>;

void trim(const Field& f, Coeffs& a);
/// -1 for the zero polynomial.
int degree(const Coeffs& a);
bool is_zero(const Coeffs& a);
bool equal(const Field& f, const Coeffs& a, const Coeffs& b);

Coeffs constant(const Field& f, const Elem& c);
Coeffs monomial(const Field& f, const Elem& c, int deg);
Coeffs add(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs sub(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs neg(const Field& f, const Coeffs& a);
Coeffs mul(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs scale(const Field& f, const Coeffs& a, const Elem& c);
/// Quotient and remainder; b must be nonzero.
std::pair<Coeffs, Coeffs> divmod(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs rem(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs quo(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs monic(const Field& f, const Coeffs& a);
/// Monic gcd; gcd(0, 0) = 0.
Coeffs gcd(const Field& f, const Coeffs& a, const Coeffs& b);
struct Xgcd {
  Coeffs g, s, t;  // g = s*a + t*b, g monic
};
Xgcd xgcd(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs derivative(const Field& f, const Coeffs& a);
Elem eval(const Field& f, const Coeffs& a, const Elem& x);
Coeffs powmod(const Field& f, const Coeffs& base, const mpz_class& e, const Coeffs& mod);
Coeffs mulmod(const Field& f, const Coeffs& a, const Coeffs& b, const Coeffs& mod);
/// p(a*x + b).
Coeffs compose_linear(const Field& f, const Coeffs& p, const Elem& a, const Elem& b);
Coeffs embed(const Field& from, const Field& to, const Coeffs& a);
std::string to_string(const Field& f, const Coeffs& a, const std::string& var);

}  // namespace upoly

/// A univariate polynomial with its coefficient field attached.
class Poly {
public:
  Poly() = default;
  Poly(FieldPtr field, upoly::Coeffs coeffs, std::string var = "x");

  const FieldPtr& field() const { return field_; }
  const upoly::Coeffs& coeffs() const { return coeffs_; }
  const std::string& var() const { return var_; }
  int degree() const { return upoly::degree(coeffs_); }
  bool is_zero() const { return coeffs_.empty(); }
  const Elem& leading() const { return coeffs_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const;

  Poly derivative() const;
  Poly monic() const;
  std::string to_string() const;

  /// Parses each coefficient string with the field's scalar grammar.
  static Poly from_strings(FieldPtr field, const std::vector<std::string>& coeffs,
                           std::string var = "x");

private:
  FieldPtr field_;
  upoly::Coeffs coeffs_;
  std::string var_ = "x";
};

Poly gcd(const Poly& a, const Poly& b);

}  // namespace kext
