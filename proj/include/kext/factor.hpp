#pragma once

#include <vector>

#include "kext/poly.hpp"

namespace kext {

struct Factor {
  Poly poly;  // monic irreducible
  int multiplicity = 1;
};

/// Where poly_factor can run: finite fields, Q, and number fields given by a
/// single algebraic step over Q.
bool factorization_supported(const Field& f);
/// Where poly_roots can run: everything factorization supports, plus
/// rational function fields k(t) over a finite field k.
bool root_finding_supported(const Field& f);

/// Complete factorization into monic irreducibles, sorted by (degree,
/// printed form). The leading coefficient is dropped. Throws
/// UnsupportedField outside factorization_supported().
std::vector<Factor> poly_factor(const Poly& f);

/// Squarefree decomposition f = lc * prod g_i^i; works over any field of
/// characteristic 0 and over finite fields.
std::vector<Factor> squarefree_decomposition(const Poly& f);

/// Distinct roots of f in its coefficient field.
std::vector<Elem> poly_roots(const Poly& f);

/// gcd(f, f') is a nonzero constant.
bool is_separable_step(const Poly& f);

enum class Irreducibility { Irreducible, Reducible, Unknown };
/// Decides irreducibility where possible: by factorization, or by the
/// rational root test for degree <= 3 over k(t).
Irreducibility check_irreducible(const Poly& f);

}  // namespace kext
