#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "kext/matrix.hpp"
#include "kext/poly.hpp"

namespace kext {

/// Finite group by multiplication table on {0, ..., n-1}.
struct Group {
  std::string name;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::vector<int> inverse;
  int identity = 0;

  std::size_t order() const { return table.size(); }
};

/// Validates a Cayley table (closure, associativity, identity, inverses).
/// Throws NotAGroup.
Group make_group(std::vector<std::vector<int>> table, std::string name = "");
/// Groups of order <= 12 by name: C1..C12, V4 (= C2xC2), C4xC2, C2xC2xC2,
/// C3xC3, C6xC2, S3, D4, D5, D6, Q8, A4, Dic3. Identity is element 0.
Group named_group(const std::string& name);
const std::vector<std::string>& named_group_names();

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional associative unital algebra with basis e_0..e_{n-1}
/// and e_i e_j = sum_k c(i,j,k) e_k. Immutable; derived data (radical,
/// generators, regular representation) is computed on first use.
class Algebra {
public:
  /// No validation; see build_algebra.
  Algebra(FieldPtr field, std::size_t dim, std::vector<Elem> sc, Vec unit, std::string name = "");
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Elem& c(std::size_t i, std::size_t j, std::size_t k) const { return sc_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Elem>& structure_constants() const { return sc_; }
  const Vec& unit() const { return unit_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const std::optional<Group>& group() const { return group_; }
  void set_group(Group g) { group_ = std::move(g); }

  Vec basis_vec(std::size_t i) const { return unit_vec(*field_, dim_, i); }
  Vec mul(std::span<const Elem> a, std::span<const Elem> b) const;
  /// Matrix of x -> x*a (rows are images of basis vectors).
  Mat right_mult(std::span<const Elem> a) const;
  /// Matrix of x -> a*x.
  Mat left_mult(std::span<const Elem> a) const;
  /// Right multiplication by e_j: the regular representation.
  const Mat& regular_action(std::size_t j) const;
  /// Basis indices that generate the algebra (with 1) under multiplication.
  const std::vector<std::size_t>& generators() const;
  bool is_commutative() const;

  /// Cached Jacobson radical; throws UnsupportedField in characteristic p
  /// over infinite fields.
  const SubspaceBasis& radical() const;

private:
  FieldPtr field_;
  std::size_t dim_;
  std::vector<Elem> sc_;
  Vec unit_;
  std::string name_;
  std::optional<Group> group_;

  mutable std::mutex mu_;
  mutable std::vector<Mat> regular_;
  mutable std::optional<std::vector<std::size_t>> generators_;
  mutable std::optional<SubspaceBasis> radical_;
};

/// First (i, j, k) in lexicographic order with (e_i e_j) e_k != e_i (e_j e_k).
std::optional<std::array<std::size_t, 3>> associativity_witness(const Field& f, std::size_t n,
                                                               const std::vector<Elem>& sc);

/// Validated constructor. Throws NotAssociative (message names the witness
/// triple) or BadUnit.
AlgebraPtr build_algebra(FieldPtr field, std::size_t dim, std::vector<Elem> sc, Vec unit,
                         std::string name = "");
AlgebraPtr group_algebra(const Group& g, FieldPtr field);
/// i^2 = a, j^2 = b, ij = -ji = k. BadParameters for a or b zero or
/// characteristic 2.
AlgebraPtr quaternion_algebra(const Elem& a, const Elem& b, FieldPtr field);
/// F[x]/(f), basis 1, x, ..., x^{d-1}. f is made monic.
AlgebraPtr polyquotient_algebra(const Poly& f);
/// Upper (or lower) triangular n x n matrices, basis E_ij in lexicographic order.
AlgebraPtr triangular_algebra(std::size_t n, FieldPtr field, bool lower = false);
/// Full matrix algebra M_n(F), basis E_ij in lexicographic order.
AlgebraPtr matrix_algebra(std::size_t n, FieldPtr field);
AlgebraPtr product_algebra(const Algebra& a, const Algebra& b);
/// E / I for a two-sided ideal I; basis = images of the non-pivot basis vectors.
AlgebraPtr quotient_algebra(const Algebra& e, const SubspaceBasis& ideal);
/// Same structure constants read in an extension field of e.field().
AlgebraPtr change_field(const Algebra& e, const FieldPtr& larger);

/// Two-sided ideal generated by the rows of `gens`.
SubspaceBasis two_sided_ideal(const Algebra& e, const Mat& gens);
/// Span of all products xy with x in I, y in J.
SubspaceBasis ideal_product(const Algebra& e, const SubspaceBasis& i, const SubspaceBasis& j);

SubspaceBasis radical(const Algebra& e);
bool is_semisimple(const Algebra& e);
SubspaceBasis center(const Algebra& e);
/// Semisimple with separable center. Over characteristic p the test only
/// needs minimal polynomials of central elements, so commutative algebras
/// over function fields are decided too.
bool is_separable_algebra(const Algebra& e);

struct FrobeniusResult {
  bool frobenius = false;
  std::optional<Vec> functional;  // lambda(e_i), verified nondegenerate
  bool certain = true;            // false only for a negative answer from random search
};
FrobeniusResult is_frobenius(const Algebra& e);
/// Gram matrix lambda(e_i e_j).
Mat frobenius_gram(const Algebra& e, std::span<const Elem> lambda);

/// Minimal polynomial of a square matrix.
Poly minimal_polynomial(const Mat& a);
Poly element_minpoly(const Algebra& e, std::span<const Elem> x);
/// Evaluates a polynomial at a square matrix.
Mat poly_eval_matrix(const Poly& p, const Mat& a);

}  // namespace kext
