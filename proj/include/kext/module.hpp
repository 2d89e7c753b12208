#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kext/algebra.hpp"

namespace kext {

class Module;
using ModulePtr = std::shared_ptr<const Module>;

/// Right module: row vectors, v -> v * action(e_i), action(ab) = action(a) action(b).
class Module {
public:
  /// No validation; see make_module.
  Module(AlgebraPtr alg, std::size_t dim, std::vector<Mat> action, std::string name = "");

  const AlgebraPtr& algebra() const { return alg_; }
  const FieldPtr& field() const { return alg_->field(); }
  std::size_t dim() const { return dim_; }
  const Mat& action(std::size_t i) const { return action_[i]; }
  const std::vector<Mat>& actions() const { return action_; }
  /// Action matrix of an arbitrary algebra element.
  Mat action_of(std::span<const Elem> a) const;
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

private:
  AlgebraPtr alg_;
  std::size_t dim_;
  std::vector<Mat> action_;
  std::string name_;
};

/// Validates the representation laws; throws BadParameters on failure.
ModulePtr make_module(AlgebraPtr alg, std::vector<Mat> action, std::string name = "");
ModulePtr regular_module(const AlgebraPtr& alg);
/// Group algebras: every group element acts as 1.
ModulePtr trivial_module(const AlgebraPtr& alg);
/// Group algebras: the permutation module of a homomorphism G -> Sym(points)
/// given as images of every group element (perm[g][x] = x.g).
ModulePtr permutation_module(const AlgebraPtr& alg, const std::vector<std::vector<int>>& perm);
/// Group algebras: action on the right cosets of the subgroup generated by
/// the listed elements.
ModulePtr coset_module(const AlgebraPtr& alg, const std::vector<int>& subgroup_gens);
ModulePtr direct_sum(const Module& a, const Module& b);
/// Entries reinterpreted over the algebra's field extended to `larger`.
ModulePtr change_field(const Module& m, const AlgebraPtr& extended);

/// Intertwiners M -> N as dim(M) x dim(N) matrices Phi with
/// rho_M(a) Phi = Phi rho_N(a); the basis is canonical (reduced echelon of
/// the flattened matrices).
struct HomSpace {
  ModulePtr source, target;
  std::vector<Mat> basis;
  std::vector<std::size_t> pivots;  // flattened pivot positions

  std::size_t dim() const { return basis.size(); }
  /// Coordinates of an intertwiner in `basis`.
  Vec coords(const Mat& phi) const;
  Mat element(std::span<const Elem> coords) const;
};

/// Throws DifferentAlgebras.
HomSpace hom_space(const ModulePtr& m, const ModulePtr& n);
std::size_t hom_dim(const ModulePtr& m, const ModulePtr& n);
bool is_intertwiner(const Module& m, const Module& n, const Mat& phi);

/// Endomorphism algebra with product a*b = "b then a" (composition), so that
/// End(M) acts on M from the left. Basis = hom_space(M, M).basis.
AlgebraPtr endomorphism_algebra(const HomSpace& end);

/// Smallest submodule containing the rows of `vectors`.
SubspaceBasis spin(const Module& m, const Mat& vectors);
SubspaceBasis spin_vector(const Module& m, std::span<const Elem> v);
bool is_submodule(const Module& m, const SubspaceBasis& u);

/// Action on a submodule in its echelon basis.
ModulePtr submodule(const ModulePtr& m, const SubspaceBasis& u);
/// Action on M/U in the basis of the non-pivot unit vectors.
ModulePtr quotient(const ModulePtr& m, const SubspaceBasis& u);
/// dim(M) x dim(M/U) projection matrix for quotient().
Mat quotient_projection(const Module& m, const SubspaceBasis& u);

/// soc(M) = vectors killed by rad(E).
SubspaceBasis socle(const ModulePtr& m);
/// Same, for a given basis of the radical.
SubspaceBasis socle_with_radical(const Module& m, const SubspaceBasis& rad);
bool is_semisimple_module(const ModulePtr& m);

struct FiltrationReport {
  std::vector<SubspaceBasis> chain;  // soc^0 = 0, ..., soc^l = M
  std::vector<ModulePtr> layers;     // soc^i / soc^{i-1}
  std::size_t socle_length = 0;
  ModulePtr semisimplification;
};
FiltrationReport socle_filtration(const ModulePtr& m);
ModulePtr semisimplify(const ModulePtr& m);

struct SimpleSummand {
  ModulePtr simple;
  std::size_t multiplicity = 0;
  std::size_t end_dim = 0;  // dim of End(simple) over the base field
};

struct DecompositionReport {
  std::vector<SimpleSummand> summands;  // sorted by (dim, end_dim)
  std::size_t length = 0;               // composition length
  bool semisimple = true;               // false: summands are composition factors
  bool certified = true;                // simplicity of every summand proven
  /// Semisimple case: rows are the new basis (in M coordinates) in which
  /// every action matrix is block diagonal, one block per summand copy.
  std::optional<Mat> change_of_basis;
  std::vector<std::size_t> block_sizes;
  std::vector<std::size_t> block_summand;  // index into summands per block
};

/// Throws UnsupportedField where neither the radical nor polynomial
/// factorization is available.
DecompositionReport decompose(const ModulePtr& m);
std::size_t composition_length(const ModulePtr& m);

enum class Simplicity { Simple, NotSimple, Unknown };
/// Simplicity of an arbitrary module. Over finite fields this is exact;
/// elsewhere Simple may be reported only as best effort (see certified).
struct SimplicityResult {
  Simplicity verdict = Simplicity::Unknown;
  bool certified = false;
  std::optional<SubspaceBasis> proper_submodule;
};
SimplicityResult test_simple(const ModulePtr& m);

/// Invertible intertwiner between two modules, if one exists (both must be
/// semisimple or decomposable).
std::optional<Mat> find_isomorphism(const ModulePtr& a, const ModulePtr& b);
bool are_isomorphic(const ModulePtr& a, const ModulePtr& b);

/// Group algebras only: diagonal action g -> rho_M(g) (x) rho_N(g).
ModulePtr tensor_module(const ModulePtr& m, const ModulePtr& n);
/// Group algebras only: g -> rho(g^-1)^T.
ModulePtr dual_module(const ModulePtr& m);

}  // namespace kext
