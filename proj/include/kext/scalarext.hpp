#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "kext/module.hpp"
#include "kext/tower.hpp"

namespace kext {

/// F -> F' where F' is F with zero or more extra tower steps. Extended
/// algebras are cached so that every module extended along the same
/// inclusion lands over one algebra object.
class TowerInclusion {
public:
  /// Throws FieldMismatch unless `large` extends `small`.
  TowerInclusion(FieldPtr small, FieldPtr large);
  TowerInclusion(const FieldTower& small, const FieldTower& large)
      : TowerInclusion(small.field(), large.field()) {}

  const FieldPtr& small() const { return small_; }
  const FieldPtr& large() const { return large_; }
  /// Every added algebraic step is separable.
  bool separable() const { return separable_; }
  bool trivial() const { return same_field(*small_, *large_); }
  /// [F':F] when every added step is algebraic.
  std::optional<std::size_t> degree() const;
  std::string name() const;

  AlgebraPtr extend(const AlgebraPtr& e) const;

private:
  FieldPtr small_, large_;
  bool separable_ = true;
  struct Cache {
    std::mutex mu;
    std::map<const Algebra*, std::pair<AlgebraPtr, AlgebraPtr>> map;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// F' (x)_F E: the structure constants read over F'. Throws FieldMismatch.
AlgebraPtr extend_algebra(const AlgebraPtr& e, const TowerInclusion& inc);
/// t(M): the same action matrices over F' (x) E.
ModulePtr t_extend_module(const ModulePtr& m, const TowerInclusion& inc);
/// t(f): entrywise reinterpretation.
Mat t_extend_map(const Mat& f, const TowerInclusion& inc);

struct FullFaithfulnessReport {
  std::size_t dim_small = 0;
  std::size_t dim_large = 0;
  bool basis_independent = false;  // images of an F-basis of Hom stay F'-independent
  bool basis_intertwines = false;  // and are intertwiners of the extended modules
  bool pass = false;
};
FullFaithfulnessReport check_relative_full_faithfulness(const ModulePtr& m, const ModulePtr& n,
                                                        const TowerInclusion& inc);

/// A nonzero nilpotent central element of F' (x) End(S) together with the
/// exponent that kills it.
struct NilpotentWitness {
  Vec element;  // coordinates in the reinterpreted basis of End(S)
  std::size_t exponent = 0;
  Mat action;  // the element as an endomorphism of t(S)
};

/// Looks for z = b - a with b in the center of E (basis elements and pairwise
/// sums) and a a root in F of its minimal polynomial, such that z != 0 and
/// z^k = 0. Roots come from poly_roots where supported, otherwise from
/// `trial_roots`, each verified by evaluation.
std::optional<NilpotentWitness> find_nilpotent_central(const Algebra& e, std::span<const Elem> trial_roots = {});
/// Generators of the added tower steps, shifted by small prime-field constants.
std::vector<Elem> trial_roots(const TowerInclusion& inc);

struct SplitReport {
  ModulePtr source;
  ModulePtr extended;
  AlgebraPtr end_small;  // End(S)
  AlgebraPtr end_large;  // F' (x) End(S), reinterpreted echelon basis
  std::size_t end_dim_small = 0;
  std::size_t end_dim_large = 0;  // dim over F' of End(t(S)), computed directly
  std::optional<DecompositionReport> decomposition;
  std::optional<FiltrationReport> filtration;
  std::optional<bool> semisimple;
  std::optional<std::size_t> length;       // composition length of t(S)
  std::optional<std::size_t> end_length;   // length of F' (x) End(S) as a right module
  std::optional<NilpotentWitness> witness;
  /// Per summand of the decomposition: an epimorphism t(S) -> X and a
  /// monomorphism X -> t(S) were exhibited.
  std::vector<bool> sandwich;
  bool end_is_frobenius = false;
  bool consistent = true;  // length == end_length where both are known
};

/// Throws NotSimple when S is shown not to be simple.
SplitReport split_simple(const ModulePtr& s, const TowerInclusion& inc);

/// Lattice of submodules with its inclusion relation.
struct SubmoduleLattice {
  std::vector<SubspaceBasis> members;  // sorted by (dim, canonical key)
  std::size_t length = 0;              // longest chain
  SubspaceBasis socle;

  std::size_t size() const { return members.size(); }
  /// Index of a submodule, if present.
  std::optional<std::size_t> find(const SubspaceBasis& u) const;
};

/// Exhaustive enumeration by closing the zero module under "add one vector
/// and spin". Finite fields with |F|^dim <= limit only; throws TooLarge.
SubmoduleLattice enumerate_submodules(const ModulePtr& m, std::uint64_t limit = 65536);

struct IdealLatticeReport {
  std::size_t ideals = 0;
  std::size_t submodules = 0;
  bool bijective = false;
  bool inclusion_preserving = false;
  bool pass = false;
};
/// Right ideals I of F' (x) End(S) against submodules of t(S) under
/// I -> sum of the images phi(t(S)), phi in I.
IdealLatticeReport ideal_subobject_check(const ModulePtr& s, const TowerInclusion& inc);

struct TensorReport {
  bool tensor_equal = false;
  bool dual_m_equal = false;
  bool dual_n_equal = false;
  bool pass = false;
};
TensorReport check_tensor_functoriality(const ModulePtr& m, const ModulePtr& n, const TowerInclusion& inc);

enum class PermanenceRegime { SeparableExtension, SeparableEnd, NilpotentWitness };
struct PermanenceReport {
  PermanenceRegime regime = PermanenceRegime::SeparableExtension;
  bool extended_semisimple = false;
  std::optional<NilpotentWitness> witness;
  /// The verdict agrees with what the regime predicts.
  bool pass = false;
};
/// Throws Undecidable when no regime applies, NotSemisimple when M is
/// known not to be semisimple.
PermanenceReport check_semisimplicity_permanence(const ModulePtr& m, const TowerInclusion& inc);

std::string regime_name(PermanenceRegime r);

}  // namespace kext
