#pragma once

#include <string>
#include <vector>

#include "kext/scalarext.hpp"

namespace kext {

/// Fields addressable by name: Q, GF(2), GF(3), GF(4) = GF(2)(w),
/// GF(16) = GF(4)(v), GF(9) = GF(3)(j), Q(i), Q(w), Q(i)(r), Q(w)(r),
/// GF(2)(t), GF(2)(t)(s) with s^2 = t, GF(2)(t)(u) with u^2 + u = t,
/// GF(3)(t), GF(3)(t)(s) with s^3 = t. Compact aliases (GF4, Qi, ...) are
/// accepted. Throws BadParameters.
FieldPtr named_field(const std::string& name);
const std::vector<std::string>& named_field_names();
/// Catalog name of a field, or its tower name.
std::string field_label(const FieldPtr& f);

struct CatalogModule {
  std::string name;  // "<algebra>:<label>"
  ModulePtr module;
  bool simple = false;  // a certified simple summand
};

struct CatalogAlgebra {
  std::string name;
  AlgebraPtr algebra;
  std::vector<TowerInclusion> extensions;  // nontrivial catalog extensions of its field
  std::vector<CatalogModule> modules;      // regular first
};

class Catalog {
public:
  const std::vector<CatalogAlgebra>& algebras() const { return algebras_; }
  /// Throws BadParameters.
  const CatalogAlgebra& algebra(const std::string& name) const;
  const CatalogModule& module(const std::string& name) const;
  bool has_algebra(const std::string& name) const;
  bool has_module(const std::string& name) const;
  /// The shared inclusion object for a pair of named fields.
  const TowerInclusion& inclusion(const FieldPtr& small, const FieldPtr& large) const;

  std::vector<CatalogAlgebra> algebras_;
  std::vector<TowerInclusion> inclusions_;
};

/// Simple summands of a decomposition with their catalog labels
/// ("simple2", or "simple1_1", "simple1_2", ... when dimensions repeat).
std::vector<std::pair<std::string, ModulePtr>> labelled_simples(const DecompositionReport& d);

/// Built once, deterministic.
const Catalog& catalog();
const std::string& catalog_version();

}  // namespace kext
