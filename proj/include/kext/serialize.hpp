#pragma once

#include <filesystem>
#include <functional>
#include <string>

#include "kext/catalog.hpp"
#include "kext/tower.hpp"

namespace kext {

/// Resolves a string reference to the JSON it names.
using RefLoader = std::function<json(const std::string& ref)>;

json read_json_file(const std::filesystem::path& p);
/// "catalog:NAME" (built-in catalog, or NAME.json in $KEXT_CATALOG_DIR when
/// set), otherwise a file path relative to `base`, otherwise a bare catalog
/// name.
RefLoader default_loader(std::filesystem::path base = ".");

/// Named field (see named_field) or tower object.
FieldPtr field_from_json(const json& j);
json field_to_json(const FieldPtr& f);

json vec_to_json(const Field& f, std::span<const Elem> v);
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const FieldPtr& f, const json& j, std::size_t rows, std::size_t cols);

/// Full form {"field", "dim", "sc", "unit"} or one of the shorthands
/// "group", "quaternion", "polyquotient", "triangular", "matrix",
/// "product"; strings are references.
AlgebraPtr algebra_from_json(const json& j, const RefLoader& load);
json algebra_to_json(const Algebra& a);

/// {"algebra", "dim", "action"} or "regular", "trivial", "permutation"
/// (one cycle string per group element, points numbered from 1), "coset",
/// "simple" (index or label of a summand of the regular module), "sum",
/// "tensor", "dual". `fallback` is used when no "algebra" is given.
ModulePtr module_from_json(const json& j, const AlgebraPtr& fallback, const RefLoader& load);
json module_to_json(const Module& m, bool with_algebra = true);

/// Permutation images perm[g][x] = x.g from cycle notation.
std::vector<std::vector<int>> parse_cycles(const std::vector<std::string>& cycles, int points);

json decomposition_to_json(const DecompositionReport& d);
json filtration_to_json(const FiltrationReport& f);
json split_report_to_json(const SplitReport& r, const TowerInclusion& inc);
json witness_to_json(const NilpotentWitness& w, const Field& f);

}  // namespace kext
