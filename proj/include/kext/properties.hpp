#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kext/catalog.hpp"
#include "kext/tower.hpp"

namespace kext {

enum class CheckId {
  FF_T,
  SS_SEPARABLE,
  SS_ENDOSEP,
  INSEP_COUNTEREXAMPLE,
  HOM_SS_BOUND,
  FROBENIUS_SOC_TOP,
  FROBENIUS_STABLE,
  SEMISIMPLE_IMPLIES_FROBENIUS,
  IDEAL_LATTICE,
  TENSOR_FUNCTOR,
  LENGTH_END,
  ORACLE_LATTICE,
};

const std::vector<CheckId>& all_checks();
std::string check_name(CheckId id);
/// Throws UnknownCheck.
CheckId parse_check(const std::string& name);

struct InstanceOutcome {
  std::string instance;
  bool pass = false;
  json dims = json::object();
  std::optional<json> witness;
  std::optional<std::string> error;  // engine error raised while checking
};

struct PropertyReport {
  CheckId check = CheckId::FF_T;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<InstanceOutcome> instances;
  std::optional<json> counterexample;  // first failing instance, serialized
  bool pass = false;
  double wall_time_ms = 0;

  const InstanceOutcome* find(const std::string& instance) const;
  json to_json(bool with_time = true) const;
};

/// Runs a checker over the catalog plus `trials` instances drawn from
/// seeded generators. Deterministic apart from wall_time_ms.
PropertyReport run_check(CheckId id, std::uint64_t seed, std::size_t trials);

/// Exhaustive lattice of a module over a finite field (|F|^dim <= limit),
/// with the derived socle and length; throws TooLarge.
SubmoduleLattice oracle_submodule_lattice(const ModulePtr& m, std::uint64_t limit = 65536);

/// Number of submodules of a semisimple module from its decomposition:
/// the product over isotypic parts S^m of the number of subspaces of D^m,
/// D = End(S) of order |F|^end_dim. Finite fields only.
mpz_class semisimple_lattice_size(const DecompositionReport& d, const Field& f);

}  // namespace kext
