#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kext {

enum class ErrorKind {
  NonPrimeCharacteristic,
  ReducibleMinPoly,
  DuplicateVariable,
  UnsupportedField,
  MixedFields,
  DivisionByZero,
  NotAssociative,
  BadUnit,
  NotAGroup,
  BadParameters,
  DifferentAlgebras,
  NotAGroupAlgebra,
  FieldMismatch,
  NotSimple,
  TooLarge,
  Undecidable,
  UnknownCheck,
  ParseError,
  DimensionMismatch,
  NotSemisimple,
  Internal,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every engine failure carries a machine-readable kind so callers (the CLI
/// in particular) can map it onto exit codes.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace kext
