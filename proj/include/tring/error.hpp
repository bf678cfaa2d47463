#pragma once

#include <stdexcept>
#include <string>

namespace tr {

enum class ErrorKind {
  InvalidInput,
  ShapeMismatch,
  FieldMismatch,
  AlgebraMismatch,
  AxiomViolation,
  InfiniteDimensional,
  MalformedRelation,
  NotNilpotentWithinCap,
  NotOneNilpotent,
  NonzeroContextProducts,
  PreconditionViolated,
};

const char* errorKindName(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(errorKindName(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace tr
