#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace intangle {

enum class ErrorKind {
  NotAssociative,
  NoInverse,
  BadIdentity,
  BadTable,
  NotASubgroup,
  DegreeExceeded,
  BadCycleSyntax,
  UnsupportedParams,
  CapExceeded,
  ParentMismatch,
  BaseNotContained,
  ModelMismatch,
  NotBiprojection,
  NotProjection,
  AngleUndefined,
  NotAChain,
  NotMinimalPair,
  ZeroVariance,
  IndexTooSmall,
  NotCommutingSquare,
  NotApplicable,
  InvalidTraceData,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every recoverable failure in the library. The kind is stable and is what
/// callers (and the CLI exit-code mapping) dispatch on; the message names the
/// offending element, triple or invariant.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace intangle
