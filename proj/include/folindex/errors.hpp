#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace folindex {

enum class ErrorKind {
  InvalidArgument,
  ResourceCap,
  NotZeroDimensional,
  NotMember,
  NotInvariant,
  NotLogarithmic,
  DegenerateDecomposition,
  DegenerateMinors,
  TruncationNotStabilized,
  InvalidBranch,
  Conflict,
  UnsupportedIdentity,
  EulerConditionViolated,
  DegreeMismatch,
  IncompleteSingularities,
  SyntaxError,
  UndeclaredName,
  RingMismatch,
};

std::string_view to_string(ErrorKind kind);

// Every failure the engine reports carries a kind so callers (and the CLI
// exit-code logic) can branch without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace folindex
