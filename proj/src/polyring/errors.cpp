#include "folindex/errors.hpp"

namespace folindex {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ResourceCap: return "ResourceCap";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotLogarithmic: return "NotLogarithmic";
    case ErrorKind::DegenerateDecomposition: return "DegenerateDecomposition";
    case ErrorKind::DegenerateMinors: return "DegenerateMinors";
    case ErrorKind::TruncationNotStabilized: return "TruncationNotStabilized";
    case ErrorKind::InvalidBranch: return "InvalidBranch";
    case ErrorKind::Conflict: return "Conflict";
    case ErrorKind::UnsupportedIdentity: return "UnsupportedIdentity";
    case ErrorKind::EulerConditionViolated: return "EulerConditionViolated";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::IncompleteSingularities: return "IncompleteSingularities";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredName: return "UndeclaredName";
    case ErrorKind::RingMismatch: return "RingMismatch";
  }
  return "Unknown";
}

}  // namespace folindex
