#pragma once

#include <stdexcept>
#include <string>

namespace crmin {

// Base for all library errors. Callers that need to distinguish kinds catch
// the derived types; the CLI maps them onto exit codes.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateQuad : Error { using Error::Error; };
struct NorthPole : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NonGeneric : Error { using Error::Error; };
struct Ambiguous : Error { using Error::Error; };
struct QuadrantViolation : Error { using Error::Error; };
struct ZeroDerivative : Error { using Error::Error; };
struct ZeroEdge : Error { using Error::Error; };
struct ZeroEdgeDerivative : Error { using Error::Error; };
struct BlowUp : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct EmptyDomain : Error { using Error::Error; };
struct ZeroError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ConstraintError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct ResolutionError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace crmin
