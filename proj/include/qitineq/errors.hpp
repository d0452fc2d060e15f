#pragma once

#include <stdexcept>
#include <string>

namespace qitineq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DomainViolation : Error { using Error::Error; };
struct SingularB : Error { using Error::Error; };
struct SingularNormalizer : Error { using Error::Error; };
struct DegenerateBlock : Error { using Error::Error; };
struct WrongKind : Error { using Error::Error; };
struct NonCommutativeRange : Error { using Error::Error; };
struct NotSameMonotone : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace qitineq
