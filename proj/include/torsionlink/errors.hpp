#pragma once

#include <stdexcept>
#include <string>

namespace torsionlink {

// Base for all errors raised by this library. Everything derives from
// std::runtime_error so callers can catch broadly or per condition.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (JSON shape, non-decimal entry, bad fraction, ...).
struct ParseError : Error {
    using Error::Error;
};

// A precondition on the mathematical input failed (coprimality, caps, ...).
struct DomainError : Error {
    using Error::Error;
};

struct DimensionMismatch : DomainError {
    using DomainError::DomainError;
};

struct SingularMatrix : DomainError {
    using DomainError::DomainError;
};

struct NotCoprime : DomainError {
    using DomainError::DomainError;
};

struct TooLarge : DomainError {
    using DomainError::DomainError;
};

// Gluing validation failures.
struct OddDimension : Error {
    using Error::Error;
};

struct NotAntiSymplectic : Error {
    using Error::Error;
};

struct NotSymplectic : Error {
    using Error::Error;
};

// det(B) = 0: the manifold has positive first Betti number.
struct NotRationalHomologySphere : Error {
    using Error::Error;
};

// Isometry search aborted because the group order exceeds the cap.
struct SearchCapExceeded : Error {
    using Error::Error;
};

} // namespace torsionlink
