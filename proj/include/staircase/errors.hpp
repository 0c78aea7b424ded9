#pragma once

#include <stdexcept>
#include <string>

namespace staircase {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// Two quadratic-field values with different (nonzero) discriminants were combined.
struct FieldMismatchError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

/// A center admits no quasi-perfect class (discriminant not a perfect square,
/// or neither choice of epsilon gives integral degree coordinates).
struct NoClassError : Error {
    using Error::Error;
};

/// An extended nodal ray does not meet the designated side strictly inside it.
struct RayMissError : Error {
    using Error::Error;
};

/// A stated invariant failed to hold for computed data.
struct InvariantError : Error {
    using Error::Error;
};

/// Input text could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

/// A precondition on an argument's range or form was violated.
struct DomainError : Error {
    using Error::Error;
};

} // namespace staircase
