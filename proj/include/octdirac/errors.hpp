#pragma once

#include <stdexcept>
#include <string>

namespace octdirac {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Incompatible matrix shapes in an algebraic operation.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A construction-time invariant failed; the message names the offending
/// object (generator pair, structure triple, ...).
struct InvariantViolation : Error {
    using Error::Error;
};

/// Malformed input text (tables, transforms, seeds, chains).
struct ParseError : Error {
    using Error::Error;
};

/// Division by a zero scalar or zero octonion.
struct DivisionByZero : Error {
    using Error::Error;
};

} // namespace octdirac
