#pragma once

#include <stdexcept>
#include <string>

namespace hexad {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Scalar arithmetic between incompatible cyclotomic fields.
struct FieldOrderError : Error {
    using Error::Error;
};

/// Malformed scalar text, JSON, or CLI input.
struct ParseError : Error {
    using Error::Error;
};

/// Structure constants that fail the Jacobi identity, ideals that are not
/// ideals, gradings that fail their closure conditions, and the like.
struct StructureError : Error {
    using Error::Error;
};

/// A guard (dimension, variable count, enumeration size) was exceeded.
struct GuardError : Error {
    using Error::Error;
};

/// Invariant that should be unreachable for valid inputs.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace hexad
