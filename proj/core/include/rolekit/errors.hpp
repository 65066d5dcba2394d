#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rolekit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands that do not fit together: different actor sets, a structure that
/// is not graph-like where a relation is required, and similar.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent user input (labels, documents, indices).
class InputError : public Error {
public:
    using Error::Error;
};

/// A hard size limit was reached (closure cap, brute-force oracle limits).
class ResourceError : public Error {
public:
    ResourceError(const std::string& what, std::size_t reached)
        : Error(what), reached_(reached) {}

    /// The count (elements, actors, ...) at the point the limit was hit.
    std::size_t reached() const noexcept { return reached_; }

private:
    std::size_t reached_;
};

/// An operation was called on inputs that fail its documented precondition,
/// e.g. inducing a role reduction from a map that is not a positional
/// reduction.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Signals a bug or input that slipped
/// past validation.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace rolekit
