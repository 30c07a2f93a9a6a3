#pragma once

#include <stdexcept>
#include <string>

namespace tame {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands carry different ring descriptors.
struct RingMismatchError : Error {
    explicit RingMismatchError(const std::string& what) : Error(what) {}
};

/// An operation required q | p and the division left a remainder.
struct InexactDivisionError : Error {
    explicit InexactDivisionError(const std::string& what) : Error(what) {}
};

/// Input violates a documented precondition (arity, ring kind, shape).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Factorization ran past the configured search bound.
struct FactorBoundError : Error {
    explicit FactorBoundError(const std::string& what) : Error(what) {}
};

/// The input is not (or could not be certified as) an automorphism.
struct NotAutomorphismError : Error {
    explicit NotAutomorphismError(const std::string& what) : Error(what) {}
};

/// Syntax error in the expression front end; position is 0-based.
struct ParseError : Error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

/// An internal exact identity failed; indicates a bug, never bad input.
struct InternalInvariantError : Error {
    explicit InternalInvariantError(const std::string& what) : Error(what) {}
};

}  // namespace tame
