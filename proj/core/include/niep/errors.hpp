#pragma once

#include <stdexcept>
#include <string>

namespace niep {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad dimensions, negative diagonal
/// entries, non-finite values, unparseable JSON payloads).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// No maximal-modulus entry of the candidate spectrum is real and nonnegative.
class NoPerron : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// The candidate spectrum cannot be matched into conjugate pairs.
class NotSelfConjugate : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A computation expected to produce a real value left an imaginary residue
/// beyond tolerance (signals a non-self-conjugate input list).
class NonRealResult : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// Mismatched dimensions between related arguments.
class DimensionMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// The spectrum fails the realisability conditions required before a
/// diagonal-element range can be computed.
class NotRealisable : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed: the two b-solvers disagree, a
/// passing gate produced a negative entry beyond tolerance, or certification
/// of a constructed matrix failed. Indicates numerical breakdown or a bug,
/// never a property of the input.
class InternalContradiction : public Error {
public:
    using Error::Error;
};

}  // namespace niep
