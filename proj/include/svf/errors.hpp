#pragma once

#include <stdexcept>
#include <string>

namespace svf {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live over different signatures.
struct SignatureMismatchError : Error {
    using Error::Error;
};

/// An operation that requires a nonzero input got zero (degree of the zero
/// polynomial, filtration level of the zero field, certificate seed, ...).
struct ZeroInputError : Error {
    using Error::Error;
};

/// Coordinate index out of range for the signature.
struct IndexError : Error {
    using Error::Error;
};

/// A parity precondition was violated (e.g. an operation requiring an even
/// homogeneous field received a mixed or odd one).
struct ParityError : Error {
    using Error::Error;
};

/// A checked precondition failed (exact arithmetic, never tolerance-based).
struct PreconditionError : Error {
    using Error::Error;
};

/// A freshly constructed certificate failed its own exact re-verification.
/// This indicates a bug in the construction, never a tolerable state.
struct InternalVerificationError : Error {
    using Error::Error;
};

} // namespace svf
