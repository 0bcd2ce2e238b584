#pragma once

#include <stdexcept>
#include <string>

namespace parhiggs {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid input: malformed parameters, weight systems that fail the
/// structural or genericity requirements, out-of-domain arguments.
struct ValidationError : Error {
    using Error::Error;
};

/// A series coefficient was requested beyond the truncation bound, so the
/// exact value cannot be recovered from the truncated data.
struct TruncationError : Error {
    using Error::Error;
};

/// An operation that must be exact failed to be: inexact polynomial
/// division, a pole that should have cancelled but did not, or a limit that
/// should have been a polynomial but was not.
struct ExactnessError : Error {
    using Error::Error;
};

/// A cross-check between two independently computed quantities failed.
struct VerificationError : Error {
    using Error::Error;
};

} // namespace parhiggs
