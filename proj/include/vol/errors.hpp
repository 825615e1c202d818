#pragma once

#include <stdexcept>
#include <string>

namespace vol {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Too few observations for the requested computation.
struct InsufficientDataError : Error {
    using Error::Error;
};

/// Input values outside the mathematical domain (e.g. non-positive prices).
struct DomainError : Error {
    using Error::Error;
};

/// Structurally valid input on which the computation is undefined
/// (constant series, zero variance, singular regression).
struct DegenerateInputError : Error {
    using Error::Error;
};

/// Model parameters violate the family constraints.
struct InvalidParameterError : Error {
    using Error::Error;
};

/// Parameters outside the stationarity region where a long-run moment exists.
struct NonstationaryError : Error {
    using Error::Error;
};

/// Bad run configuration (degenerate split, empty grid, bad fractions).
struct ConfigError : Error {
    using Error::Error;
};

/// Overflow, divergence, or other numerical failure.
struct NumericalError : Error {
    using Error::Error;
};

/// Malformed input file; message carries the line number.
struct ParseError : Error {
    using Error::Error;
};

/// Sequences that must be aligned (dates, lengths) are not.
struct AlignmentError : Error {
    using Error::Error;
};

/// Model selection could not produce any usable candidate.
struct SearchFailedError : Error {
    using Error::Error;
};

}  // namespace vol
