#pragma once

#include <stdexcept>
#include <string>

namespace opinion {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A matrix or vector has the wrong shape for the requested operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An input violates a model invariant (row sums, sign ranges, group coverage, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The linear system cannot be solved; carries the spectral-radius estimate
/// that disqualified the input when one is available.
class SingularSystemError : public Error {
public:
    explicit SingularSystemError(const std::string& what, double rho = 0.0)
        : Error(what), spectral_radius_estimate(rho) {}

    double spectral_radius_estimate;
};

/// An iterative scheme failed to converge; carries the last two estimates.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double last, double previous)
        : Error(what), last_estimate(last), previous_estimate(previous) {}

    double last_estimate;
    double previous_estimate;
};

/// A document could not be parsed into a network description.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace opinion
