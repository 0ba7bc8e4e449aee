#pragma once

#include <stdexcept>
#include <string>

namespace ontic {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A variable name does not resolve in the distribution it was used with.
class NameError : public Error {
public:
    using Error::Error;
};

// Two distributions (or operators) do not live on compatible spaces.
class ShapeError : public Error {
public:
    using Error::Error;
};

// A conditioning event has probability below the support threshold.
class SupportError : public Error {
public:
    using Error::Error;
};

// An argument violates a precondition (overlapping variable sets, bad sizes, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// A domain object fails one of its construction invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A measurement set does not span the space of Hermitian operators.
class CompletenessError : public Error {
public:
    using Error::Error;
};

// A fitted density operator is too far from a pure state.
class NotPureError : public Error {
public:
    using Error::Error;
};

// Too few records per conditioning cell for an empirical estimate.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// A model file failed to parse; `location` points at the offending field.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::string location)
        : Error(location.empty() ? message : location + ": " + message),
          location_(std::move(location)) {}

    explicit ParseError(const std::string& message) : ParseError(message, "") {}

    const std::string& location() const { return location_; }

private:
    std::string location_;
};

// A file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace ontic
