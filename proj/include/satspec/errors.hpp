#pragma once

#include <stdexcept>
#include <string>

namespace satspec {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition.
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

/// A request exceeds a hard resource bound (enumeration size, qubit count).
class ResourceBoundError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; carries the 1-based line where parsing failed.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(what + " at line " + std::to_string(line)), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Not enough data to produce a meaningful result (too few levels/spacings).
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Spectrum has zero span; unfolding is undefined.
class DegenerateSpectrumError : public Error {
public:
    using Error::Error;
};

/// A numeric routine failed to converge or produced non-finite output.
class NumericFailureError : public Error {
public:
    using Error::Error;
};

/// Filesystem error while reading or writing an artifact.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace satspec
