#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxplus {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input-side failures: malformed data or inconsistent shapes.

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NullScalar : public Error {
public:
    using Error::Error;
};

class UnknownMatrixName : public Error {
public:
    using Error::Error;
};

class ZeroInitialState : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Domain failures: the input is well formed but the analysis does not apply.

class NotIrreducible : public Error {
public:
    using Error::Error;
};

class TransientBoundExceeded : public Error {
public:
    using Error::Error;
};

// Internal-consistency failures. Seeing one of these means a bug in this library.

class NoEigenvectorColumn : public Error {
public:
    using Error::Error;
};

class TheoremViolation : public Error {
public:
    using Error::Error;
};

}  // namespace maxplus
