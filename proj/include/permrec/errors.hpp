#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permrec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands live in symmetric groups of different degree.
class DegreeMismatch : public Error {
public:
    DegreeMismatch(int a, int b)
        : Error("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// Malformed value or parameter outside the domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A result would not fit the exact 64-bit integer range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A search would exceed the configured memory/size budget.
class CapacityExceeded : public Error {
public:
    using Error::Error;
};

/// No path exists between two vertices (only possible for degenerate generator sets).
class Unreachable : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace permrec
