#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace amkit {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based; 0 means "whole input".
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An enumeration would exceed the configured cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A precondition on the arguments does not hold.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A design with no blocks was requested or would result.
class EmptyDesignError : public Error {
public:
    using Error::Error;
};

/// A polynomial that must be divisible by (xy)^k is not.
class DivisibilityError : public Error {
public:
    using Error::Error;
};

/// A transform that must produce nonnegative integers did not.
class IntegralityError : public Error {
public:
    using Error::Error;
};

/// Parameters fall outside the range this toolkit covers.
class OutOfScopeError : public Error {
public:
    using Error::Error;
};

}  // namespace amkit
