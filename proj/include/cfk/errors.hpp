#pragma once

#include <stdexcept>
#include <string>

namespace cfk {

// Base of every error raised by the library. The CLI maps each subclass onto
// an exit code (see exit_code()).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 1; }
};

// Input is well formed but violates a mathematical precondition
// (non-coprime torus parameters, d^2 != 0, division by zero, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed JSON or a file that does not follow the canonical format.
class ParseError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

// Internal consistency failure: an arithmetic identity that must hold did not.
// Seeing one of these indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

// Integer or exponent overflow in exact arithmetic. Never wraps.
class OverflowError : public InternalError {
public:
    using InternalError::InternalError;
};

} // namespace cfk
