#pragma once

#include <stdexcept>
#include <string>

namespace novcoh {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient rings.
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// An operation's precondition on its input was violated (non-unit, non-field, bad shape, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace novcoh
