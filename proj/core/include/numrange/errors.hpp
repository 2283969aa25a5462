#pragma once

#include <stdexcept>
#include <string>

namespace numrange {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Wrong matrix shape, or a dimension outside the supported range.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Polynomial of the wrong degree for the requested operation.
class DegreeError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain (zero vector, empty point set, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input violates a documented precondition (e.g. not Hermitian).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Singular conic: its dual is not a conic.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// A floating-point consistency check failed, or an iteration did not converge.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace numrange
