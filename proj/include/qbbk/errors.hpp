#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qbbk {

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic between values over different coefficient rings.
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// Arithmetic between series of different truncation orders.
class TruncationMismatch : public Error {
public:
    using Error::Error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A factorial required by a mod-p expansion is divisible by p.
class FactorialNotInvertible : public Error {
public:
    using Error::Error;
};

/// A q-analogue specification violates its structural constraints
/// (e.g. the outermost numerator polynomial has a constant term).
class SpecViolation : public Error {
public:
    using Error::Error;
};

/// Polynomial not expressible in the requested depth-one basis.
class BasisViolation : public Error {
public:
    using Error::Error;
};

/// Requested table cell was never computed.
class MissingEntry : public Error {
public:
    using Error::Error;
};

/// Series passed to an extraction does not have constant term 1.
class NonUnitConstant : public Error {
public:
    using Error::Error;
};

/// Unrecognized name passed to the check runner.
class UnknownCheck : public Error {
public:
    using Error::Error;
};

/// Malformed index or model expression; carries the offset of the
/// first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}

    std::size_t position;
};

}  // namespace qbbk
