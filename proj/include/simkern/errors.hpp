#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace simkern {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Binary operation between scalars of incompatible domains (e.g. GF(5) and GF(7)).
class ArithmeticDomainError : public Error {
public:
    using Error::Error;
};

/// Operation not defined for the scalar domain (e.g. |z|^2 over a prime field).
class UnsupportedDomainError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

class InvalidIndexSet : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class SymmetryError : public Error {
public:
    using Error::Error;
};

class InvalidOrder : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class UnsupportedGroup : public Error {
public:
    using Error::Error;
};

/// Raised when an operation requires a 3-PMP input; carries the first
/// violating principal index set (0-based).
class NotThreePmp : public Error {
public:
    NotThreePmp(const std::string& what, std::vector<std::size_t> witness)
        : Error(what), witness_(std::move(witness)) {}

    const std::vector<std::size_t>& witness() const { return witness_; }

private:
    std::vector<std::size_t> witness_;
};

class EntriesNotUnimodular : public Error {
public:
    using Error::Error;
};

/// A theorem-guaranteed postcondition failed to verify; indicates a bug,
/// or use of an operation outside the territory the theory covers.
class VerificationFailed : public Error {
public:
    using Error::Error;
};

class ConditionsViolated : public Error {
public:
    using Error::Error;
};

class NotBlockConstant : public Error {
public:
    using Error::Error;
};

class RefinementHypothesisFailed : public Error {
public:
    using Error::Error;
};

class InvalidCoefficients : public Error {
public:
    using Error::Error;
};

class InvalidGenerator : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace simkern
