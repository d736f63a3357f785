#pragma once

#include <stdexcept>
#include <string>

namespace grmds {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two values from different rings (or different Z_{p^s} moduli) were mixed.
class ContextMismatchError : public Error {
public:
    using Error::Error;
};

/// Inversion of a zero divisor was requested.
class NotAUnitError : public Error {
public:
    using Error::Error;
};

class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// The mod-p projection of a candidate modulus is reducible.
class NotBasicIrreducibleError : public Error {
public:
    using Error::Error;
};

/// A Cauchy spec violates the hypotheses of the selected construction.
/// The message names every offending pair.
class ConstructionRejectedError : public Error {
public:
    using Error::Error;
};

class NoIsomorphismFoundError : public Error {
public:
    using Error::Error;
};

/// Malformed interchange document.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace grmds
