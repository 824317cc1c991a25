#pragma once

#include <stdexcept>
#include <string>

namespace masscalc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands belong to different field instances.
class FieldMismatchError : public Error {
public:
    using Error::Error;
};

/// Points, vectors or matrices of incompatible dimensions were combined.
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

/// Inversion or division by the field zero.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// F_p construction with a modulus that is not a (desk-scale) prime.
class NonPrimeModulusError : public Error {
public:
    using Error::Error;
};

/// center_of_mass / normalize on a map whose total mass is zero.
class NoCenterOfMassError : public Error {
public:
    using Error::Error;
};

/// critical_point of a polynomial with vanishing quadratic part.
class NoCriticalPointError : public Error {
public:
    using Error::Error;
};

/// Operation requires a field of characteristic != 2.
class UnsupportedCharacteristicError : public Error {
public:
    using Error::Error;
};

/// Geometric input degenerate for the requested construction.
class DegenerateConfigurationError : public Error {
public:
    using Error::Error;
};

/// Bilinear form not symmetric or not invertible.
class DegenerateFormError : public Error {
public:
    using Error::Error;
};

/// Exact linear solve hit a singular matrix.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (field element literals, documents).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally valid input that violates the document schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

} // namespace masscalc
