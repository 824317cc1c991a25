#pragma once

#include <masscalc/errors.hpp>

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

namespace masscalc {

class FieldElement;

enum class FieldKind { Rational, Prime, Float };

/// A field instance: exact rationals, a prime field F_p, or a
/// tolerance-aware float adapter. Cheap value type; two elements may be
/// combined only when their fields compare equal.
class Field {
public:
    /// Exact arbitrary-precision rationals.
    static Field rationals();

    /// F_p for a prime modulus, validated by deterministic trial division.
    /// Throws NonPrimeModulusError for p < 2, composite p, or p >= 2^31.
    static Field prime(std::uint64_t p);

    /// float64 adapter; equality uses relative tolerance
    /// max(|a|,|b|)*epsilon with absolute floor epsilon.
    static Field real(double epsilon = 1e-9);

    FieldKind kind() const { return kind_; }

    /// 0 for rationals and float, p for F_p.
    std::uint64_t characteristic() const;

    double epsilon() const { return epsilon_; }

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    FieldElement zero() const;
    FieldElement one() const;

    /// Canonical image of an integer (n mod p for F_p).
    FieldElement element(long long n) const;

    /// Exact n/d, reduced. Throws DivisionByZeroError if d maps to zero.
    FieldElement ratio(long long n, long long d) const;

    /// Wraps a double; float backend only.
    FieldElement from_double(double v) const;

    /// Parses the field's serialization format: "num/den" or "num" for
    /// rationals, a decimal residue for F_p, a decimal literal for float.
    FieldElement parse(const std::string& text) const;

    std::string name() const;

private:
    Field(FieldKind kind, std::uint64_t p, double epsilon)
        : kind_(kind), prime_(p), epsilon_(epsilon) {}

    FieldKind kind_;
    std::uint64_t prime_;
    double epsilon_;
};

/// Free-function form of Field::characteristic.
std::uint64_t characteristic(const Field& field);

/// An element of a Field. Immutable value; all operations are pure and
/// throw FieldMismatchError when operands come from different fields.
class FieldElement {
public:
    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    /// Exact for rational/F_p; tolerance-based for float.
    bool operator==(const FieldElement& other) const;
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator/(const FieldElement& other) const;

    FieldElement& operator+=(const FieldElement& other) { return *this = *this + other; }
    FieldElement& operator-=(const FieldElement& other) { return *this = *this - other; }
    FieldElement& operator*=(const FieldElement& other) { return *this = *this * other; }

    /// Multiplicative inverse; throws DivisionByZeroError on zero.
    FieldElement inverse() const;

    /// Total order on the underlying representation (exact value for
    /// rational/F_p, raw double for float). Used for canonical point
    /// ordering; independent of the tolerance in operator==.
    int compare(const FieldElement& other) const;

    /// Serialization: reduced "num/den" (integers without "/1"),
    /// decimal residue, or shortest round-trip decimal literal.
    std::string str() const;

    /// Value as double (exact rationals converted; used only for rendering).
    double to_double() const;

    const mpq_class& rational_value() const { return std::get<mpq_class>(value_); }
    std::uint64_t residue_value() const { return std::get<std::uint64_t>(value_); }
    double float_value() const { return std::get<double>(value_); }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& e);

private:
    friend class Field;
    using Value = std::variant<mpq_class, std::uint64_t, double>;

    FieldElement(Field field, Value value)
        : field_(field), value_(std::move(value)) {}

    void require_same_field(const FieldElement& other) const;

    Field field_;
    Value value_;
};

} // namespace masscalc
