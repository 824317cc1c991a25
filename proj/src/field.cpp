#include <masscalc/field.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace masscalc {

namespace {

constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;

bool is_prime_trial(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p; // p < 2^31 keeps the product below 2^64
}

std::uint64_t neg_mod(std::uint64_t a, std::uint64_t p) {
    return a == 0 ? 0 : p - a;
}

// Extended Euclid; a must be nonzero mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

bool close_with_floor(double a, double b, double eps) {
    double diff = std::fabs(a - b);
    if (diff <= eps) return true;
    return diff <= eps * std::max(std::fabs(a), std::fabs(b));
}

bool valid_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

Field Field::rationals() { return Field(FieldKind::Rational, 0, 0.0); }

Field Field::prime(std::uint64_t p) {
    if (p > kMaxPrime || !is_prime_trial(p))
        throw NonPrimeModulusError("F_p modulus must be a prime below 2^31, got " + std::to_string(p));
    return Field(FieldKind::Prime, p, 0.0);
}

Field Field::real(double epsilon) { return Field(FieldKind::Float, 0, epsilon); }

std::uint64_t Field::characteristic() const {
    return kind_ == FieldKind::Prime ? prime_ : 0;
}

bool Field::operator==(const Field& other) const {
    return kind_ == other.kind_ && prime_ == other.prime_ && epsilon_ == other.epsilon_;
}

FieldElement Field::zero() const { return element(0); }
FieldElement Field::one() const { return element(1); }

FieldElement Field::element(long long n) const {
    switch (kind_) {
    case FieldKind::Rational:
        return FieldElement(*this, mpq_class(static_cast<long>(n)));
    case FieldKind::Prime: {
        std::int64_t r = n % static_cast<std::int64_t>(prime_);
        if (r < 0) r += static_cast<std::int64_t>(prime_);
        return FieldElement(*this, static_cast<std::uint64_t>(r));
    }
    case FieldKind::Float:
        return FieldElement(*this, static_cast<double>(n));
    }
    throw Error("unreachable field kind");
}

FieldElement Field::ratio(long long n, long long d) const {
    return element(n) / element(d);
}

FieldElement Field::from_double(double v) const {
    if (kind_ != FieldKind::Float)
        throw FieldMismatchError("from_double is only defined for the float backend");
    return FieldElement(*this, v);
}

std::string Field::name() const {
    switch (kind_) {
    case FieldKind::Rational: return "rational";
    case FieldKind::Prime: return "fp:" + std::to_string(prime_);
    case FieldKind::Float: return "float";
    }
    return "?";
}

std::uint64_t characteristic(const Field& field) { return field.characteristic(); }

FieldElement Field::parse(const std::string& text) const {
    switch (kind_) {
    case FieldKind::Rational: {
        std::string num = text, den = "1";
        if (auto slash = text.find('/'); slash != std::string::npos) {
            num = text.substr(0, slash);
            den = text.substr(slash + 1);
        }
        if (!valid_integer_literal(num) || !valid_integer_literal(den) || den[0] == '-')
            throw ParseError("invalid rational literal: '" + text + "'");
        mpz_class n(num), d(den);
        if (d == 0) throw ParseError("invalid rational literal (zero denominator): '" + text + "'");
        mpq_class q(n, d);
        q.canonicalize();
        return FieldElement(*this, std::move(q));
    }
    case FieldKind::Prime: {
        if (!valid_integer_literal(text))
            throw ParseError("invalid F_p literal: '" + text + "'");
        mpz_class n(text);
        mpz_class r = n % static_cast<long>(prime_);
        if (r < 0) r += static_cast<long>(prime_);
        return FieldElement(*this, static_cast<std::uint64_t>(r.get_ui()));
    }
    case FieldKind::Float: {
        const char* begin = text.c_str();
        char* end = nullptr;
        errno = 0;
        double v = std::strtod(begin, &end);
        if (end != begin + text.size() || text.empty() || errno == ERANGE)
            throw ParseError("invalid float literal: '" + text + "'");
        return FieldElement(*this, v);
    }
    }
    throw Error("unreachable field kind");
}

void FieldElement::require_same_field(const FieldElement& other) const {
    if (field_ != other.field_)
        throw FieldMismatchError("operands from different fields: " + field_.name() +
                                 " vs " + other.field_.name());
}

bool FieldElement::is_zero() const {
    switch (field_.kind()) {
    case FieldKind::Rational: return rational_value() == 0;
    case FieldKind::Prime: return residue_value() == 0;
    case FieldKind::Float: return std::fabs(float_value()) <= field_.epsilon();
    }
    return false;
}

bool FieldElement::is_one() const { return *this == field_.one(); }

bool FieldElement::operator==(const FieldElement& other) const {
    require_same_field(other);
    switch (field_.kind()) {
    case FieldKind::Rational: return rational_value() == other.rational_value();
    case FieldKind::Prime: return residue_value() == other.residue_value();
    case FieldKind::Float:
        return close_with_floor(float_value(), other.float_value(), field_.epsilon());
    }
    return false;
}

FieldElement FieldElement::operator-() const {
    switch (field_.kind()) {
    case FieldKind::Rational: return FieldElement(field_, mpq_class(-rational_value()));
    case FieldKind::Prime:
        return FieldElement(field_, neg_mod(residue_value(), field_.characteristic()));
    case FieldKind::Float: return FieldElement(field_, -float_value());
    }
    throw Error("unreachable field kind");
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    require_same_field(other);
    switch (field_.kind()) {
    case FieldKind::Rational:
        return FieldElement(field_, mpq_class(rational_value() + other.rational_value()));
    case FieldKind::Prime:
        return FieldElement(field_, add_mod(residue_value(), other.residue_value(),
                                            field_.characteristic()));
    case FieldKind::Float: return FieldElement(field_, float_value() + other.float_value());
    }
    throw Error("unreachable field kind");
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
    return *this + (-other);
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    require_same_field(other);
    switch (field_.kind()) {
    case FieldKind::Rational:
        return FieldElement(field_, mpq_class(rational_value() * other.rational_value()));
    case FieldKind::Prime:
        return FieldElement(field_, mul_mod(residue_value(), other.residue_value(),
                                            field_.characteristic()));
    case FieldKind::Float: return FieldElement(field_, float_value() * other.float_value());
    }
    throw Error("unreachable field kind");
}

FieldElement FieldElement::operator/(const FieldElement& other) const {
    return *this * other.inverse();
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero in " + field_.name());
    switch (field_.kind()) {
    case FieldKind::Rational:
        return FieldElement(field_, mpq_class(1 / rational_value()));
    case FieldKind::Prime:
        return FieldElement(field_, inv_mod(residue_value(), field_.characteristic()));
    case FieldKind::Float: return FieldElement(field_, 1.0 / float_value());
    }
    throw Error("unreachable field kind");
}

int FieldElement::compare(const FieldElement& other) const {
    require_same_field(other);
    switch (field_.kind()) {
    case FieldKind::Rational: {
        int c = mpq_cmp(rational_value().get_mpq_t(), other.rational_value().get_mpq_t());
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case FieldKind::Prime: {
        if (residue_value() < other.residue_value()) return -1;
        return residue_value() > other.residue_value() ? 1 : 0;
    }
    case FieldKind::Float: {
        if (float_value() < other.float_value()) return -1;
        return float_value() > other.float_value() ? 1 : 0;
    }
    }
    return 0;
}

std::string FieldElement::str() const {
    switch (field_.kind()) {
    case FieldKind::Rational: return rational_value().get_str();
    case FieldKind::Prime: return std::to_string(residue_value());
    case FieldKind::Float: {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), float_value());
        return std::string(buf, ptr);
    }
    }
    return "?";
}

double FieldElement::to_double() const {
    switch (field_.kind()) {
    case FieldKind::Rational: return rational_value().get_d();
    case FieldKind::Prime: return static_cast<double>(residue_value());
    case FieldKind::Float: return float_value();
    }
    return 0.0;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
    return os << e.str();
}

} // namespace masscalc
