#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <masscalc/field.hpp>

#include <numeric>

using namespace masscalc;
using masscalc::testing::random_element;
using masscalc::testing::random_nonzero;

TEST_CASE("rational arithmetic is exact") {
    Field q = Field::rationals();
    CHECK(q.ratio(1, 2) + q.ratio(1, 3) == q.ratio(5, 6));
    CHECK(q.ratio(2, 3).inverse() == q.ratio(3, 2));
    CHECK((q.ratio(1, 3) * q.element(3)).is_one());
    CHECK(q.element(0) - q.element(7) == q.element(-7));
}

TEST_CASE("prime field arithmetic") {
    Field f5 = Field::prime(5);
    CHECK(f5.element(3) + f5.element(4) == f5.element(2));
    Field f2 = Field::prime(2);
    CHECK((f2.element(1) + f2.element(1)).is_zero());
    Field f7 = Field::prime(7);
    CHECK(f7.element(3).inverse() == f7.element(5));
    CHECK_THROWS_AS(f7.zero().inverse(), DivisionByZeroError);
}

TEST_CASE("characteristic") {
    CHECK(characteristic(Field::rationals()) == 0);
    CHECK(characteristic(Field::real()) == 0);
    CHECK(characteristic(Field::prime(2)) == 2);
    CHECK(characteristic(Field::prime(97)) == 97);
}

TEST_CASE("non-prime moduli are rejected") {
    CHECK_THROWS_AS(Field::prime(1), NonPrimeModulusError);
    CHECK_THROWS_AS(Field::prime(0), NonPrimeModulusError);
    CHECK_THROWS_AS(Field::prime(4), NonPrimeModulusError);
    CHECK_THROWS_AS(Field::prime(91), NonPrimeModulusError); // 7 * 13
    CHECK_NOTHROW(Field::prime(2));
    CHECK_NOTHROW(Field::prime(2147483647)); // 2^31 - 1
}

TEST_CASE("mixed-field operations are rejected") {
    Field q = Field::rationals();
    Field f5 = Field::prime(5);
    CHECK_THROWS_AS(q.one() + f5.one(), FieldMismatchError);
    CHECK_THROWS_AS((void)(q.one() == f5.one()), FieldMismatchError);
    CHECK_THROWS_AS(Field::prime(5).one() + Field::prime(7).one(), FieldMismatchError);
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937_64 rng(20240817);
    std::vector<Field> fields = {Field::rationals(), Field::prime(2), Field::prime(5),
                                 Field::prime(97), Field::real()};
    for (const Field& k : fields) {
        for (int i = 0; i < 1000; ++i) {
            FieldElement a = random_element(k, rng);
            FieldElement b = random_element(k, rng);
            FieldElement c = random_element(k, rng);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + (-a)).is_zero());
        }
        for (int i = 0; i < 200; ++i) {
            FieldElement a = random_nonzero(k, rng);
            CHECK((a.inverse() * a).is_one());
        }
    }
}

TEST_CASE("rationals stay reduced with positive denominator") {
    Field q = Field::rationals();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        FieldElement a = random_element(q, rng);
        FieldElement b = random_element(q, rng);
        for (const FieldElement& r : {a + b, a - b, a * b}) {
            const mpq_class& v = r.rational_value();
            CHECK(gcd(mpz_class(v.get_num()), mpz_class(v.get_den())) == 1);
            CHECK(v.get_den() > 0);
        }
    }
}

TEST_CASE("float comparisons use relative tolerance with absolute floor") {
    Field f = Field::real(1e-9);
    CHECK(f.element(1) == f.parse("1.0000000000001"));
    CHECK(f.element(1) != f.parse("1.001"));
    CHECK(f.parse("1e-12").is_zero());
    // Relative: large magnitudes tolerate proportionally large gaps.
    CHECK(f.parse("1e12") == f.parse("1.0000000001e12"));
    Field coarse = Field::real(1e-3);
    CHECK(coarse.element(1) == coarse.parse("1.0009"));
}

TEST_CASE("serialization round-trips") {
    Field q = Field::rationals();
    CHECK(q.ratio(-3, 4).str() == "-3/4");
    CHECK(q.element(5).str() == "5");
    CHECK(q.parse("-3/4") == q.ratio(-3, 4));
    CHECK(q.parse("10/4") == q.ratio(5, 2));
    CHECK(q.parse("10/4").str() == "5/2");

    Field f7 = Field::prime(7);
    CHECK(f7.parse("12") == f7.element(5));
    CHECK(f7.element(5).str() == "5");

    Field f = Field::real();
    CHECK(f.parse(f.parse("0.25").str()) == f.parse("0.25"));
}

TEST_CASE("parse inverts str on every backend") {
    std::mt19937_64 rng(99);
    for (const Field& k : {Field::rationals(), Field::prime(97), Field::real()}) {
        for (int i = 0; i < 200; ++i) {
            FieldElement e = random_element(k, rng);
            CHECK(k.parse(e.str()) == e);
        }
    }
}

TEST_CASE("malformed literals are parse errors") {
    Field q = Field::rationals();
    for (const char* bad : {"", "1/2/3", "x", "1/", "/2", "1/0", "2/-3", "1.5", "- 2"})
        CHECK_THROWS_AS(q.parse(bad), ParseError);
    Field f5 = Field::prime(5);
    CHECK_THROWS_AS(f5.parse("1/2"), ParseError);
    CHECK_THROWS_AS(f5.parse("abc"), ParseError);
    Field f = Field::real();
    CHECK_THROWS_AS(f.parse("1.2.3"), ParseError);
    CHECK_THROWS_AS(f.parse(""), ParseError);
}
