#include "doctest.h"

#include "grouptrace/field.hpp"

using namespace grouptrace;

TEST_CASE("field construction") {
    const Field q = Field::rationals();
    CHECK(q.is_rationals());
    CHECK(q.characteristic() == 0);
    CHECK(q.name() == "Q");

    const Field f5 = Field::prime_field(5);
    CHECK(f5.characteristic() == 5);
    CHECK(f5.name() == "F5");

    CHECK_THROWS_AS(Field::prime_field(4), Error);
    CHECK_THROWS_AS(Field::prime_field(1), Error);
    CHECK_NOTHROW(Field::prime_field(2147483647)); // 2^31 - 1 is prime
    CHECK_THROWS_AS(Field::prime_field((std::uint64_t(1) << 31) + 11), Error);
}

TEST_CASE("rational arithmetic stays in lowest terms") {
    const Field q = Field::rationals();
    Scalar a = Scalar::of_fraction(q, 2, 4);
    CHECK(a.str() == "1/2");
    Scalar b = Scalar::of_fraction(q, 1, 6);
    CHECK((a + b).str() == "2/3");
    CHECK((a * b).str() == "1/12");
    CHECK((a - a).is_zero());
    CHECK((a / b).str() == "3");
    CHECK((-Scalar::of_fraction(q, 3, -7)).str() == "3/7"); // positive denominator
}

TEST_CASE("rational arithmetic does not overflow") {
    const Field q = Field::rationals();
    Scalar big = Scalar::of_int(q, 1);
    for (int i = 0; i < 5; ++i) {
        Scalar t = Scalar::of_int(q, 1000000007);
        big *= t * t; // ~ (1e9)^10, far beyond 64 bits
    }
    Scalar inv = big.inverse();
    CHECK((big * inv).is_one());
}

TEST_CASE("prime field arithmetic") {
    const Field f7 = Field::prime_field(7);
    Scalar a = Scalar::of_int(f7, 10); // 3
    CHECK(a.residue_value() == 3);
    CHECK((-a).residue_value() == 4);
    CHECK((a * a).residue_value() == 2);
    CHECK(a.inverse().residue_value() == 5); // 3 * 5 = 15 = 1 mod 7
    CHECK(Scalar::of_int(f7, -1).residue_value() == 6);
    CHECK_THROWS_AS(Scalar::zero(f7).inverse(), Error);

    // large p: products must not wrap
    const Field fbig = Field::prime_field(2147483647);
    Scalar x = Scalar::of_int(fbig, 2147483646); // -1
    CHECK((x * x).is_one());
}

TEST_CASE("mixed-field operations throw") {
    const Field q = Field::rationals();
    const Field f5 = Field::prime_field(5);
    Scalar a = Scalar::one(q), b = Scalar::one(f5);
    CHECK_THROWS_AS(a + b, FieldMismatchError);
    CHECK(a != b); // never equal, not an error
}

TEST_CASE("scalar parsing") {
    const Field q = Field::rationals();
    const Field f5 = Field::prime_field(5);

    CHECK(Scalar::parse(q, "3/2").str() == "3/2");
    CHECK(Scalar::parse(q, "-3/7").str() == "-3/7");
    CHECK(Scalar::parse(q, "6/4").str() == "3/2");
    CHECK(Scalar::parse(f5, "4").residue_value() == 4);
    CHECK(Scalar::parse(f5, "4 mod 5").residue_value() == 4);
    CHECK(Scalar::parse(f5, "-1").residue_value() == 4);
    CHECK(Scalar::parse(f5, "1/2").residue_value() == 3); // 2 * 3 = 1 mod 5

    CHECK_THROWS_AS(Scalar::parse(f5, "4 mod 7"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, ""), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(f5, "1/5"), ParseError);
}

TEST_CASE("tagged formatting") {
    const Field f5 = Field::prime_field(5);
    CHECK(Scalar::of_int(f5, 4).str_tagged() == "4 mod 5");
    CHECK(Scalar::of_fraction(Field::rationals(), -3, 7).str_tagged() == "-3/7");
}

TEST_CASE("parse/format round trip") {
    const Field q = Field::rationals();
    const Field f11 = Field::prime_field(11);
    // small deterministic sweep
    for (long long n = -6; n <= 6; ++n)
        for (long long d = 1; d <= 5; ++d) {
            Scalar s = Scalar::of_fraction(q, n, d);
            CHECK(Scalar::parse(q, s.str()) == s);
        }
    for (long long n = 0; n < 11; ++n) {
        Scalar s = Scalar::of_int(f11, n);
        CHECK(Scalar::parse(f11, s.str_tagged()) == s);
    }
}
