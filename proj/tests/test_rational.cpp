#include <doctest.h>

#include "qchain/rational.hpp"

#include <random>
#include <sstream>

using qchain::Rational;

TEST_CASE("rationals are kept in lowest terms") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(0, 7).to_string() == "0/1");
    CHECK(Rational(5).to_string() == "5/1");
    CHECK_THROWS_AS(Rational(1, 0), qchain::DivisionByZero);
}

TEST_CASE("parse accepts integers, fractions and a unicode minus") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-22/6") == Rational(-11, 3));
    CHECK(Rational::parse("\xE2\x88\x92" "3/4") == Rational(-3, 4));
    CHECK(Rational::parse("123456789012345678901234567890/3").to_string() ==
          "41152263004115226300411522630/1");
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("serialised form round-trips") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    for (int i = 0; i < 200; ++i) {
        long d = dist(rng);
        if (d == 0) d = 1;
        const Rational r(dist(rng), d);
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("field axioms on random rationals") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> dist(-50, 50);
    auto draw = [&] {
        long d = dist(rng);
        return Rational(dist(rng), d == 0 ? 1 : d);
    };
    for (int i = 0; i < 300; ++i) {
        const Rational a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(b * b.inverse() == Rational(1));
        }
    }
    CHECK_THROWS_AS(Rational().inverse(), qchain::DivisionByZero);
    Rational x(1);
    CHECK_THROWS_AS(x /= Rational(), qchain::DivisionByZero);
}

TEST_CASE("ordering and predicates") {
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(-3, 5).sign() == -1);
    CHECK(Rational(-3, 5).abs() == Rational(3, 5));
    CHECK(Rational(1, 4).to_double() == 0.25);
    std::ostringstream os;
    os << Rational(-2, 3);
    CHECK(os.str() == "-2/3");
}

TEST_CASE("binomial coefficients") {
    CHECK(qchain::binomial(5, 2) == 10);
    CHECK(qchain::binomial(9, 0) == 1);
    CHECK(qchain::binomial(4, 5) == 0);
    CHECK(qchain::binomial(4, -1) == 0);
    // Pascal's rule as an oracle
    for (long n = 1; n < 40; ++n)
        for (long k = 1; k < n; ++k)
            CHECK(qchain::binomial(n, k) == qchain::binomial(n - 1, k - 1) + qchain::binomial(n - 1, k));
    CHECK(qchain::binomial(100, 50).get_str() == "100891344545564193334812497256");
}
