#include <doctest.h>

#include "qchain/precision.hpp"

#include <string>

using qchain::PrecisionComplex;
using qchain::Real;
using qchain::Rational;

TEST_CASE("precision floor") {
    CHECK_THROWS_AS(Real(32), std::invalid_argument);
    CHECK(Real(64).precision() == 64);
}

TEST_CASE("pi to many digits") {
    const Real pi = Real::pi(256);
    CHECK(pi.to_string(40).rfind("3.141592653589793238462643383279502884197", 0) == 0);
}

TEST_CASE("binary operations widen to the larger precision") {
    const Real a(1, 64), b(3, 200);
    CHECK((a / b).precision() == 200);
    CHECK((b * a).precision() == 200);
}

TEST_CASE("sqrt, hypot and log2") {
    const Real two(2, 256);
    const Real s = qchain::sqrt(two);
    CHECK(qchain::abs(s * s - two) < Real::pow2(-250, 256));
    CHECK(qchain::hypot(Real(3, 128), Real(4, 128)) == Real(5, 128));
    CHECK(Real::pow2(-20, 128).log2_abs() == -20);
    CHECK(Real(5, 128).log2_abs() == 2);
    CHECK(qchain::max(Real(-1, 64), Real(2, 64)) == Real(2, 64));
}

TEST_CASE("parse and rational conversion") {
    CHECK(Real::parse("0.25", 128) == Real(Rational(1, 4), 128));
    CHECK_THROWS_AS(Real::parse("abc", 128), std::invalid_argument);
}

TEST_CASE("unit roots and complex arithmetic") {
    const auto w = PrecisionComplex::unit_root(2, 5, 200);
    const auto w5 = w.pow(5);
    CHECK(qchain::abs(w5.real() - Real(1, 200)) < Real::pow2(-190, 200));
    CHECK(qchain::abs(w5.imag()) < Real::pow2(-190, 200));
    const auto prod = w * w.inverse();
    CHECK(qchain::abs(prod.real() - Real(1, 200)) < Real::pow2(-190, 200));
    CHECK(qchain::abs(w.abs() - Real(1, 200)) < Real::pow2(-190, 200));
    const auto i = PrecisionComplex::unit_root(1, 2, 128);
    CHECK(qchain::abs(i.real()) < Real::pow2(-120, 128));
    CHECK_THROWS_AS(PrecisionComplex(128).inverse(), qchain::DivisionByZero);
}

TEST_CASE("string rendering") {
    CHECK(PrecisionComplex(Rational(1, 2), 64).to_string(3) == "5.00e-01");
    const PrecisionComplex z(Real(1, 64), Real(-2, 64));
    CHECK(z.to_string(2) == "1.0e+00 - 2.0e+00i");
    CHECK(qchain::report_digits(256) == 72);
}
