#include <doctest.h>

#include "qchain/polynomial.hpp"

#include <random>

using qchain::Rational;
using qchain::RationalPolynomial;

namespace {

RationalPolynomial x_pow_minus_one(unsigned n) {
    return RationalPolynomial::monomial(Rational(1), n) - RationalPolynomial{Rational(1)};
}

RationalPolynomial random_poly(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<long> dist(-9, 9);
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(dist(rng), 1 + std::abs(dist(rng)));
    if (c.back().is_zero()) c.back() = Rational(1);
    return RationalPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("construction trims and evaluates") {
    const RationalPolynomial p{Rational(1), Rational(2), Rational(0), Rational(0)};
    CHECK(p.degree() == 1);
    CHECK(p(Rational(3)) == Rational(7));
    CHECK(RationalPolynomial{}.degree() == -1);
    CHECK(p.coeff(5) == Rational());
    CHECK(p.to_string() == "2x + 1");
    CHECK(RationalPolynomial{Rational(-1, 2), Rational(0), Rational(-1)}.to_string() == "-x^2 - (1/2)");
}

TEST_CASE("linear_power expands (x - r)^n") {
    const auto p = RationalPolynomial::linear_power(Rational(1), 3);
    CHECK(p == RationalPolynomial{Rational(-1), Rational(3), Rational(-3), Rational(1)});
    const auto q = RationalPolynomial::linear_power(Rational(2, 3), 4);
    RationalPolynomial ref{Rational(1)};
    for (int i = 0; i < 4; ++i) ref = ref * RationalPolynomial{Rational(-2, 3), Rational(1)};
    CHECK(q == ref);
}

TEST_CASE("divmod reconstructs the dividend") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        const auto a = random_poly(rng, 7), b = random_poly(rng, 3);
        auto [q, r] = qchain::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(qchain::divmod(RationalPolynomial{Rational(1)}, RationalPolynomial{}), qchain::DivisionByZero);
}

TEST_CASE("poly_divide_exact") {
    // (x^5 - 1) / (x - 1) = x^4 + x^3 + x^2 + x + 1
    const auto q = qchain::poly_divide_exact(x_pow_minus_one(5), RationalPolynomial::linear_power(Rational(1), 1));
    CHECK(q == RationalPolynomial{Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
    // (x^2 - 1)^3 / (x - 1)^3 = (x + 1)^3
    RationalPolynomial cube = x_pow_minus_one(2) * x_pow_minus_one(2) * x_pow_minus_one(2);
    CHECK(qchain::poly_divide_exact(cube, RationalPolynomial::linear_power(Rational(1), 3)) ==
          RationalPolynomial::linear_power(Rational(-1), 3));
    CHECK_THROWS_AS(qchain::poly_divide_exact(x_pow_minus_one(5), RationalPolynomial::linear_power(Rational(1), 2)),
                    qchain::NonzeroRemainder);
}

TEST_CASE("extended gcd yields Bezout cofactors") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto common = random_poly(rng, 2);
        const auto a = random_poly(rng, 4) * common, b = random_poly(rng, 3) * common;
        const auto g = qchain::extended_gcd(a, b);
        CHECK(g.s * a + g.t * b == g.g);
        CHECK(g.g.leading() == Rational(1));
        CHECK(qchain::divmod(a, g.g).second.is_zero());
        CHECK(qchain::divmod(b, g.g).second.is_zero());
        CHECK(g.g.degree() >= 2);
    }
}

TEST_CASE("cyclotomic polynomials match the divisor recursion") {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, built independently here.
    std::vector<RationalPolynomial> ref(41);
    for (unsigned n = 1; n <= 40; ++n) {
        RationalPolynomial den{Rational(1)};
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) den = den * ref[d];
        ref[n] = qchain::divmod(x_pow_minus_one(n), den).first;
        const auto phi = qchain::cyclotomic_polynomial(n);
        CHECK(phi == ref[n]);
        CHECK(phi.degree() == static_cast<long>(qchain::euler_phi(n)));
        CHECK(qchain::divmod(x_pow_minus_one(n), phi).second.is_zero());
    }
    CHECK(qchain::cyclotomic_polynomial(10) ==
          RationalPolynomial{Rational(1), Rational(-1), Rational(1), Rational(-1), Rational(1)});
    CHECK(qchain::euler_phi(22) == 10);
    CHECK_THROWS_AS(qchain::cyclotomic_polynomial(0), std::invalid_argument);
}
