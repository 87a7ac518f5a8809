#pragma once

#include "qchain/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qchain {

/// Raised when an exact division leaves a remainder.
class NonzeroRemainder : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial over the rationals. coeffs()[k] multiplies x^k;
/// there are never trailing zeros, so the zero polynomial has no coefficients.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);
    RationalPolynomial(std::initializer_list<Rational> coeffs);

    static RationalPolynomial monomial(const Rational& c, std::size_t degree);
    /// (x - root)^power
    static RationalPolynomial linear_power(const Rational& root, unsigned power);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& leading() const { return coeffs_.back(); }
    /// Coefficient of x^k, zero beyond the degree.
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }

    Rational operator()(const Rational& x) const;

    RationalPolynomial operator-() const;
    RationalPolynomial& operator+=(const RationalPolynomial& rhs);
    RationalPolynomial& operator-=(const RationalPolynomial& rhs);
    RationalPolynomial& operator*=(const Rational& c);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder with deg(remainder) < deg(den). Throws DivisionByZero for den = 0.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& num,
                                                         const RationalPolynomial& den);

/// num / den, throwing NonzeroRemainder unless den divides num exactly.
RationalPolynomial poly_divide_exact(const RationalPolynomial& num, const RationalPolynomial& den);

/// Monic gcd together with Bezout cofactors: s*a + t*b = g.
struct ExtendedGcd {
    RationalPolynomial g, s, t;
};
ExtendedGcd extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// The n-th cyclotomic polynomial, via prod_{d | n} (x^d - 1)^{mu(n/d)}.
RationalPolynomial cyclotomic_polynomial(unsigned n);

/// Euler's totient.
unsigned euler_phi(unsigned n);

}  // namespace qchain
