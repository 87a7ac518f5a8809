#pragma once

#include "qchain/polynomial.hpp"
#include "qchain/precision.hpp"
#include "qchain/rational.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qchain {

class OrderMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CyclotomicNumber;

/// The cyclotomic field Q(zeta) with zeta = e^{2 pi i / order}, presented as
/// Q[x] / Phi_order(x). Immutable once built, so it can be shared freely
/// between threads and between the elements that live in it.
class CyclotomicField {
public:
    explicit CyclotomicField(unsigned order);

    unsigned order() const { return order_; }
    /// phi(order), the dimension over Q.
    unsigned degree() const { return degree_; }
    const RationalPolynomial& modulus() const { return modulus_; }
    /// Coefficient vector of zeta^j reduced modulo Phi, for 0 <= j < order.
    const std::vector<Rational>& power_basis(unsigned j) const { return powers_[j]; }

private:
    unsigned order_;
    unsigned degree_;
    RationalPolynomial modulus_;
    std::vector<std::vector<Rational>> powers_;
};

/// Shared handle to the field used for a chain of (odd) length parameter L:
/// order 2L, zeta = e^{i pi / L}.
std::shared_ptr<const CyclotomicField> chain_field(int L);
std::shared_ptr<const CyclotomicField> make_field(unsigned order);

/// Element of a cyclotomic field, stored as its canonical reduced coefficient
/// vector of length phi(order). Two elements are equal iff their vectors are.
class CyclotomicNumber {
public:
    CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, const Rational& value);
    CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs);

    /// zeta^k for any integer k.
    static CyclotomicNumber zeta_power(std::shared_ptr<const CyclotomicField> field, long k);

    const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
    unsigned order() const { return field_->order(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// True when the element lies in Q, i.e. only the constant coefficient is nonzero.
    bool is_rational() const;
    Rational rational_value() const;

    CyclotomicNumber zero() const { return {field_, Rational()}; }
    CyclotomicNumber one() const { return {field_, Rational(1)}; }

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const Rational& rhs);
    CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& b) { return a *= b; }
    friend CyclotomicNumber operator*(const Rational& b, CyclotomicNumber a) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a.order() == b.order() && a.coeffs_ == b.coeffs_;
    }

    /// Throws DivisionByZero for the zero element.
    CyclotomicNumber inverse() const;
    CyclotomicNumber pow(unsigned exponent) const;
    /// Image under zeta -> zeta^{-1} (complex conjugation).
    CyclotomicNumber conjugate() const;
    bool is_real() const { return conjugate() == *this; }

    /// Value at zeta = e^{2 pi i / order}, computed in MPFR at the given precision.
    PrecisionComplex embed(long precision_bits = kDefaultPrecisionBits) const;

    /// Readable form such as "1/2 + 3/4*z^2" in powers of zeta.
    std::string to_string() const;

private:
    void require_same_order(const CyclotomicNumber& rhs) const;
    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> coeffs_;
};

/// (zeta^m + zeta^{-m}) / 2, i.e. cos(2 pi m / order).
CyclotomicNumber field_cos(const std::shared_ptr<const CyclotomicField>& field, long m);

/// cos(pi m / L) = (zeta^m + zeta^{-m}) / 2 in Q(zeta_{2L}). L must be odd and >= 3.
CyclotomicNumber cyc_cos(long m, int L);
/// e^{2 pi i k / L} = zeta^{2k} in Q(zeta_{2L}). L must be odd and >= 3.
CyclotomicNumber cyc_root_of_unity(long k, int L);

inline CyclotomicNumber conjugate(const CyclotomicNumber& a) { return a.conjugate(); }
inline bool is_real(const CyclotomicNumber& a) { return a.is_real(); }
inline PrecisionComplex embed(const CyclotomicNumber& a, long precision_bits = kDefaultPrecisionBits) {
    return a.embed(precision_bits);
}

/// Throws std::invalid_argument unless L is odd and at least 3.
void require_chain_length(int L);

}  // namespace qchain
