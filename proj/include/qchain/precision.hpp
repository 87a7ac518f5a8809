#pragma once

#include "qchain/rational.hpp"

#include <mpfr.h>

#include <string>

namespace qchain {

/// Smallest working precision accepted anywhere in the library.
inline constexpr long kMinPrecisionBits = 64;
inline constexpr long kDefaultPrecisionBits = 256;

/// Owning wrapper around an MPFR float. Every value carries its own precision;
/// binary operations produce a result at the larger of the operand precisions.
class Real {
public:
    explicit Real(long precision_bits = kDefaultPrecisionBits);
    Real(long value, long precision_bits);
    Real(const Rational& value, long precision_bits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real pi(long precision_bits);
    /// 2^exponent, exactly.
    static Real pow2(long exponent, long precision_bits);
    static Real parse(const std::string& decimal, long precision_bits);

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// floor(log2 |x|); a large negative number for zero.
    long log2_abs() const;

    /// Scientific notation with the given number of significant digits.
    std::string to_string(int significant_digits) const;

    Real operator-() const;
    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    friend Real abs(const Real& x);
    friend Real sqrt(const Real& x);
    friend Real cos(const Real& x);
    friend Real sin(const Real& x);
    friend Real hypot(const Real& x, const Real& y);
    friend Real max(const Real& a, const Real& b);

private:
    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real hypot(const Real& x, const Real& y);
Real max(const Real& a, const Real& b);

/// Complex number with MPFR parts at a common precision.
class PrecisionComplex {
public:
    explicit PrecisionComplex(long precision_bits = kDefaultPrecisionBits);
    PrecisionComplex(Real re, Real im);
    PrecisionComplex(const Rational& re, long precision_bits);

    /// e^{i*pi*numerator/denominator}
    static PrecisionComplex unit_root(long numerator, long denominator, long precision_bits);

    const Real& real() const { return re_; }
    const Real& imag() const { return im_; }
    long precision_bits() const { return re_.precision(); }

    Real abs() const { return hypot(re_, im_); }
    PrecisionComplex conj() const { return {re_, -im_}; }
    PrecisionComplex inverse() const;

    PrecisionComplex operator-() const { return {-re_, -im_}; }
    PrecisionComplex& operator+=(const PrecisionComplex& rhs);
    PrecisionComplex& operator-=(const PrecisionComplex& rhs);
    PrecisionComplex& operator*=(const PrecisionComplex& rhs);
    PrecisionComplex& operator/=(const PrecisionComplex& rhs);
    PrecisionComplex& operator*=(const Real& rhs);
    friend PrecisionComplex operator+(PrecisionComplex a, const PrecisionComplex& b) { return a += b; }
    friend PrecisionComplex operator-(PrecisionComplex a, const PrecisionComplex& b) { return a -= b; }
    friend PrecisionComplex operator*(PrecisionComplex a, const PrecisionComplex& b) { return a *= b; }
    friend PrecisionComplex operator/(PrecisionComplex a, const PrecisionComplex& b) { return a /= b; }
    friend PrecisionComplex operator*(PrecisionComplex a, const Real& b) { return a *= b; }

    PrecisionComplex pow(unsigned exponent) const;

    /// "re" when the imaginary part is exactly zero, otherwise "re + im i" / "re - im i".
    std::string to_string(int significant_digits) const;

private:
    Real re_, im_;
};

/// Significant decimal digits that are trustworthy at the given binary precision,
/// keeping 16 guard bits.
int report_digits(long precision_bits);

}  // namespace qchain
