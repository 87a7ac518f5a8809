#include "qchain/precision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace qchain {

namespace {

void check_precision(long bits) {
    if (bits < kMinPrecisionBits)
        throw std::invalid_argument("precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
}

void widen(mpfr_ptr x, mpfr_srcptr other) {
    if (mpfr_get_prec(other) > mpfr_get_prec(x)) mpfr_prec_round(x, mpfr_get_prec(other), MPFR_RNDN);
}

}  // namespace

Real::Real(long precision_bits) {
    check_precision(precision_bits);
    mpfr_init2(v_, precision_bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(long value, long precision_bits) : Real(precision_bits) {
    mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, long precision_bits) : Real(precision_bits) {
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(long precision_bits) {
    Real r(precision_bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::pow2(long exponent, long precision_bits) {
    Real r(1, precision_bits);
    mpfr_mul_2si(r.v_, r.v_, exponent, MPFR_RNDN);
    return r;
}

Real Real::parse(const std::string& decimal, long precision_bits) {
    Real r(precision_bits);
    if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("malformed decimal: " + decimal);
    return r;
}

long Real::log2_abs() const {
    if (mpfr_zero_p(v_)) return std::numeric_limits<int>::min();
    return static_cast<long>(mpfr_get_exp(v_)) - 1;
}

std::string Real::to_string(int significant_digits) const {
    char* buf = nullptr;
    const int digits = std::max(significant_digits, 1) - 1;
    if (mpfr_asprintf(&buf, "%.*Re", digits, v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& rhs) {
    widen(v_, rhs.v_);
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    widen(v_, rhs.v_);
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    widen(v_, rhs.v_);
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    widen(v_, rhs.v_);
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real abs(const Real& x) {
    Real r(x);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    Real r(x);
    mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real cos(const Real& x) {
    Real r(x);
    mpfr_cos(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real sin(const Real& x) {
    Real r(x);
    mpfr_sin(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r(std::max(x.precision(), y.precision()));
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

PrecisionComplex::PrecisionComplex(long precision_bits) : re_(precision_bits), im_(precision_bits) {}

PrecisionComplex::PrecisionComplex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
    if (re_.precision() != im_.precision()) {
        const long bits = std::max(re_.precision(), im_.precision());
        mpfr_prec_round(re_.get(), bits, MPFR_RNDN);
        mpfr_prec_round(im_.get(), bits, MPFR_RNDN);
    }
}

PrecisionComplex::PrecisionComplex(const Rational& re, long precision_bits)
    : re_(re, precision_bits), im_(precision_bits) {}

PrecisionComplex PrecisionComplex::unit_root(long numerator, long denominator, long precision_bits) {
    Real angle = Real::pi(precision_bits + 16) * Real(numerator, precision_bits + 16) /
                 Real(denominator, precision_bits + 16);
    Real c = cos(angle), s = sin(angle);
    mpfr_prec_round(c.get(), precision_bits, MPFR_RNDN);
    mpfr_prec_round(s.get(), precision_bits, MPFR_RNDN);
    return {std::move(c), std::move(s)};
}

PrecisionComplex PrecisionComplex::inverse() const {
    const Real n = re_ * re_ + im_ * im_;
    if (n.is_zero()) throw DivisionByZero("complex inverse of zero");
    return {re_ / n, -im_ / n};
}

PrecisionComplex& PrecisionComplex::operator+=(const PrecisionComplex& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

PrecisionComplex& PrecisionComplex::operator-=(const PrecisionComplex& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

PrecisionComplex& PrecisionComplex::operator*=(const PrecisionComplex& rhs) {
    Real re = re_ * rhs.re_ - im_ * rhs.im_;
    im_ = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    return *this;
}

PrecisionComplex& PrecisionComplex::operator/=(const PrecisionComplex& rhs) {
    return *this *= rhs.inverse();
}

PrecisionComplex& PrecisionComplex::operator*=(const Real& rhs) {
    re_ *= rhs;
    im_ *= rhs;
    return *this;
}

PrecisionComplex PrecisionComplex::pow(unsigned exponent) const {
    PrecisionComplex result(Rational(1), precision_bits());
    PrecisionComplex base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

std::string PrecisionComplex::to_string(int significant_digits) const {
    if (im_.is_zero()) return re_.to_string(significant_digits);
    std::string im = qchain::abs(im_).to_string(significant_digits);
    return re_.to_string(significant_digits) + (im_.sign() < 0 ? " - " : " + ") + im + "i";
}

int report_digits(long precision_bits) {
    return static_cast<int>(std::floor(static_cast<double>(precision_bits - 16) * std::log10(2.0)));
}

}  // namespace qchain
