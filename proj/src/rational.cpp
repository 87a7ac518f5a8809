#include "qchain/rational.hpp"

#include <ostream>
#include <utility>

namespace qchain {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    // Accept the unicode minus sign that appears in hand-written reports.
    if (s.rfind("\xE2\x88\x92", 0) == 0) s = "-" + s.substr(3);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    mpz_class num, den(1);
    const bool ok = slash == std::string::npos
                        ? num.set_str(s, 10) == 0
                        : num.set_str(s.substr(0, slash), 10) == 0 && den.set_str(s.substr(slash + 1), 10) == 0;
    if (!ok) throw std::invalid_argument("malformed rational literal: " + s);
    if (den == 0) throw std::invalid_argument("zero denominator in literal: " + s);
    return Rational(num, den);
}

std::size_t Rational::bit_size() const {
    return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

std::string Rational::to_string() const {
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1) / value_);
}

mpz_class binomial(long n, long k) {
    mpz_class r;
    if (n < 0 || k < 0 || k > n) return r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace qchain
