#include "qchain/polynomial.hpp"

#include <sstream>

namespace qchain {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    trim();
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::linear_power(const Rational& root, unsigned power) {
    std::vector<Rational> v(power + 1);
    const Rational minus_root = -root;
    // binomial expansion of (x - r)^n
    Rational rpow(1);
    for (unsigned k = 0; k <= power; ++k) {
        v[power - k] = Rational(binomial(power, k)) * rpow;
        rpow *= minus_root;
    }
    return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string(char var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (!unit || k == 0) {
            if (mag.is_integer())
                os << mag.numerator().get_str();
            else
                os << "(" << mag.to_string() << ")";
        }
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& num,
                                                         const RationalPolynomial& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (num.degree() < den.degree()) return {RationalPolynomial{}, num};
    std::vector<Rational> rem = num.coeffs();
    const auto dd = static_cast<std::size_t>(den.degree());
    const Rational lead_inv = den.leading().inverse();
    std::vector<Rational> quot(rem.size() - dd);
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i].is_zero()) continue;
        const Rational q = rem[i] * lead_inv;
        quot[i - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den.coeffs()[j];
    }
    rem.resize(dd);
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial poly_divide_exact(const RationalPolynomial& num, const RationalPolynomial& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero())
        throw NonzeroRemainder("inexact polynomial division: remainder " + r.to_string() + " when dividing by " +
                               den.to_string());
    return q;
}

ExtendedGcd extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
    RationalPolynomial r0 = a, r1 = b;
    RationalPolynomial s0{Rational(1)}, s1;
    RationalPolynomial t0, t1{Rational(1)};
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (!r0.is_zero()) {
        const Rational inv = r0.leading().inverse();
        r0 *= inv;
        s0 *= inv;
        t0 *= inv;
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

namespace {

int moebius(unsigned n) {
    int result = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

RationalPolynomial cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    RationalPolynomial numer{Rational(1)}, denom{Rational(1)};
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int mu = moebius(n / d);
        if (mu == 0) continue;
        RationalPolynomial factor = RationalPolynomial::monomial(Rational(1), d) - RationalPolynomial{Rational(1)};
        if (mu > 0)
            numer = numer * factor;
        else
            denom = denom * factor;
    }
    return poly_divide_exact(numer, denom);
}

}  // namespace qchain
