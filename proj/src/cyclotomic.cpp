#include "qchain/cyclotomic.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qchain {

CyclotomicField::CyclotomicField(unsigned order)
    : order_(order), degree_(euler_phi(order)), modulus_(cyclotomic_polynomial(order)) {
    // x^j mod Phi for j < order, by repeated multiplication with x.
    const auto& m = modulus_.coeffs();
    std::vector<Rational> cur(degree_);
    cur[0] = Rational(1);
    powers_.reserve(order_);
    powers_.push_back(cur);
    for (unsigned j = 1; j < order_; ++j) {
        std::vector<Rational> next(degree_);
        const Rational top = cur[degree_ - 1];
        for (unsigned k = degree_ - 1; k > 0; --k) next[k] = cur[k - 1];
        next[0] = Rational();
        if (!top.is_zero())
            for (unsigned k = 0; k < degree_; ++k) next[k] -= top * m[k];
        powers_.push_back(next);
        cur = std::move(next);
    }
}

std::shared_ptr<const CyclotomicField> make_field(unsigned order) {
    if (order == 0) throw std::invalid_argument("cyclotomic field order must be positive");
    return std::make_shared<const CyclotomicField>(order);
}

void require_chain_length(int L) {
    if (L < 3 || L % 2 == 0) throw std::invalid_argument("L must be odd \xE2\x89\xA5 3");
}

std::shared_ptr<const CyclotomicField> chain_field(int L) {
    require_chain_length(L);
    return make_field(static_cast<unsigned>(2 * L));
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, const Rational& value)
    : field_(std::move(field)), coeffs_(field_->degree()) {
    coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)) {
    // Reduce an arbitrary-length representative through zeta^j = zeta^{j mod order}.
    const unsigned d = field_->degree();
    if (coeffs.size() <= d) {
        coeffs.resize(d);
        coeffs_ = std::move(coeffs);
        return;
    }
    coeffs_.assign(d, Rational());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        if (j < d) {
            coeffs_[j] += coeffs[j];
            continue;
        }
        const auto& basis = field_->power_basis(static_cast<unsigned>(j % field_->order()));
        for (unsigned k = 0; k < d; ++k)
            if (!basis[k].is_zero()) coeffs_[k] += coeffs[j] * basis[k];
    }
}

CyclotomicNumber CyclotomicNumber::zeta_power(std::shared_ptr<const CyclotomicField> field, long k) {
    const long n = field->order();
    const long j = ((k % n) + n) % n;
    std::vector<Rational> c = field->power_basis(static_cast<unsigned>(j));
    return {std::move(field), std::move(c)};
}

bool CyclotomicNumber::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool CyclotomicNumber::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic element is not rational: " + to_string());
    return coeffs_[0];
}

void CyclotomicNumber::require_same_order(const CyclotomicNumber& rhs) const {
    if (order() != rhs.order())
        throw OrderMismatch("cyclotomic order mismatch: " + std::to_string(order()) + " vs " +
                            std::to_string(rhs.order()));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
    require_same_order(rhs);
    const std::size_t d = coeffs_.size();
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (!rhs.coeffs_[j].is_zero()) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    *this = CyclotomicNumber(field_, std::move(prod));
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) {
    return *this *= rhs.inverse();
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic element");
    // Phi is irreducible, so gcd(a, Phi) = 1 and the Bezout cofactor of a is its inverse.
    auto [g, s, t] = extended_gcd(RationalPolynomial(coeffs_), field_->modulus());
    if (g.degree() != 0) throw std::logic_error("cyclotomic modulus is not coprime to a nonzero element");
    return {field_, s.coeffs()};
}

CyclotomicNumber CyclotomicNumber::pow(unsigned exponent) const {
    CyclotomicNumber result = one();
    CyclotomicNumber base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
    const unsigned n = order();
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        const auto& basis = field_->power_basis(static_cast<unsigned>((n - k % n) % n));
        for (std::size_t j = 0; j < out.size(); ++j)
            if (!basis[j].is_zero()) out[j] += coeffs_[k] * basis[j];
    }
    return {field_, std::move(out)};
}

PrecisionComplex CyclotomicNumber::embed(long precision_bits) const {
    const long work = precision_bits + 32;
    PrecisionComplex acc(work);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        acc += PrecisionComplex::unit_root(2 * static_cast<long>(k), order(), work) * Real(coeffs_[k], work);
    }
    Real re = acc.real(), im = acc.imag();
    mpfr_prec_round(re.get(), precision_bits, MPFR_RNDN);
    mpfr_prec_round(im.get(), precision_bits, MPFR_RNDN);
    return {std::move(re), std::move(im)};
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[k].to_string();
        if (k >= 1) os << "*z";
        if (k >= 2) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

CyclotomicNumber field_cos(const std::shared_ptr<const CyclotomicField>& field, long m) {
    CyclotomicNumber r = CyclotomicNumber::zeta_power(field, m) + CyclotomicNumber::zeta_power(field, -m);
    return r *= Rational(1, 2);
}

CyclotomicNumber cyc_cos(long m, int L) { return field_cos(chain_field(L), m); }

CyclotomicNumber cyc_root_of_unity(long k, int L) {
    return CyclotomicNumber::zeta_power(chain_field(L), 2 * k);
}

}  // namespace qchain
