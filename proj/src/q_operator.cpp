#include "qchain/q_operator.hpp"

#include "qchain/linear_solve.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace qchain {

ChainParams ChainParams::make(int L, int N) {
    require_chain_length(L);
    if (N < 1) throw std::invalid_argument("N must be \xE2\x89\xA5 1");
    return {L, N};
}

RationalPolynomial QPolynomial::z_polynomial() const {
    const int p = degree();
    std::vector<Rational> c(e.size());
    for (int k = 0; k <= p; ++k) c[static_cast<std::size_t>(p - k)] = k % 2 == 0 ? e[k] : -e[k];
    return RationalPolynomial(std::move(c));
}

namespace {

QPolynomial from_z_polynomial(const ChainParams& params, const RationalPolynomial& poly) {
    const long p = poly.degree();
    QPolynomial q{params, std::vector<Rational>(static_cast<std::size_t>(p + 1))};
    for (long k = 0; k <= p; ++k) {
        const Rational& c = poly.coeffs()[static_cast<std::size_t>(p - k)];
        q.e[static_cast<std::size_t>(k)] = k % 2 == 0 ? c : -c;
    }
    return q;
}

/// prod_{j=0}^N (h + Lj) / (shift - Lk + Lj)
Rational weight_product(const ChainParams& params, int shift, int k) {
    const int L = params.L(), h = params.half();
    Rational prod(1);
    for (int j = 0; j <= params.N(); ++j) {
        const long den = shift - static_cast<long>(L) * k + static_cast<long>(L) * j;
        // L odd never divides (L-1)/2, so no factor vanishes.
        if (den == 0) throw std::logic_error("vanishing denominator in closed-form weight");
        prod *= Rational(h + static_cast<long>(L) * j, den);
    }
    return prod;
}

void add_binomial_pair(std::vector<Rational>& numer, const Rational& c, int hi, int lo) {
    numer[static_cast<std::size_t>(hi)] += c;
    numer[static_cast<std::size_t>(lo)] -= c;
}

}  // namespace

QPolynomial q_closed_form(const ChainParams& params) {
    const int L = params.L(), N = params.N(), h = params.half();
    const int top = L * N + h;
    const bool even = N % 2 == 0;
    const int first_upper = even ? N / 2 : (N - 1) / 2;
    const int second_upper = even ? N / 2 - 1 : (N - 1) / 2;

    std::vector<Rational> numer(static_cast<std::size_t>(top + 1));
    for (int k = 0; k <= first_upper; ++k) {
        Rational c = Rational(binomial(N, k)) * weight_product(params, h, k);
        if (k % 2 == 1) c = -c;
        add_binomial_pair(numer, c, L * N + h - L * k, L * k);
    }
    for (int k = 0; k <= second_upper; ++k) {
        Rational c = Rational(binomial(N, k)) * weight_product(params, -h, k);
        if (k % 2 == 1) c = -c;
        add_binomial_pair(numer, c, L * N - L * k, L * k + h);
    }

    const RationalPolynomial quotient = poly_divide_exact(
        RationalPolynomial(std::move(numer)), RationalPolynomial::linear_power(Rational(1), params.M()));
    if (quotient.degree() != params.p())
        throw std::logic_error("closed-form Q has degree " + std::to_string(quotient.degree()) + ", expected " +
                               std::to_string(params.p()));
    if (quotient.leading() != Rational(1)) throw std::logic_error("closed-form Q is not monic");
    return from_z_polynomial(params, quotient);
}

std::vector<int> admissible_equation_indices(const ChainParams& params) {
    const int L = params.L(), N = params.N(), h = params.half();
    std::set<int> excluded;
    for (int k = 0; k <= N; ++k) {
        excluded.insert(L * k);
        excluded.insert(L * k + h);
    }
    std::vector<int> out;
    for (int l = 0; l <= N * L + h; ++l)
        if (!excluded.contains(l)) out.push_back(l);
    return out;
}

QPolynomial q_linear_system(const ChainParams& params) {
    const int p = params.p(), M = params.M();
    const auto rows = admissible_equation_indices(params);
    if (static_cast<int>(rows.size()) != p)
        throw std::logic_error("equation count " + std::to_string(rows.size()) + " differs from p = " +
                               std::to_string(p));

    RationalMatrix a(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
    std::vector<Rational> b(static_cast<std::size_t>(p));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int l = rows[r];
        for (int j = std::max(0, l - M); j <= std::min(p, l); ++j) {
            const Rational c(binomial(M, l - j));
            if (j == 0)
                b[r] -= c;  // e_0 = 1 moves to the right-hand side
            else
                a(r, static_cast<std::size_t>(j - 1)) += c;
        }
    }
    const auto x = solve_linear_system(a, b);
    QPolynomial q{params, {Rational(1)}};
    q.e.insert(q.e.end(), x.begin(), x.end());
    return q;
}

QPolynomial build_q(const ChainParams& params, QMethod method) {
    return method == QMethod::closed_form ? q_closed_form(params) : q_linear_system(params);
}

CyclotomicNumber q_eval(const QPolynomial& q, const CyclotomicNumber& z) {
    CyclotomicNumber acc = z.zero();
    for (std::size_t k = 0; k < q.e.size(); ++k) {
        acc *= z;
        acc += z.one() * (k % 2 == 0 ? q.e[k] : -q.e[k]);
    }
    return acc;
}

namespace {

using FieldPoly = std::vector<CyclotomicNumber>;

FieldPoly multiply(const FieldPoly& a, const FieldPoly& b) {
    FieldPoly out(a.size() + b.size() - 1, a.front().zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// (z - c)^M, ascending.
FieldPoly shifted_power(const CyclotomicNumber& c, int M) {
    FieldPoly out(static_cast<std::size_t>(M + 1), c.zero());
    CyclotomicNumber cpow = c.one();
    const CyclotomicNumber minus_c = -c;
    for (int i = 0; i <= M; ++i) {
        out[static_cast<std::size_t>(M - i)] = cpow * Rational(binomial(M, i));
        cpow *= minus_c;
    }
    return out;
}

/// prod_j (z - c z_j) = sum_k (-1)^k c^k e_k z^{p-k}, ascending.
FieldPoly scaled_q(const QPolynomial& q, const CyclotomicNumber& c) {
    const int p = q.degree();
    FieldPoly out(static_cast<std::size_t>(p + 1), c.zero());
    CyclotomicNumber cpow = c.one();
    for (int k = 0; k <= p; ++k) {
        out[static_cast<std::size_t>(p - k)] = cpow * (k % 2 == 0 ? q.e[k] : -q.e[k]);
        cpow *= c;
    }
    return out;
}

}  // namespace

std::vector<CyclotomicNumber> tq_residual(const QPolynomial& q) {
    const auto field = chain_field(q.params.L());
    const int M = q.params.M(), h = q.params.half();
    const CyclotomicNumber one(field, Rational(1));
    const CyclotomicNumber w = CyclotomicNumber::zeta_power(field, 2);
    const CyclotomicNumber w_inv = CyclotomicNumber::zeta_power(field, -2);
    // e^{+-(L-1) pi i / 2L} = zeta^{+-h} with zeta = e^{i pi / L}
    const CyclotomicNumber phase_plus = CyclotomicNumber::zeta_power(field, h);
    const CyclotomicNumber phase_minus = CyclotomicNumber::zeta_power(field, -h);
    const CyclotomicNumber middle = -(phase_plus + phase_minus);  // -2cos((L-1)pi/2L)

    FieldPoly t0 = multiply(shifted_power(one, M), scaled_q(q, one));
    FieldPoly t1 = multiply(shifted_power(w, M), scaled_q(q, w));
    FieldPoly t2 = multiply(shifted_power(w_inv, M), scaled_q(q, w_inv));
    FieldPoly sum(t0.size(), one.zero());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = middle * t0[i] + phase_minus * t1[i] + phase_plus * t2[i];
    return sum;
}

ReportEntry verify_tq_identity(const QPolynomial& q) {
    const auto residual = tq_residual(q);
    ReportEntry entry{"tq", q.params.L(), q.params.N(), true, "0", ""};
    std::ostringstream res;
    int nonzero = 0;
    for (std::size_t d = 0; d < residual.size(); ++d) {
        if (residual[d].is_zero()) continue;
        if (nonzero < 4) res << (nonzero ? "; " : "") << "z^" << d << ": " << residual[d].to_string();
        ++nonzero;
    }
    entry.detail = "formal degree " + std::to_string(residual.size() - 1);
    if (nonzero > 0) {
        entry.pass = false;
        if (nonzero > 4) res << "; ...";
        entry.residual = res.str();
        entry.detail += ", " + std::to_string(nonzero) + " nonzero coefficients";
    }
    return entry;
}

ReportEntry verify_structure(const QPolynomial& q) {
    const int p = q.params.p();
    ReportEntry entry{"structure", q.params.L(), q.params.N(), true, "0", ""};
    std::vector<std::string> problems;
    if (q.degree() != p) problems.push_back("degree " + std::to_string(q.degree()) + " != p = " + std::to_string(p));
    if (q.e.empty() || q.e.front() != Rational(1)) problems.push_back("e_0 != 1");
    const Rational sign = p % 2 == 0 ? Rational(1) : Rational(-1);
    if (q.degree() == p) {
        if (q.e.back() != sign) problems.push_back("Q(0) = " + (sign * q.e.back()).to_string() + " != 1");
        for (int k = 0; k <= p; ++k)
            if (q.e[k] != sign * q.e[p - k]) {
                problems.push_back("palindrome broken at k = " + std::to_string(k));
                break;
            }
    }
    entry.detail = "p = " + std::to_string(p);
    if (!problems.empty()) {
        entry.pass = false;
        std::string joined;
        for (const auto& s : problems) joined += (joined.empty() ? "" : "; ") + s;
        entry.residual = joined;
    }
    return entry;
}

ReportEntry verify_cross_method(const QPolynomial& closed_form, const QPolynomial& linear_system) {
    ReportEntry entry{"cross_method", closed_form.params.L(), closed_form.params.N(), true, "0", ""};
    if (closed_form.e.size() != linear_system.e.size()) {
        entry.pass = false;
        entry.residual = "degree mismatch";
        return entry;
    }
    for (std::size_t k = 0; k < closed_form.e.size(); ++k) {
        const Rational diff = closed_form.e[k] - linear_system.e[k];
        if (!diff.is_zero()) {
            entry.pass = false;
            entry.residual = "e_" + std::to_string(k) + ": " + diff.to_string();
            break;
        }
    }
    entry.detail = std::to_string(closed_form.e.size()) + " coefficients compared";
    return entry;
}

QPolynomial perturbed(const QPolynomial& q, std::size_t k, const Rational& delta) {
    QPolynomial out = q;
    out.e.at(k) += delta;
    return out;
}

}  // namespace qchain
