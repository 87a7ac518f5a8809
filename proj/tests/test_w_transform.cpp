#include <doctest.h>

#include "qchain/closed_forms.hpp"
#include "qchain/w_transform.hpp"

using qchain::ChainParams;
using qchain::CyclotomicNumber;
using qchain::Rational;

namespace {

using FieldPoly = std::vector<CyclotomicNumber>;

FieldPoly mul(const FieldPoly& a, const FieldPoly& b) {
    FieldPoly out(a.size() + b.size() - 1, a.front().zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

FieldPoly power(const FieldPoly& a, int n) {
    FieldPoly out{a.front().one()};
    for (int i = 0; i < n; ++i) out = mul(out, a);
    return out;
}

/// Elementary symmetric functions of the w_j, read off the monic polynomial
/// prod (w - w_j) obtained by substituting z = (w - u)/(u w - 1), u = e^{2 pi i/L},
/// into Q and clearing (u w - 1)^p.
std::vector<CyclotomicNumber> oracle_elementary(const qchain::QPolynomial& q) {
    const auto f = qchain::chain_field(q.params.L());
    const auto u = CyclotomicNumber::zeta_power(f, 2);
    const auto one = u.one();
    const int p = q.degree();
    const FieldPoly a{-u, one};       // w - u
    const FieldPoly b{-one, u};       // u w - 1
    FieldPoly acc(static_cast<std::size_t>(p + 1), one.zero());
    for (int k = 0; k <= p; ++k) {
        const Rational c = k % 2 == 0 ? q.e[k] : -q.e[k];
        const FieldPoly term = mul(power(a, p - k), power(b, k));
        for (std::size_t i = 0; i < term.size(); ++i) acc[i] += term[i] * c;
    }
    const auto lead = acc.back().inverse();
    std::vector<CyclotomicNumber> E;
    for (int alpha = 0; alpha <= p; ++alpha) {
        CyclotomicNumber c = acc[static_cast<std::size_t>(p - alpha)] * lead;
        E.push_back(alpha % 2 == 0 ? c : -c);
    }
    return E;
}

CyclotomicNumber sqrt5() { return qchain::sqrt5_in_q_zeta10(); }

}  // namespace

TEST_CASE("E1 for the smallest chains") {
    const auto f3 = qchain::chain_field(3);
    CHECK(qchain::w_sum(qchain::q_closed_form(ChainParams::make(3, 1))).E1 == CyclotomicNumber(f3, Rational(1)));
    CHECK(qchain::w_sum(qchain::q_closed_form(ChainParams::make(3, 2))).E1 ==
          CyclotomicNumber(f3, Rational(3, 2)));
    const auto s5 = sqrt5();
    CHECK((s5 * s5).rational_value() == Rational(5));
    const auto e = qchain::w_sum(qchain::q_closed_form(ChainParams::make(5, 1))).E1;
    CHECK(e == (s5.one() * Rational(5) + s5 * Rational(7)) * Rational(1, 4));
}

TEST_CASE("E1 regression values") {
    const struct {
        int L, N;
        const char* value;
    } cases[] = {{7, 1, "9.2348980185873353053"},  {7, 2, "15.599326631598470019"},
                 {9, 1, "12.958577760546714458"},  {9, 2, "21.852977748617516774"},
                 {11, 1, "16.460056525298898702"}, {11, 2, "27.713845386441891559"}};
    for (const auto& c : cases) {
        const auto E1 = qchain::w_sum(qchain::q_closed_form(ChainParams::make(c.L, c.N))).E1;
        const qchain::Real got = E1.embed(128).real();
        CHECK(qchain::abs(got - qchain::Real::parse(c.value, 128)) < qchain::Real::pow2(-55, 128));
    }
}

TEST_CASE("E_alpha agrees with the substituted polynomial") {
    for (int L : {3, 5, 7, 9})
        for (int N = 1; N <= 2; ++N) {
            const auto q = qchain::q_closed_form(ChainParams::make(L, N));
            const auto ours = qchain::w_elementary_all(q);
            const auto oracle = oracle_elementary(q);
            REQUIRE(ours.size() == oracle.size());
            for (std::size_t a = 0; a < ours.size(); ++a) CHECK(ours[a] == oracle[a]);
            CHECK(qchain::w_elementary(q, 1) == qchain::w_sum(q).E1);
        }
}

TEST_CASE("symmetry relations of the w-variables") {
    for (int L : {3, 5, 7, 9, 11})
        for (int N = 1; N <= 3; ++N) {
            const auto q = qchain::q_closed_form(ChainParams::make(L, N));
            const auto ws = qchain::w_symmetrics(q);
            const auto& E = *ws.E_alpha;
            const int p = q.degree();
            CHECK(E[0] == ws.E1.one());
            CHECK(E[static_cast<std::size_t>(p)] == ws.E1.one());
            CHECK(E[static_cast<std::size_t>(p - 1)] == ws.E1 * E[static_cast<std::size_t>(p)]);
            CHECK(ws.E1.is_real());
            CHECK(qchain::verify_inverse_sum(ws).pass);
            CHECK(qchain::verify_w_transform(q, ws).pass);
        }
}

TEST_CASE("out-of-range alpha and corrupted input") {
    const auto q = qchain::q_closed_form(ChainParams::make(5, 1));
    CHECK_THROWS_AS(qchain::w_elementary(q, -1), std::out_of_range);
    CHECK_THROWS_AS(qchain::w_elementary(q, 5), std::out_of_range);
    // Moving e_1 alone keeps E1 real but breaks the palindrome behind E_{p-1} = E_1 E_p
    const auto bad = qchain::perturbed(q, 1, Rational(1));
    CHECK(qchain::w_sum(bad).E1.is_real());
    CHECK_FALSE(qchain::verify_inverse_sum(bad).pass);
    // A Q with the pole as a root: Q(z) = z - e^{-2pi i/L} is not rational, but
    // (z^2 - 2cos(2pi/L) z + 1) vanishes there; for L = 3 this is z^2 + z + 1.
    qchain::QPolynomial pole{ChainParams::make(3, 2), {Rational(1), Rational(-1), Rational(1)}};
    CHECK_THROWS_AS(qchain::w_sum(pole), qchain::ZeroDenominator);
    CHECK_THROWS_AS(qchain::w_elementary_all(pole), qchain::ZeroDenominator);
}
