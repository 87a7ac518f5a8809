#include <doctest.h>

#include "qchain/closed_forms.hpp"
#include "qchain/energy.hpp"

using qchain::ChainParams;
using qchain::CyclotomicNumber;
using qchain::Rational;

TEST_CASE("energy of small chains") {
    const auto f3 = qchain::chain_field(3);
    CHECK(qchain::run_chain(ChainParams::make(3, 1)).summary.energy == CyclotomicNumber(f3, Rational(-3)));
    CHECK(qchain::run_chain(ChainParams::make(3, 2)).summary.energy == CyclotomicNumber(f3, Rational(-5)));
    const auto s5 = qchain::sqrt5_in_q_zeta10();
    const auto e = qchain::run_chain(ChainParams::make(5, 1)).summary.energy;
    CHECK(e == (s5.one() * Rational(3) + s5) * Rational(-3, 2));
}

TEST_CASE("energy constant is cos(2 pi / L)") {
    const auto c5 = qchain::energy_constant(5);
    CHECK((Rational(4) * c5 * c5 + Rational(2) * c5 - c5.one()).is_zero());
    CHECK(qchain::energy_constant(3) == CyclotomicNumber(qchain::chain_field(3), Rational(-1, 2)));
}

TEST_CASE("spin constant") {
    const auto a3 = qchain::extract_A(3);
    CHECK(a3.A == CyclotomicNumber(qchain::chain_field(3), Rational(1, 2)));
    CHECK(a3.anchor_holds);
    const auto a5 = qchain::extract_A(5);
    const auto s5 = qchain::sqrt5_in_q_zeta10();
    CHECK(a5.A == (s5.one() + s5) * Rational(1, 2));
    CHECK(a5.slope == (s5.one() * Rational(3) + s5 * Rational(5)) * Rational(1, 4));
    CHECK(qchain::verify_spin_constant(a5).pass);

    // The tabulated expression continued to N = 0 gives A independently.
    const auto a7 = qchain::extract_A(7);
    const auto t = qchain::tabulated_sum(7);
    REQUIRE(t);
    const qchain::Real tab = qchain::tabulated_value(*t, 0, 200);
    CHECK(qchain::abs(a7.A.embed(200).real() - tab) < qchain::Real::pow2(-130, 200));
    CHECK_THROWS_AS(qchain::extract_A(qchain::run_chain(ChainParams::make(3, 2)).summary,
                                      qchain::run_chain(ChainParams::make(3, 1)).summary),
                    std::invalid_argument);
}

TEST_CASE("linearity and constant energy density") {
    for (int L : {3, 5, 7, 9, 11}) {
        const auto lin = qchain::verify_linearity(L, 4);
        CHECK(lin.all_passed());
        CHECK(lin.entries().size() == 1 + 4 + 2);
        const auto fs = qchain::verify_no_finite_size_correction(L, 4);
        CHECK(fs.all_passed());
        CHECK(fs.entries().size() == 4);
    }
}

TEST_CASE("energy per site is the same for every N") {
    for (int L : {5, 9}) {
        const auto s = qchain::summaries_for(L, 4);
        for (const auto& x : s) {
            CHECK(x.energy_per_site == s.front().energy_per_site);
            CHECK(x.energy == x.energy_per_site * Rational(x.params.M()));
        }
    }
}

TEST_CASE("a wrong spin constant is caught") {
    auto sc = qchain::extract_A(7);
    sc.A += sc.A.one() * Rational(1, 1000);
    const auto s = qchain::summaries_for(7, 3);
    CHECK_FALSE(qchain::verify_no_finite_size_correction(sc, s).all_passed());
    CHECK_FALSE(qchain::verify_linearity(sc, s).all_passed());
}

TEST_CASE("report ordering") {
    qchain::VerificationReport r;
    r.add({"tq", 7, 2, true, "0", ""});
    r.add({"tq", 3, 1, false, "x", ""});
    r.add({"spin_constant", 3, std::nullopt, true, "0", ""});
    r.sort_entries();
    CHECK(r.entries().front().L == 3);
    CHECK(r.entries().back().L == 7);
    CHECK(r.failures() == 1);
    CHECK_FALSE(r.all_passed());
}
