#include <doctest.h>

#include "qchain/closed_forms.hpp"

using qchain::Real;
using qchain::TrigTerm;

TEST_CASE("trigonometric expressions evaluate exactly and numerically alike") {
    // sin(pi/14) = cos(3 pi/7)
    const qchain::TrigExpression s{{{1, TrigTerm::Kind::sin, 1, 14}}};
    const qchain::TrigExpression c{{{1, TrigTerm::Kind::cos, 3, 7}}};
    CHECK(s.exact(7) == c.exact(7));
    CHECK(qchain::abs(s.evaluate(200) - c.evaluate(200)) < Real::pow2(-190, 200));
    const qchain::TrigExpression k{{{3, TrigTerm::Kind::constant}, {2, TrigTerm::Kind::cos, 2, 14}}};
    CHECK(qchain::abs(k.exact(7).embed(200).real() - k.evaluate(200)) < Real::pow2(-190, 200));
    const qchain::TrigExpression outside{{{1, TrigTerm::Kind::cos, 1, 5}}};
    CHECK_THROWS_AS(outside.exact(7), std::invalid_argument);
}

TEST_CASE("tabulated sums exist exactly for the published spins") {
    for (int L : {7, 9, 11}) CHECK(qchain::tabulated_sum(L).has_value());
    CHECK_FALSE(qchain::tabulated_sum(5).has_value());
    CHECK_FALSE(qchain::tabulated_sum(13).has_value());
    for (int L : {3, 5, 7, 9, 11}) CHECK(qchain::has_published_closed_form(L));
    CHECK_FALSE(qchain::has_published_closed_form(13));
}

TEST_CASE("tabulated values agree with the pipeline") {
    for (int L : {3, 5, 7, 9, 11}) {
        const auto report = qchain::crosscheck_section4_closed_forms(L);
        CHECK(report.all_passed());
        CHECK_FALSE(report.empty());
    }
    // the tabulated line continued to N = 3, 4 still matches
    const auto s = qchain::summaries_for(9, 4);
    CHECK(qchain::crosscheck_section4_closed_forms(9, s).all_passed());
}

TEST_CASE("a wrong E1 is rejected") {
    auto s = qchain::summaries_for(7, 2);
    s[1].E1 += s[1].E1.one() * qchain::Rational(1, 1000000);
    CHECK_FALSE(qchain::crosscheck_section4_closed_forms(7, s).all_passed());
}

TEST_CASE("sqrt 5 and gap formatting") {
    const auto r = qchain::sqrt5_in_q_zeta10();
    CHECK((r * r).rational_value() == qchain::Rational(5));
    CHECK(r.embed(64).real().to_double() > 0);
    CHECK(qchain::format_gap(Real(64)) == "0");
    CHECK(qchain::format_gap(Real::pow2(-200, 256)) == "2^-200.0");
}
