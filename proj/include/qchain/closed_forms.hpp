#pragma once

#include "qchain/cyclotomic.hpp"
#include "qchain/energy.hpp"
#include "qchain/precision.hpp"
#include "qchain/report.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qchain {

/// coeff * f(pi * k / d) with f one of 1, cos, sin.
struct TrigTerm {
    enum class Kind { constant, cos, sin };
    long coeff;
    Kind kind;
    int k = 0;
    int d = 1;
};

struct TrigExpression {
    std::vector<TrigTerm> terms;

    Real evaluate(long precision_bits) const;
    /// Exact value in Q(zeta_{2L}); every argument must be a multiple of pi/L or an
    /// odd multiple of pi/2L (sin(k pi/2L) = cos((L-k)/2 * pi/L)).
    CyclotomicNumber exact(int L) const;
};

struct TrigFraction {
    long scale = 1;
    TrigExpression numerator;
    TrigExpression denominator;

    Real evaluate(long precision_bits) const;
    CyclotomicNumber exact(int L) const;
};

/// Tabulated sum_j w_j = (N-1) * at_n2 + (2-N) * at_n1 for one spin.
struct TabulatedSum {
    int L;
    TrigFraction at_n2;  // weight (N-1)
    TrigFraction at_n1;  // weight (2-N)
};

/// Closed-form trigonometric expressions for L = 7, 9, 11; nullopt otherwise.
std::optional<TabulatedSum> tabulated_sum(int L);

/// Numeric value of a tabulated expression at N.
Real tabulated_value(const TabulatedSum& t, int N, long precision_bits);

/// Compares embed(E1) with the tabulated trigonometric expressions at the supplied N
/// (numeric, tolerance 2^-tolerance_bits) and, as a second route, exactly in the field.
/// For L = 3 and L = 5 compares with 1/2 + N/2 and (1+sqrt5)/2 + (3+5 sqrt5)/4 N and
/// the energies -M and -(3+sqrt5)/2 M exactly.
VerificationReport crosscheck_section4_closed_forms(int L, std::span<const WSummary> summaries,
                                                    long precision_bits = kDefaultPrecisionBits,
                                                    long tolerance_bits = 180);
VerificationReport crosscheck_section4_closed_forms(int L, long precision_bits = kDefaultPrecisionBits,
                                                    long tolerance_bits = 180);

/// True for the L values that have a known closed form to compare with.
bool has_published_closed_form(int L);

/// Exact sqrt(5) in Q(zeta_10) as 4cos(pi/5) - 1.
CyclotomicNumber sqrt5_in_q_zeta10();

/// "2^-231.4" style rendering of a nonnegative gap; "0" for zero.
std::string format_gap(const Real& gap);

}  // namespace qchain
