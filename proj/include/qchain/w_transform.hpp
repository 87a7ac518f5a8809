#pragma once

#include "qchain/cyclotomic.hpp"
#include "qchain/q_operator.hpp"
#include "qchain/report.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace qchain {

/// Q(e^{-2 pi i/L}) vanished, so the Moebius normalisation is singular.
class ZeroDenominator : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The exact E1 came out non-real, which happens only for a corrupted Q.
class NonRealSum : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Symmetric functions of the w-variables w_j = (z_j e^{-2pi i/L} - 1)/(z_j - e^{-2pi i/L}).
/// numerator and denominator are the cosine sums with the common e^{-pi p i/L}
/// factor stripped, so E1 = numerator / denominator.
struct WSymmetrics {
    ChainParams params;
    CyclotomicNumber E1;
    CyclotomicNumber numerator;
    CyclotomicNumber denominator;
    std::optional<std::vector<CyclotomicNumber>> E_alpha;
};

/// E1 = sum_j w_j from the cosine forms. Throws ZeroDenominator, and
/// NonRealSum if the result fails to be real.
WSymmetrics w_sum(const QPolynomial& q);

/// E_alpha from the unsimplified double sum divided by Q(e^{-2 pi i/L}).
/// Requires 0 <= alpha <= p.
CyclotomicNumber w_elementary(const QPolynomial& q, int alpha);

/// All of E_0..E_p.
std::vector<CyclotomicNumber> w_elementary_all(const QPolynomial& q);

/// w_sum plus the full E_alpha list.
WSymmetrics w_symmetrics(const QPolynomial& q);

/// sum_j w_j = sum_j 1/w_j restated as E_{p-1} = E_1 E_p.
ReportEntry verify_inverse_sum(const QPolynomial& q);
ReportEntry verify_inverse_sum(const WSymmetrics& ws);

/// Both E1 routes agree, the e^{-pi p i/L} factors of numerator and
/// denominator are exactly as claimed, and E1 is real.
ReportEntry verify_w_transform(const QPolynomial& q, const WSymmetrics& ws);

}  // namespace qchain
