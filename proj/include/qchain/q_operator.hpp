#pragma once

#include "qchain/cyclotomic.hpp"
#include "qchain/polynomial.hpp"
#include "qchain/rational.hpp"
#include "qchain/report.hpp"

#include <string>
#include <vector>

namespace qchain {

/// Chain of M = 2N+1 sites of spin s = (L-2)/2 at the combinatorial point
/// eta = -(L-1) pi i / L, in the sector with p = N(L-2) + (L-3)/2 Bethe roots.
class ChainParams {
public:
    /// Throws std::invalid_argument unless L is odd >= 3 and N >= 1.
    static ChainParams make(int L, int N);

    int L() const { return L_; }
    int N() const { return N_; }
    int M() const { return 2 * N_ + 1; }
    int p() const { return N_ * (L_ - 2) + (L_ - 3) / 2; }
    /// (L-1)/2, the offset that recurs in the index sets and exponents.
    int half() const { return (L_ - 1) / 2; }
    /// Spin as a fraction, "3/2" etc.
    std::string spin() const { return std::to_string(L_ - 2) + "/2"; }
    std::string eta_label() const { return "-" + std::to_string(L_ - 1) + "*pi*i/" + std::to_string(L_); }

    friend bool operator==(const ChainParams&, const ChainParams&) = default;

private:
    ChainParams(int L, int N) : L_(L), N_(N) {}
    int L_, N_;
};

/// Q(z) = prod_j (z - z_j) = sum_k (-1)^k e_k z^{p-k}, stored through its
/// elementary symmetric functions e_0..e_p of the roots.
struct QPolynomial {
    ChainParams params;
    std::vector<Rational> e;

    int degree() const { return static_cast<int>(e.size()) - 1; }
    /// Q in ascending powers of z.
    RationalPolynomial z_polynomial() const;
};

enum class QMethod { closed_form, linear_system };

/// Interpolation closed form: numerator assembled from the binomial/product
/// sums (N-even and N-odd branches) and divided exactly by (z-1)^{2N+1}.
/// Throws NonzeroRemainder if the division is inexact.
QPolynomial q_closed_form(const ChainParams& params);

/// Solves the homogeneous relations sum_j C(2N+1, l-j) e_j = 0 for admissible l,
/// normalised by e_0 = 1. Throws SingularMatrix if the system degenerates.
QPolynomial q_linear_system(const ChainParams& params);

QPolynomial build_q(const ChainParams& params, QMethod method);

/// The admissible equation indices l in [0, NL + (L-1)/2] excluding Lk and Lk + (L-1)/2.
std::vector<int> admissible_equation_indices(const ChainParams& params);

/// Q(z) at a field element, by Horner.
CyclotomicNumber q_eval(const QPolynomial& q, const CyclotomicNumber& z);

/// Coefficients (ascending in z) of the three-term functional identity
///   -2cos((L-1)pi/2L) (z-1)^M Q(z)
///   + e^{(1-L)pi i/2L} (z-w)^M prod(z - w z_j) + e^{(L-1)pi i/2L} (z-w^-1)^M prod(z - w^-1 z_j),
/// w = e^{2 pi i/L}. The products are expanded from e_k, never from roots.
std::vector<CyclotomicNumber> tq_residual(const QPolynomial& q);

ReportEntry verify_tq_identity(const QPolynomial& q);

/// e_0 = 1, e_p = (-1)^p (equivalently Q(0) = 1), and e_k = (-1)^p e_{p-k}.
ReportEntry verify_structure(const QPolynomial& q);

/// Coefficient-exact agreement of two Q polynomials built for the same chain.
ReportEntry verify_cross_method(const QPolynomial& closed_form, const QPolynomial& linear_system);

/// Copy of q with e_k shifted by delta; negative-control hook.
QPolynomial perturbed(const QPolynomial& q, std::size_t k, const Rational& delta);

}  // namespace qchain
