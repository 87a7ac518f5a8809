#pragma once

#include "qchain/precision.hpp"
#include "qchain/q_operator.hpp"
#include "qchain/report.hpp"
#include "qchain/w_transform.hpp"

#include <stdexcept>
#include <vector>

namespace qchain {

class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A root landed on the pole of the Moebius map.
class PoleProximity : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class CoincidentRoots : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Extra bits carried internally above the requested precision by the root
/// finder and the residual evaluations.
inline constexpr long kRootGuardBits = 64;
inline constexpr int kRootIterationCap = 200;

/// Numerically located Bethe roots. z_roots and w_roots are held at
/// working_bits = precision_bits + kRootGuardBits.
struct RootSet {
    ChainParams params;
    std::vector<PrecisionComplex> z_roots;
    std::vector<PrecisionComplex> w_roots;
    long precision_bits = 0;
    long working_bits = 0;
    Real max_poly_residual;
    Real max_bae_residual;
    int iterations = 0;
};

/// Aberth simultaneous iteration (long double warm start, then MPFR), initial
/// guesses on a circle of Cauchy-bound radius with a seeded random phase, Newton
/// polishing at the end. Fills z_roots, w_roots and max_poly_residual; call
/// bae_residual to fill max_bae_residual. Throws NonConvergence.
RootSet find_roots(const QPolynomial& q, long precision_bits = kDefaultPrecisionBits);

/// w = (z e^{-2 pi i/L} - 1) / (z - e^{-2 pi i/L}). Throws PoleProximity when
/// |z - e^{-2 pi i/L}| < 2^{-precision/2}.
PrecisionComplex z_to_w(const PrecisionComplex& z, int L);
/// Inverse map z = (w - e^{2 pi i/L}) / (e^{2 pi i/L} w - 1).
PrecisionComplex w_to_z(const PrecisionComplex& w, int L);

/// |Q(z)| with exact coefficients rounded once to the precision of z.
Real q_abs_at(const QPolynomial& q, const PrecisionComplex& z);

struct BaeResiduals {
    Real z_form;  // ((z_j e^{2s eta} - 1)/(z_j - e^{2s eta}))^M vs prod (z_j e^{2eta} - z_k)/(z_j - z_k e^{2eta})
    Real w_form;  // w_j^M vs prod of the sh-ratios
    Real max() const { return qchain::max(z_form, w_form); }
};

/// Max over roots of |LHS - RHS| for both forms of the Bethe equations.
/// Throws CoincidentRoots if two roots agree to half the working precision.
BaeResiduals bae_residual(const RootSet& rs);

/// Root-level checks (residuals, inversion symmetry, product of roots, Bethe
/// equations) and the numeric sum rules against embed(E1). Thresholds are
/// relative to the requested precision P: |Q(z_j)| < 2^-(P-24), the rest < 2^-(P-40).
VerificationReport numeric_cross_check(RootSet& rs, const WSymmetrics& ws);

/// find_roots + numeric_cross_check, turning NonConvergence into a failed entry.
VerificationReport verify_roots(const QPolynomial& q, const WSymmetrics& ws, long precision_bits);

}  // namespace qchain
