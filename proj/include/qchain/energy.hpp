#pragma once

#include "qchain/cyclotomic.hpp"
#include "qchain/q_operator.hpp"
#include "qchain/report.hpp"
#include "qchain/w_transform.hpp"

#include <span>
#include <vector>

namespace qchain {

/// Exact energy of the eigenstate selected by Q. The sum over Bethe roots runs
/// over the p roots:  energy = sum_j (2cos(2pi/L) - w_j - 1/w_j) = 2p cos(2pi/L) - 2 E1.
struct WSummary {
    ChainParams params;
    CyclotomicNumber E1;
    CyclotomicNumber energy;
    CyclotomicNumber energy_per_site;
};

/// E1 = A + slope * N with slope = 2A + cos(2pi/L), fitted from N = 1 and N = 2.
struct SpinConstant {
    int L = 0;
    CyclotomicNumber A;
    CyclotomicNumber slope;
    /// slope == 2A + cos(2pi/L) exactly and A is real.
    bool anchor_holds = false;
};

/// Everything the pipeline derives for one (L, N).
struct ChainResult {
    QPolynomial q;
    WSymmetrics ws;
    WSummary summary;
};

/// cos(2 pi / L) as a field element; equals ch(2 s eta) at the combinatorial point.
CyclotomicNumber energy_constant(int L);

WSummary energy(const WSymmetrics& ws);

/// Q -> w-symmetrics -> energy. `with_elementary` also fills E_alpha.
ChainResult run_chain(const ChainParams& params, QMethod method = QMethod::closed_form,
                      bool with_elementary = false);

/// Energies for N = 1..N_max.
std::vector<WSummary> summaries_for(int L, int N_max);

SpinConstant extract_A(int L);
SpinConstant extract_A(const WSummary& n1, const WSummary& n2);

ReportEntry verify_spin_constant(const SpinConstant& sc);

/// E1(N) = A + slope N for each supplied N, plus constancy of first differences.
VerificationReport verify_linearity(const SpinConstant& sc, std::span<const WSummary> summaries);
VerificationReport verify_linearity(int L, int N_max);

/// energy(N) = ((L-3)cos(2pi/L) - 2A)(2N+1) for each N, i.e. energy per site independent of N.
VerificationReport verify_no_finite_size_correction(const SpinConstant& sc, std::span<const WSummary> summaries);
VerificationReport verify_no_finite_size_correction(int L, int N_max);

}  // namespace qchain
