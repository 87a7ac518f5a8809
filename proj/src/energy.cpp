#include "qchain/energy.hpp"

#include <stdexcept>
#include <string>

namespace qchain {

CyclotomicNumber energy_constant(int L) { return field_cos(chain_field(L), 2); }

WSummary energy(const WSymmetrics& ws) {
    if (!ws.E1.is_real()) throw std::invalid_argument("energy: E1 is not real");
    const CyclotomicNumber c = field_cos(ws.E1.field(), 2);
    CyclotomicNumber e = c * Rational(2L * ws.params.p()) - ws.E1 * Rational(2);
    CyclotomicNumber per_site = e * Rational(1, ws.params.M());
    return {ws.params, ws.E1, std::move(e), std::move(per_site)};
}

ChainResult run_chain(const ChainParams& params, QMethod method, bool with_elementary) {
    QPolynomial q = build_q(params, method);
    WSymmetrics ws = with_elementary ? w_symmetrics(q) : w_sum(q);
    WSummary summary = energy(ws);
    return {std::move(q), std::move(ws), std::move(summary)};
}

std::vector<WSummary> summaries_for(int L, int N_max) {
    std::vector<WSummary> out;
    for (int N = 1; N <= N_max; ++N) out.push_back(run_chain(ChainParams::make(L, N)).summary);
    return out;
}

SpinConstant extract_A(const WSummary& n1, const WSummary& n2) {
    if (n1.params.L() != n2.params.L() || n1.params.N() != 1 || n2.params.N() != 2)
        throw std::invalid_argument("extract_A needs the N = 1 and N = 2 results of one chain");
    const int L = n1.params.L();
    CyclotomicNumber slope = n2.E1 - n1.E1;
    CyclotomicNumber A = n1.E1 - slope;
    const bool holds = slope == A * Rational(2) + energy_constant(L) && A.is_real();
    return {L, std::move(A), std::move(slope), holds};
}

SpinConstant extract_A(int L) {
    return extract_A(run_chain(ChainParams::make(L, 1)).summary, run_chain(ChainParams::make(L, 2)).summary);
}

ReportEntry verify_spin_constant(const SpinConstant& sc) {
    ReportEntry entry{"spin_constant", sc.L, std::nullopt, sc.anchor_holds, "0",
                      "slope = 2A + cos(2pi/L) from N = 1, 2"};
    if (!sc.anchor_holds) entry.residual = (sc.slope - sc.A * Rational(2) - energy_constant(sc.L)).to_string();
    return entry;
}

VerificationReport verify_linearity(const SpinConstant& sc, std::span<const WSummary> summaries) {
    VerificationReport report;
    report.add(verify_spin_constant(sc));
    for (const auto& s : summaries) {
        const CyclotomicNumber predicted = sc.A + sc.slope * Rational(s.params.N());
        const CyclotomicNumber gap = s.E1 - predicted;
        ReportEntry entry{"linearity", sc.L, s.params.N(), gap.is_zero(), gap.is_zero() ? "0" : gap.to_string(),
                          s.params.N() <= 2 ? "fit point" : "out-of-sample prediction"};
        report.add(std::move(entry));
    }
    for (std::size_t i = 2; i < summaries.size(); ++i) {
        const CyclotomicNumber d_prev = summaries[i - 1].E1 - summaries[i - 2].E1;
        const CyclotomicNumber d_cur = summaries[i].E1 - summaries[i - 1].E1;
        const CyclotomicNumber gap = d_cur - d_prev;
        report.add({"first_difference", sc.L, summaries[i].params.N(), gap.is_zero(),
                    gap.is_zero() ? "0" : gap.to_string(), "E1(N) - E1(N-1) constant"});
    }
    return report;
}

VerificationReport verify_linearity(int L, int N_max) {
    if (N_max < 2) throw std::invalid_argument("verify_linearity needs N_max >= 2");
    const auto summaries = summaries_for(L, N_max);
    return verify_linearity(extract_A(summaries[0], summaries[1]), summaries);
}

VerificationReport verify_no_finite_size_correction(const SpinConstant& sc, std::span<const WSummary> summaries) {
    VerificationReport report;
    const CyclotomicNumber density = energy_constant(sc.L) * Rational(sc.L - 3) - sc.A * Rational(2);
    for (const auto& s : summaries) {
        const CyclotomicNumber gap = s.energy - density * Rational(s.params.M());
        std::string detail = "energy = ((L-3)cos(2pi/L) - 2A) M";
        bool pass = gap.is_zero() && s.energy.is_real() && s.energy_per_site.is_real();
        if (!summaries.empty() && s.energy_per_site != summaries.front().energy_per_site) {
            pass = false;
            detail += "; energy per site differs from N = 1";
        }
        report.add({"finite_size", sc.L, s.params.N(), pass, gap.is_zero() ? "0" : gap.to_string(), detail});
    }
    return report;
}

VerificationReport verify_no_finite_size_correction(int L, int N_max) {
    if (N_max < 2) throw std::invalid_argument("verify_no_finite_size_correction needs N_max >= 2");
    const auto summaries = summaries_for(L, N_max);
    return verify_no_finite_size_correction(extract_A(summaries[0], summaries[1]), summaries);
}

}  // namespace qchain
