#include "qchain/w_transform.hpp"

#include <stdexcept>
#include <string>

namespace qchain {

namespace {

Rational signed_e(const QPolynomial& q, int k) { return k % 2 == 0 ? q.e[k] : -q.e[k]; }

/// Raw double sum for E_alpha without the 1/Q(e^{-2 pi i/L}) factor:
///   sum_k sum_j (-1)^k e^{-2 pi i (k+p-alpha-2j)/L} C(p-k, p-alpha-j) C(k, j) e_k.
/// Rational weights are binned by power of zeta (mod 2L) and reduced once.
CyclotomicNumber raw_elementary_numerator(const QPolynomial& q, int alpha,
                                          const std::shared_ptr<const CyclotomicField>& field) {
    const int p = q.params.p();
    const long order = field->order();
    std::vector<Rational> bins(static_cast<std::size_t>(order));
    for (int k = 0; k <= p; ++k) {
        if (q.e[k].is_zero()) continue;
        const Rational ek = signed_e(q, k);
        for (int j = std::max(0, k - alpha); j <= std::min(k, p - alpha); ++j) {
            const mpz_class c = binomial(p - k, p - alpha - j) * binomial(k, j);
            if (c == 0) continue;
            // e^{-2 pi i m / L} = zeta^{-2m}
            const long power = -2L * (k + p - alpha - 2 * j);
            const long idx = ((power % order) + order) % order;
            bins[static_cast<std::size_t>(idx)] += ek * Rational(c);
        }
    }
    return {field, std::move(bins)};
}

}  // namespace

WSymmetrics w_sum(const QPolynomial& q) {
    const auto field = chain_field(q.params.L());
    const int p = q.params.p();
    CyclotomicNumber numerator(field, Rational());
    CyclotomicNumber denominator(field, Rational());
    // cos(pi m / L) is field_cos(m) in Q(zeta_{2L})
    for (int k = 0; k < p; ++k)
        numerator += field_cos(field, 2 * k + 2 - p) * (Rational(2 * (p - k)) * signed_e(q, k));
    for (int k = 0; k <= p; ++k) denominator += field_cos(field, p - 2 * k) * signed_e(q, k);
    if (denominator.is_zero())
        throw ZeroDenominator("Q(e^{-2 pi i/L}) = 0 for L = " + std::to_string(q.params.L()) +
                              ", N = " + std::to_string(q.params.N()));
    CyclotomicNumber E1 = numerator / denominator;
    if (!E1.is_real()) throw NonRealSum("E1 is not real: " + E1.to_string());
    return {q.params, std::move(E1), std::move(numerator), std::move(denominator), std::nullopt};
}

CyclotomicNumber w_elementary(const QPolynomial& q, int alpha) {
    const int p = q.params.p();
    if (alpha < 0 || alpha > p)
        throw std::out_of_range("alpha = " + std::to_string(alpha) + " outside [0, " + std::to_string(p) + "]");
    const auto field = chain_field(q.params.L());
    const CyclotomicNumber q_at = q_eval(q, CyclotomicNumber::zeta_power(field, -2));
    if (q_at.is_zero()) throw ZeroDenominator("Q(e^{-2 pi i/L}) = 0");
    return raw_elementary_numerator(q, alpha, field) / q_at;
}

std::vector<CyclotomicNumber> w_elementary_all(const QPolynomial& q) {
    const int p = q.params.p();
    const auto field = chain_field(q.params.L());
    const CyclotomicNumber q_at = q_eval(q, CyclotomicNumber::zeta_power(field, -2));
    if (q_at.is_zero()) throw ZeroDenominator("Q(e^{-2 pi i/L}) = 0");
    const CyclotomicNumber inv = q_at.inverse();
    std::vector<CyclotomicNumber> out;
    out.reserve(static_cast<std::size_t>(p + 1));
    for (int alpha = 0; alpha <= p; ++alpha) out.push_back(raw_elementary_numerator(q, alpha, field) * inv);
    return out;
}

WSymmetrics w_symmetrics(const QPolynomial& q) {
    WSymmetrics ws = w_sum(q);
    ws.E_alpha = w_elementary_all(q);
    return ws;
}

ReportEntry verify_inverse_sum(const WSymmetrics& ws) {
    ReportEntry entry{"inverse_sum", ws.params.L(), ws.params.N(), true, "0", "E_{p-1} = E_1 E_p"};
    if (!ws.E_alpha) throw std::invalid_argument("verify_inverse_sum needs the E_alpha list");
    const auto& E = *ws.E_alpha;
    const int p = ws.params.p();
    const CyclotomicNumber diff = E[p - 1] - E[1] * E[p];
    if (!diff.is_zero()) {
        entry.pass = false;
        entry.residual = diff.to_string();
    }
    return entry;
}

ReportEntry verify_inverse_sum(const QPolynomial& q) { return verify_inverse_sum(w_symmetrics(q)); }

ReportEntry verify_w_transform(const QPolynomial& q, const WSymmetrics& ws) {
    ReportEntry entry{"w_transform", q.params.L(), q.params.N(), true, "0", ""};
    const auto field = ws.E1.field();
    const int p = q.params.p();
    const CyclotomicNumber prefactor = CyclotomicNumber::zeta_power(field, -p);  // e^{-pi p i/L}
    const CyclotomicNumber q_at = q_eval(q, CyclotomicNumber::zeta_power(field, 2 * q.params.L() - 2));

    std::string failure;
    const CyclotomicNumber den_gap = q_at - prefactor * ws.denominator;
    const CyclotomicNumber num_gap = raw_elementary_numerator(q, 1, field) - prefactor * ws.numerator;
    const CyclotomicNumber raw_E1 = ws.E_alpha ? (*ws.E_alpha)[1] : w_elementary(q, 1);
    const CyclotomicNumber e1_gap = raw_E1 - ws.E1;
    if (!den_gap.is_zero())
        failure = "denominator prefactor: " + den_gap.to_string();
    else if (!num_gap.is_zero())
        failure = "numerator prefactor: " + num_gap.to_string();
    else if (!e1_gap.is_zero())
        failure = "double-sum E1 differs: " + e1_gap.to_string();
    else if (!ws.E1.is_real())
        failure = "E1 not real: " + (ws.E1 - ws.E1.conjugate()).to_string();
    if (ws.E_alpha && (*ws.E_alpha)[0] != ws.E1.one()) failure = "E_0 != 1";

    entry.detail = "cosine form vs double sum, prefactor e^{-pi p i/L}";
    if (!failure.empty()) {
        entry.pass = false;
        entry.residual = failure;
    }
    return entry;
}

}  // namespace qchain
