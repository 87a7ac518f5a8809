#include "qchain/bethe_roots.hpp"

#include "qchain/closed_forms.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace qchain {

namespace {

using LComplex = std::complex<long double>;

/// Positive root of |a_p| x^p - sum_{i<p} |a_i| x^i.
long double cauchy_radius(const std::vector<long double>& a) {
    const std::size_t p = a.size() - 1;
    auto f = [&](long double x) {
        long double s = std::fabs(a[p]);
        for (std::size_t i = p; i-- > 0;) s = s * x - std::fabs(a[i]);
        return s;
    };
    long double lo = 0, hi = 1;
    while (f(hi) <= 0) hi *= 2;
    for (int it = 0; it < 200; ++it) {
        const long double mid = (lo + hi) / 2;
        (f(mid) > 0 ? hi : lo) = mid;
    }
    return hi;
}

/// One Gauss-Seidel Aberth sweep in extended precision; returns the largest relative correction.
double aberth_sweep(const std::vector<long double>& a, std::vector<LComplex>& z) {
    double max_rel = 0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        LComplex value = 0, deriv = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            deriv = deriv * z[j] + value;
            value = value * z[j] + a[i];
        }
        if (value == LComplex(0)) continue;
        const LComplex ratio = value / deriv;
        LComplex s = 0;
        for (std::size_t k = 0; k < z.size(); ++k)
            if (k != j) s += LComplex(1) / (z[j] - z[k]);
        const LComplex corr = ratio / (LComplex(1) - ratio * s);
        z[j] -= corr;
        max_rel = std::max(max_rel, static_cast<double>(std::abs(corr) / std::max<long double>(1, std::abs(z[j]))));
    }
    return max_rel;
}

PrecisionComplex to_precision(const LComplex& c, long bits) {
    Real re(bits), im(bits);
    mpfr_set_ld(re.get(), c.real(), MPFR_RNDN);
    mpfr_set_ld(im.get(), c.imag(), MPFR_RNDN);
    return {std::move(re), std::move(im)};
}

struct MpAberth {
    std::vector<PrecisionComplex> a;
    long bits;

    std::pair<PrecisionComplex, PrecisionComplex> eval(const PrecisionComplex& z) const {
        PrecisionComplex value(bits), deriv(bits);
        for (std::size_t i = a.size(); i-- > 0;) {
            deriv = deriv * z + value;
            value = value * z + a[i];
        }
        return {value, deriv};
    }

    /// Returns log2 of the largest relative correction in this sweep.
    long sweep(std::vector<PrecisionComplex>& z, bool newton_only) const {
        long worst = std::numeric_limits<int>::min();
        const PrecisionComplex one(Rational(1), bits);
        for (std::size_t j = 0; j < z.size(); ++j) {
            auto [value, deriv] = eval(z[j]);
            if (value.real().is_zero() && value.imag().is_zero()) continue;
            PrecisionComplex corr = value / deriv;
            if (!newton_only) {
                PrecisionComplex s(bits);
                for (std::size_t k = 0; k < z.size(); ++k)
                    if (k != j) s += (z[j] - z[k]).inverse();
                corr = corr / (one - corr * s);
            }
            z[j] -= corr;
            const Real mag = z[j].abs();
            const long scale = mag < Real(1, bits) ? 0 : mag.log2_abs() + 1;
            worst = std::max(worst, corr.abs().log2_abs() + 1 - scale);
        }
        return worst;
    }
};

PrecisionComplex zeta_pow(long numerator_over_L, int L, long bits) {
    return PrecisionComplex::unit_root(numerator_over_L, L, bits);
}

PrecisionComplex sh_eta_multiple(long k, int L, long bits) {
    // e^{k eta} with eta = -(L-1) pi i / L
    const PrecisionComplex up = zeta_pow(-k * (L - 1), L, bits);
    const PrecisionComplex down = zeta_pow(k * (L - 1), L, bits);
    return (up - down) * Real(Rational(1, 2), bits);
}

}  // namespace

Real q_abs_at(const QPolynomial& q, const PrecisionComplex& z) {
    const long bits = z.precision_bits();
    PrecisionComplex acc(bits);
    for (std::size_t k = 0; k < q.e.size(); ++k) {
        acc *= z;
        acc += PrecisionComplex(k % 2 == 0 ? q.e[k] : -q.e[k], bits);
    }
    return acc.abs();
}

RootSet find_roots(const QPolynomial& q, long precision_bits) {
    if (precision_bits < 128) throw std::invalid_argument("find_roots needs at least 128 bits");
    const long work = precision_bits + kRootGuardBits;
    const int p = q.degree();
    RootSet rs{q.params, {}, {}, precision_bits, work, Real(work), Real(work), 0};
    if (p <= 0) return rs;

    const auto poly = q.z_polynomial();  // ascending
    std::vector<long double> ld(poly.coeffs().size());
    for (std::size_t i = 0; i < ld.size(); ++i) ld[i] = static_cast<long double>(poly.coeffs()[i].to_double());

    // Warm start in extended precision.
    const long double radius = cauchy_radius(ld);
    std::mt19937_64 rng(static_cast<std::uint64_t>(q.params.L()) * 1000003ULL + static_cast<std::uint64_t>(q.params.N()));
    std::uniform_real_distribution<long double> phase(0, 2 * std::numbers::pi_v<long double>);
    const long double offset = phase(rng);
    std::vector<LComplex> zl(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j)
        zl[static_cast<std::size_t>(j)] = std::polar(radius, offset + 2 * std::numbers::pi_v<long double> * j / p);

    int iterations = 0;
    for (; iterations < kRootIterationCap; ++iterations)
        if (aberth_sweep(ld, zl) < 1e-17) break;

    // Refine at working precision.
    MpAberth mp{{}, work};
    for (const auto& c : poly.coeffs()) mp.a.emplace_back(c, work);
    std::vector<PrecisionComplex> z;
    z.reserve(zl.size());
    for (const auto& c : zl) z.push_back(to_precision(c, work));

    const long target = -(precision_bits + kRootGuardBits / 2);
    long worst = 0;
    int mp_iterations = 0;
    for (; mp_iterations < kRootIterationCap; ++mp_iterations) {
        worst = mp.sweep(z, false);
        if (worst < target) break;
    }
    if (worst >= target) {
        Real best(work);
        for (const auto& r : z) best = max(best, q_abs_at(q, r));
        throw NonConvergence("Aberth iteration did not converge for L = " + std::to_string(q.params.L()) +
                             ", N = " + std::to_string(q.params.N()) + " after " +
                             std::to_string(kRootIterationCap) + " sweeps; max |Q(z)| = " + format_gap(best));
    }
    for (int polish = 0; polish < 3; ++polish)
        if (mp.sweep(z, true) < target - 8) break;

    rs.iterations = iterations + mp_iterations;
    for (const auto& r : z) rs.max_poly_residual = max(rs.max_poly_residual, q_abs_at(q, r));
    for (const auto& r : z) rs.w_roots.push_back(z_to_w(r, q.params.L()));
    rs.z_roots = std::move(z);
    return rs;
}

PrecisionComplex z_to_w(const PrecisionComplex& z, int L) {
    const long bits = z.precision_bits();
    const PrecisionComplex c = PrecisionComplex::unit_root(-2, L, bits);  // e^{2 s eta} = e^{-2 pi i/L}
    const PrecisionComplex gap = z - c;
    if (gap.abs() < Real::pow2(-bits / 2, bits))
        throw PoleProximity("z = " + z.to_string(20) + " sits on the pole of the w map");
    return (z * c - PrecisionComplex(Rational(1), bits)) / gap;
}

PrecisionComplex w_to_z(const PrecisionComplex& w, int L) {
    const long bits = w.precision_bits();
    const PrecisionComplex c = PrecisionComplex::unit_root(2, L, bits);  // e^{-2 s eta}
    return (w - c) / (c * w - PrecisionComplex(Rational(1), bits));
}

BaeResiduals bae_residual(const RootSet& rs) {
    const long bits = rs.working_bits;
    const int L = rs.params.L();
    const unsigned M = static_cast<unsigned>(rs.params.M());
    const auto& z = rs.z_roots;
    const auto& w = rs.w_roots;
    const Real collide = Real::pow2(-bits / 2, bits);
    for (std::size_t j = 0; j < z.size(); ++j)
        for (std::size_t k = j + 1; k < z.size(); ++k)
            if ((z[j] - z[k]).abs() < collide)
                throw CoincidentRoots("roots " + std::to_string(j) + " and " + std::to_string(k) + " coincide");

    const PrecisionComplex e2s = PrecisionComplex::unit_root(-2, L, bits);
    const PrecisionComplex e2eta = PrecisionComplex::unit_root(-2L * (L - 1), L, bits);
    const PrecisionComplex sh1 = sh_eta_multiple(1, L, bits);
    const PrecisionComplex sh_plus = sh_eta_multiple(L - 1, L, bits);   // sh((2s+1) eta)
    const PrecisionComplex sh_minus = sh_eta_multiple(L - 3, L, bits);  // sh((2s-1) eta)
    const PrecisionComplex one(Rational(1), bits);

    BaeResiduals out{Real(bits), Real(bits)};
    for (std::size_t j = 0; j < z.size(); ++j) {
        const PrecisionComplex lhs_z = ((z[j] * e2s - one) / (z[j] - e2s)).pow(M);
        PrecisionComplex rhs_z = one;
        for (std::size_t k = 0; k < z.size(); ++k)
            if (k != j) rhs_z *= (z[j] * e2eta - z[k]) / (z[j] - z[k] * e2eta);
        out.z_form = max(out.z_form, (lhs_z - rhs_z).abs());

        const PrecisionComplex lhs_w = w[j].pow(M);
        PrecisionComplex rhs_w = one;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k == j) continue;
            const PrecisionComplex ww = sh1 * w[j] * w[k];
            const PrecisionComplex num = ww - sh_plus * w[j] + sh_minus * w[k] + sh1;
            const PrecisionComplex den = ww - sh_plus * w[k] + sh_minus * w[j] + sh1;
            rhs_w *= -(num / den);
        }
        out.w_form = max(out.w_form, (lhs_w - rhs_w).abs());
    }
    return out;
}

namespace {

ReportEntry numeric_entry(const RootSet& rs, std::string name, const Real& gap, long bound_bits, std::string detail) {
    const bool pass = gap < Real::pow2(-bound_bits, rs.working_bits);
    return {std::move(name), rs.params.L(), rs.params.N(), pass, format_gap(gap),
            std::move(detail) + ", bound 2^-" + std::to_string(bound_bits)};
}

}  // namespace

VerificationReport numeric_cross_check(RootSet& rs, const WSymmetrics& ws) {
    VerificationReport report;
    const long P = rs.precision_bits;
    const long bits = rs.working_bits;
    const auto& z = rs.z_roots;

    report.add(numeric_entry(rs, "roots.poly_residual", rs.max_poly_residual, P - 24,
                             "max |Q(z_j)| over " + std::to_string(z.size()) + " roots"));

    Real inversion(bits);
    for (const auto& r : z) {
        const PrecisionComplex inv = r.inverse();
        Real best = (inv - z.front()).abs();
        for (const auto& s : z) {
            Real d = (inv - s).abs();
            if (d < best) best = std::move(d);
        }
        inversion = max(inversion, best);
    }
    report.add(numeric_entry(rs, "roots.inversion", inversion, P - 40, "root multiset closed under z -> 1/z"));

    PrecisionComplex prod(Rational(1), bits);
    for (const auto& r : z) prod *= r;
    const PrecisionComplex sign(Rational(rs.params.p() % 2 == 0 ? 1 : -1), bits);
    report.add(numeric_entry(rs, "roots.product", (prod - sign).abs(), P - 40, "prod z_j = (-1)^p"));

    const BaeResiduals bae = bae_residual(rs);
    rs.max_bae_residual = bae.max();
    report.add(numeric_entry(rs, "roots.bae_z", bae.z_form, P - 40, "Bethe equations in z"));
    report.add(numeric_entry(rs, "roots.bae_w", bae.w_form, P - 40, "Bethe equations in w"));

    const PrecisionComplex exact = ws.E1.embed(bits);
    PrecisionComplex sum_w(bits), sum_inv(bits);
    for (const auto& w : rs.w_roots) {
        sum_w += w;
        sum_inv += w.inverse();
    }
    report.add(numeric_entry(rs, "roots.sum_w", (sum_w - exact).abs(), P - 40,
                             "sum w_j = " + sum_w.real().to_string(20) + " vs embed(E1)"));
    report.add(numeric_entry(rs, "roots.sum_w_inverse", (sum_inv - exact).abs(), P - 40, "sum 1/w_j vs embed(E1)"));
    return report;
}

VerificationReport verify_roots(const QPolynomial& q, const WSymmetrics& ws, long precision_bits) {
    try {
        RootSet rs = find_roots(q, precision_bits);
        return numeric_cross_check(rs, ws);
    } catch (const std::runtime_error& err) {
        VerificationReport report;
        report.add({"roots.convergence", q.params.L(), q.params.N(), false, "n/a", err.what()});
        return report;
    } catch (const std::domain_error& err) {
        VerificationReport report;
        report.add({"roots.convergence", q.params.L(), q.params.N(), false, "n/a", err.what()});
        return report;
    }
}

}  // namespace qchain
