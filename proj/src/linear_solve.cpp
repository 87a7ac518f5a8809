#include "qchain/linear_solve.hpp"

#include <utility>

namespace qchain {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Clears denominators row by row.
IntMatrix integer_rows(const RationalMatrix& a, std::span<const Rational> rhs) {
    IntMatrix m(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        mpz_class scale(1);
        for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(r, c).value().get_den_mpz_t());
        if (!rhs.empty()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), rhs[r].value().get_den_mpz_t());
        auto& row = m[r];
        row.reserve(a.cols() + (rhs.empty() ? 0 : 1));
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c).numerator() * (scale / a(r, c).denominator()));
        if (!rhs.empty()) row.push_back(rhs[r].numerator() * (scale / rhs[r].denominator()));
    }
    return m;
}

/// In-place fraction-free row echelon form over the first `cols` columns.
/// Returns the pivot columns in order.
std::vector<std::size_t> bareiss_echelon(IntMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.size();
    const std::size_t width = rows == 0 ? 0 : m[0].size();
    mpz_class prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const std::size_t bits = mpz_sizeinbase(m[i][c].get_mpz_t(), 2);
            if (best == rows || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == rows) continue;
        std::swap(m[r], m[best]);
        const mpz_class& piv = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const mpz_class factor = m[i][c];
            for (std::size_t j = c + 1; j < width; ++j) {
                mpz_class v = piv * m[i][j] - factor * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * x[c];
    return out;
}

std::size_t matrix_rank(const RationalMatrix& a) {
    IntMatrix m = integer_rows(a, {});
    return bareiss_echelon(m, a.cols()).size();
}

std::vector<Rational> solve_linear_system(const RationalMatrix& a, std::span<const Rational> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("solve_linear_system: matrix is not square");
    if (b.size() != n) throw std::invalid_argument("solve_linear_system: right-hand side has wrong length");

    IntMatrix m = integer_rows(a, b);
    const auto pivots = bareiss_echelon(m, n);
    if (pivots.size() < n) throw SingularMatrix(pivots.size(), n);

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != 0) acc -= Rational(m[i][j]) * x[j];
        x[i] = acc / Rational(m[i][i]);
    }

    const auto check = a.apply(x);
    for (std::size_t i = 0; i < n; ++i)
        if (check[i] != b[i]) throw std::logic_error("solve_linear_system: substitution check failed");
    return x;
}

}  // namespace qchain
