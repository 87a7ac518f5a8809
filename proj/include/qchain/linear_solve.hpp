#pragma once

#include "qchain/rational.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qchain {

class SingularMatrix : public std::runtime_error {
public:
    SingularMatrix(std::size_t rank, std::size_t size)
        : std::runtime_error("singular matrix: rank " + std::to_string(rank) + " < " + std::to_string(size)),
          rank_(rank) {}
    std::size_t rank() const { return rank_; }

private:
    std::size_t rank_;
};

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> apply(std::span<const Rational> x) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Rank via fraction-free elimination.
std::size_t matrix_rank(const RationalMatrix& a);

/// Exact solution of A x = b by fraction-free (Bareiss) elimination. Each
/// column's pivot is the nonzero candidate of smallest bit size, first one
/// on ties. The result is checked by substitution before it is returned.
/// Throws SingularMatrix (carrying the rank) when A is singular.
std::vector<Rational> solve_linear_system(const RationalMatrix& a, std::span<const Rational> b);

}  // namespace qchain
