#pragma once

// Exact integer linear algebra: Hermite/Smith normal forms, saturated
// kernels, and integer linear solves. Everything is arbitrary precision;
// no floating point appears anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lstar {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

/// Dense matrix of arbitrary-precision integers, row major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    // row i += q * row j
    void row_axpy(std::size_t i, std::size_t j, const Int& q);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_col(std::size_t i);
    void col_axpy(std::size_t i, std::size_t j, const Int& q);

    IntMatrix transposed() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct HnfResult {
    IntMatrix h;  // row Hermite normal form
    IntMatrix u;  // unimodular, u*m == h
};

struct SnfResult {
    IntMatrix s;  // diagonal, nonnegative, divisibility chain
    IntMatrix u;  // unimodular
    IntMatrix v;  // unimodular, u*m*v == s
};

/// Row Hermite normal form by fraction-free elementary row operations:
/// row echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot).
HnfResult hnf(const IntMatrix& m);

/// Smith normal form with both transforms.
SnfResult snf(const IntMatrix& m);

/// Basis of the saturated lattice {x in Z^cols : m * x^T = 0}, one basis
/// vector per row. Rank-0 kernel gives a matrix with zero rows.
IntMatrix saturated_kernel(const IntMatrix& m);

/// Coefficients x with x * basis = target, if an integer solution exists.
std::optional<Vec> lattice_membership_solve(const IntMatrix& basis, const Vec& target);

/// General integer linear solve a * x = b (any particular solution).
std::optional<Vec> solve_integer(const IntMatrix& a, const Vec& b);

/// Exact determinant (Bareiss).
Int determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank_of(const IntMatrix& m);

/// Inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& u);

/// Unimodular matrix whose first row is the given primitive vector.
IntMatrix complete_primitive_row(const Vec& c);

// --- small vector helpers used across modules ---

Int vec_gcd(const Vec& v);
Int dot(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Int& k);
bool is_zero_vec(const Vec& v);

}  // namespace lstar
