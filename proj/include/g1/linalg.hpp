/** @file linalg.hpp

    @brief Exact linear algebra over the rationals.

    Dense reduced row echelon forms serve the small systems (syzygies, lifts,
    edge bases). Rank of large sparse systems uses fraction-free elimination
    on primitive integer rows.
*/
#pragma once

#include "g1/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace g1 {

/// Dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Vec row(std::size_t r) const;
    void append_row(const Vec& row);

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vec a_;
};

/// Reduces m in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0}, one vector per free column, in canonical reduced form.
std::vector<Vec> nullspace(const Matrix& m);
/// A solution of m x = b with free variables set to zero, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
/// Canonical reduced echelon basis of the span of the given vectors.
std::vector<Vec> row_basis(const std::vector<Vec>& vectors, std::size_t cols);

/// Sparse row: sorted (column, value) pairs with nonzero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental fraction-free echelon form. Each inserted row is scaled to a
/// primitive integer vector and reduced against stored pivots by integer
/// cross-multiplication followed by content removal.
class SparseEchelon {
public:
    /// Adds a row; returns true iff it increased the rank.
    bool add(const SparseRow& row);
    std::size_t rank() const { return pivots_.size(); }

private:
    using IntRow = std::vector<std::pair<std::size_t, Integer>>;
    std::map<std::size_t, IntRow> pivots_;
};

} // namespace g1
