#pragma once

#include "cotanhom/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace cotanhom {

/// Dense row-major matrix of exact rationals. Zero-row and zero-column
/// matrices are ordinary values and stand for maps into or out of the zero
/// space.
class RationalMatrix {
public:
    RationalMatrix() = default;
    /// rows x cols zero matrix.
    RationalMatrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of row-major entries; throws ShapeError if the size is wrong.
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    /// Literal construction, e.g. {{1, 2}, {2, 4}}. Ragged rows throw ShapeError.
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }

    [[nodiscard]] const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
    friend std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row.
RowEchelon row_reduce(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Columns form a basis of the null space, one per free column of the
/// reduced echelon form. Result is cols x (cols - rank).
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Throws ShapeError when a.cols() != b.rows().
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& m);
/// Throws ShapeError on mismatched shapes.
RationalMatrix add(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix scale(const Rational& s, const RationalMatrix& m);
/// a * x + b * y entrywise.
RationalMatrix linear_combination(const Rational& a, const RationalMatrix& x, const Rational& b,
                                  const RationalMatrix& y);

/// Square and full rank. The 0x0 matrix is invertible.
bool is_invertible(const RationalMatrix& m);

/// Determinant by elimination; throws ShapeError for non-square input.
Rational determinant(const RationalMatrix& m);

/// Block-diagonal matrix diag(a, b).
RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b);

/// Kronecker product a (x) b.
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace cotanhom
