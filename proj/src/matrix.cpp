#include "cotanhom/matrix.hpp"

#include "cotanhom/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace cotanhom {

namespace {

std::string shape_str(const RationalMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw ShapeError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " given " +
                         std::to_string(entries_.size()) + " entries");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ShapeError("ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

RowEchelon row_reduce(const RationalMatrix& m) {
    RowEchelon out{m, {}};
    auto& a = out.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < a.rows() && a(r, col).is_zero()) ++r;
        if (r == a.rows()) continue;

        if (r != pivot_row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r, c), a(pivot_row, c));

        const Rational inv = Rational(1) / a(pivot_row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;

        for (std::size_t other = 0; other < a.rows(); ++other) {
            if (other == pivot_row || a(other, col).is_zero()) continue;
            const Rational factor = a(other, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(other, c) -= factor * a(pivot_row, c);
        }
        out.pivot_columns.push_back(col);
        ++pivot_row;
    }
    return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivot_columns.size(); }

RationalMatrix kernel_basis(const RationalMatrix& m) {
    const auto ech = row_reduce(m);
    const auto& pivots = ech.pivot_columns;

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RationalMatrix basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis(f, k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -ech.reduced(i, f);
    }
    return basis;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("cannot multiply " + shape_str(a) + " by " + shape_str(b));
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

RationalMatrix transpose(const RationalMatrix& m) {
    RationalMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
    return out;
}

RationalMatrix linear_combination(const Rational& a, const RationalMatrix& x, const Rational& b,
                                  const RationalMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw ShapeError("cannot combine " + shape_str(x) + " with " + shape_str(y));
    std::vector<Rational> entries(x.entries().size());
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = a * x.entries()[i] + b * y.entries()[i];
    return {x.rows(), x.cols(), std::move(entries)};
}

RationalMatrix add(const RationalMatrix& a, const RationalMatrix& b) { return linear_combination(1, a, 1, b); }

RationalMatrix scale(const Rational& s, const RationalMatrix& m) {
    std::vector<Rational> entries = m.entries();
    for (auto& e : entries) e *= s;
    return {m.rows(), m.cols(), std::move(entries)};
}

bool is_invertible(const RationalMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

Rational determinant(const RationalMatrix& m) {
    if (!m.is_square()) throw ShapeError("determinant of non-square " + shape_str(m));
    RationalMatrix a = m;
    Rational det = 1;
    for (std::size_t col = 0; col < a.cols(); ++col) {
        std::size_t r = col;
        while (r < a.rows() && a(r, col).is_zero()) ++r;
        if (r == a.rows()) return 0;
        if (r != col) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t below = col + 1; below < a.rows(); ++below) {
            if (a(below, col).is_zero()) continue;
            const Rational factor = a(below, col) / a(col, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(below, c) -= factor * a(col, c);
        }
    }
    return det;
}

RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
    return out;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

}  // namespace cotanhom
