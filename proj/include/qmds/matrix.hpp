/**************************************************************************
 * matrix.hpp
 *
 * Copyright 2026 The qmds Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmds/field.hpp"

namespace qmds {

/// Dense row-major matrix over a finite field.
class Matrix {
   public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {}
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix: entry count does not match shape");
        for (auto x : data_)
            if (!field_->contains(x)) throw std::invalid_argument("matrix: entry outside field");
    }

    /// Convenience for small literal matrices; entries are element indices.
    static Matrix from_ints(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows[0].size() : 0;
        std::vector<Elem> data;
        data.reserve(r * c);
        for (const auto& row : rows) {
            if (row.size() != c) throw std::invalid_argument("matrix: ragged rows");
            for (auto x : row) data.push_back(field->from_index(x));
        }
        return Matrix(std::move(field), r, c, std::move(data));
    }

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_->one();
        return m;
    }

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    const std::vector<Elem>& data() const { return data_; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x.v == 0; });
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix select_rows(std::span<const std::size_t> idx) const {
        Matrix out(field_, idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i) std::copy_n(row(idx[i]).begin(), cols_, out.row(i).begin());
        return out;
    }

    Matrix select_cols(std::span<const std::size_t> idx) const {
        Matrix out(field_, rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
        return out;
    }

    Matrix top_rows(std::size_t k) const {
        Matrix out(field_, k, cols_);
        std::copy_n(data_.begin(), k * cols_, out.data_.begin());
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && same_field(a.field_, b.field_);
    }

   private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix: product shape mismatch");
    if (!same_field(a.field(), b.field())) throw std::invalid_argument("matrix: product over different fields");
    const Field& f = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Elem x = a(i, l);
            if (x.v == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
        }
    return out;
}

/// Rows of a stacked on top of rows of b.
inline Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("matrix: vstack width mismatch");
    std::vector<Elem> data(a.data());
    data.insert(data.end(), b.data().begin(), b.data().end());
    return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

/// Columns of a followed by columns of b.
inline Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("matrix: hstack height mismatch");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::copy_n(a.row(i).begin(), a.cols(), out.row(i).begin());
        std::copy_n(b.row(i).begin(), b.cols(), out.row(i).begin() + a.cols());
    }
    return out;
}

/// row_i <- row_i + s * row_j, restricted to columns >= from.
inline void add_scaled_row(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem s,
                           std::size_t from = 0) {
    if (s.v == 0) return;
    for (std::size_t j = from; j < dst.size(); ++j)
        if (src[j].v) dst[j] = f.add(dst[j], f.mul(s, src[j]));
}

struct RrefResult {
    Matrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination. Pivots are chosen column by column, left to
/// right, using the topmost usable row.
inline RrefResult rref_rank(Matrix m) {
    const Field& f = *m.field();
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && m(piv, col).v == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(rank).begin());
        const Elem s = f.inv(m(rank, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(rank, j) = f.mul(m(rank, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col).v == 0) continue;
            add_scaled_row(f, m.row(i), m.row(rank), f.neg(m(i, col)), col);
        }
        pivots.push_back(col);
        ++rank;
    }
    return {std::move(m), rank, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) {
    // Forward elimination only; cheaper than a full RREF.
    if (m.empty()) return 0;
    Matrix a = m;
    const Field& f = *a.field();
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, col).v == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
        const Elem s = f.neg(f.inv(a(r, col)));
        for (std::size_t i = r + 1; i < a.rows(); ++i)
            if (a(i, col).v) add_scaled_row(f, a.row(i), a.row(r), f.mul(a(i, col), s), col);
        ++r;
    }
    return r;
}

/// The nonzero rows of the RREF: a canonical basis of the row space.
inline Matrix row_space_basis(const Matrix& m) {
    auto res = rref_rank(m);
    return res.rref.top_rows(res.rank);
}

inline bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    return row_space_basis(a) == row_space_basis(b);
}

/// Basis of the right kernel {x : m x^T = 0}, one vector per row, built from
/// the free variables of the RREF in increasing column order.
inline Matrix kernel_basis(const Matrix& m) {
    const Field& f = *m.field();
    const auto res = rref_rank(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : res.pivot_cols) is_pivot[c] = true;
    Matrix ker(m.field(), m.cols() - res.rank, m.cols());
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        ker(out, free) = f.one();
        for (std::size_t i = 0; i < res.rank; ++i) ker(out, res.pivot_cols[i]) = f.neg(res.rref(i, free));
        ++out;
    }
    return ker;
}

/// Columns of the listed width-r blocks (0-based block indices), in the given order.
inline Matrix block_submatrix(const Matrix& m, std::span<const std::size_t> blocks, std::size_t r) {
    if (r == 0 || m.cols() % r != 0) throw std::invalid_argument("matrix: column count not divisible by block width");
    const std::size_t n = m.cols() / r;
    std::vector<std::size_t> cols;
    cols.reserve(blocks.size() * r);
    for (auto b : blocks) {
        if (b >= n) throw std::invalid_argument("matrix: block index " + std::to_string(b) + " out of range");
        for (std::size_t j = 0; j < r; ++j) cols.push_back(b * r + j);
    }
    return m.select_cols(cols);
}

inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix: inverse of non-square matrix");
    const auto res = rref_rank(hstack(m, Matrix::identity(m.field(), m.rows())));
    if (res.rank < m.rows() || (m.rows() && res.pivot_cols[m.rows() - 1] >= m.cols()))
        throw std::domain_error("matrix: singular");
    std::vector<std::size_t> right(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) right[j] = m.cols() + j;
    return res.rref.select_cols(right);
}

inline bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

/// Block-diagonal matrix with the given square blocks.
inline Matrix block_diagonal(const FieldPtr& field, std::span<const Matrix> blocks) {
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.rows();
    Matrix out(field, total, total);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return out;
}

}  // namespace qmds
