/*
   Copyright 2026 The coringkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CORING_MATRIX_HPP
#define CORING_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace coring::lin {

/**
 * Dense row-major matrix over an exact field.
 *
 * A matrix of shape (m, n) represents the linear map k^n -> k^m acting on
 * column vectors, so column j is the image of the j-th basis vector.
 */
template <ExactField K>
class Matrix {
public:
    using value_type = typename K::value_type;

    Matrix() = default;
    Matrix(const K& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

    static Matrix identity(const K& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    static Matrix from_rows(const K& field, std::size_t cols, const std::vector<Vec<K>>& rows) {
        Matrix m(field, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error(Errc::dimension_mismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const K& field, std::size_t rows, const std::vector<Vec<K>>& cols) {
        Matrix m(field, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
        return m;
    }

    static Matrix from_ints(const K& field, std::initializer_list<std::initializer_list<long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        Matrix m(field, r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw Error(Errc::dimension_mismatch, "ragged matrix rows");
            std::size_t j = 0;
            for (long v : row) m(i, j++) = field.from_int(v);
            ++i;
        }
        return m;
    }

    const K& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const value_type> row_span(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<value_type> row_span(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    Vec<K> row(std::size_t i) const { return Vec<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    Vec<K> column(std::size_t j) const {
        Vec<K> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    void set_column(std::size_t j, const Vec<K>& v) {
        if (v.size() != rows_) throw Error(Errc::dimension_mismatch, "column length");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    void set_row(std::size_t i, const Vec<K>& v) {
        if (v.size() != cols_) throw Error(Errc::dimension_mismatch, "row length");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const auto& x = (*this)(i, j);
                if (i == j ? !field_.is_one(x) : !field_.is_zero(x)) return false;
            }
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vec<K> apply(const Vec<K>& v) const {
        if (v.size() != cols_) throw Error(Errc::dimension_mismatch, "matrix-vector shape");
        Vec<K> out(rows_, field_.zero());
        for (std::size_t j = 0; j < cols_; ++j) {
            if (field_.is_zero(v[j])) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const auto& a = (*this)(i, j);
                if (!field_.is_zero(a)) field_.add_mul(out[i], a, v[j]);
            }
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw Error(Errc::dimension_mismatch, "product of " + a.shape() + " and " + b.shape());
        const K& k = a.field_;
        Matrix c(k, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const auto& x = a(i, l);
                if (k.is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const auto& y = b(l, j);
                    if (!k.is_zero(y)) k.add_mul(c(i, j), x, y);
                }
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
        return c;
    }

    Matrix scaled(const value_type& s) const {
        Matrix c = *this;
        for (auto& x : c.data_) x = field_.mul(s, x);
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            if (!a.field_.is_zero(a.field_.sub(a.data_[i], b.data_[i]))) return false;
        return true;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m.field_.to_string(m(i, j));
            os << ']';
        }
        return os << ']';
    }

private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw Error(Errc::dimension_mismatch, "shape " + shape() + " vs " + b.shape());
    }

    K field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

template <ExactField K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b) {
    const K& k = a.field();
    Matrix<K> c(k, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& x = a(i, j);
            if (k.is_zero(x)) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    if (!k.is_zero(b(p, q))) c(i * b.rows() + p, j * b.cols() + q) = k.mul(x, b(p, q));
        }
    return c;
}

template <ExactField K>
Matrix<K> vstack(const K& k, std::size_t cols, std::span<const Matrix<K>> blocks) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw Error(Errc::dimension_mismatch, "vstack column count");
        rows += b.rows();
    }
    Matrix<K> out(k, rows, cols);
    std::size_t r = 0;
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.rows(); ++i, ++r)
            for (std::size_t j = 0; j < cols; ++j) out(r, j) = b(i, j);
    return out;
}

template <ExactField K>
Matrix<K> hstack(const K& k, std::size_t rows, std::span<const Matrix<K>> blocks) {
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw Error(Errc::dimension_mismatch, "hstack row count");
        cols += b.cols();
    }
    Matrix<K> out(k, rows, cols);
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, c0 + j) = b(i, j);
        c0 += b.cols();
    }
    return out;
}

/// Block-diagonal sum of linear maps.
template <ExactField K>
Matrix<K> direct_sum(const K& k, std::span<const Matrix<K>> blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix<K> out(k, rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

/// Column-major flattening of a matrix into a vector (the standard vec()).
template <ExactField K>
Vec<K> vectorize(const Matrix<K>& m) {
    Vec<K> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m(i, j));
    return v;
}

template <ExactField K>
Matrix<K> unvectorize(const K& k, const Vec<K>& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw Error(Errc::dimension_mismatch, "unvectorize length");
    Matrix<K> m(k, rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = v[j * rows + i];
    return m;
}

}  // namespace coring::lin

#endif  // CORING_MATRIX_HPP
