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

#ifndef CORING_LINALG_HPP
#define CORING_LINALG_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace coring::lin {

template <ExactField K>
struct Rref {
    Matrix<K> reduced;                // same shape as the input, zero rows last
    std::vector<std::size_t> pivots;  // strictly increasing
    std::size_t rank = 0;
};

namespace detail {

// Gauss-Jordan with pivot = first nonzero entry of the leftmost usable column.
template <ExactField K>
Rref<K> rref_generic(Matrix<K> m) {
    const K& k = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && k.is_zero(m(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        auto inv = k.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = k.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || k.is_zero(m(i, c))) continue;
            auto f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!k.is_zero(m(r, j))) k.sub_mul(m(i, j), f, m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

// Fraction-free (Bareiss) forward elimination on an integer image of the
// rows, then normalisation and back-substitution over Q.  Entries stay
// minors of the input during the forward pass.
inline Rref<Rationals> rref_rational(const Matrix<Rationals>& m) {
    const Rationals k;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            if (sgn(m(i, j)) == 0) continue;
            mpz_class t = l / m(i, j).get_den();
            a[i][j] = m(i, j).get_num() * t;
        }
    }

    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t r = 0;
    mpz_class t1, t2;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const mpz_class& p = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_mul(t1.get_mpz_t(), p.get_mpz_t(), a[i][j].get_mpz_t());
                mpz_mul(t2.get_mpz_t(), a[i][c].get_mpz_t(), a[r][j].get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                if (!mpz_divisible_p(t1.get_mpz_t(), prev.get_mpz_t()))
                    throw std::logic_error("fraction-free elimination lost exactness");
                mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = p;
        pivots.push_back(c);
        ++r;
    }

    Matrix<Rationals> out(k, rows, cols);
    for (std::size_t i = 0; i < r; ++i) {
        const mpz_class& p = a[i][pivots[i]];
        for (std::size_t j = pivots[i]; j < cols; ++j)
            if (a[i][j] != 0) {
                out(i, j) = mpq_class(a[i][j], p);
                out(i, j).canonicalize();
            }
    }
    for (std::size_t s = r; s-- > 0;) {
        std::size_t c = pivots[s];
        for (std::size_t i = 0; i < s; ++i) {
            if (sgn(out(i, c)) == 0) continue;
            mpq_class f = out(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(out(s, j)) != 0) k.sub_mul(out(i, j), f, out(s, j));
        }
    }
    return {std::move(out), std::move(pivots), r};
}

}  // namespace detail

/**
 * Builds the reduced echelon basis of a row space one row at a time.
 *
 * Rows are stored sparsely.  A fully reduced row is supported on its pivot
 * and the free columns only, so for relation systems whose quotient is small
 * the stored rows stay short no matter how large the ambient space is.
 */
template <ExactField K>
class RowReducer {
public:
    using value_type = typename K::value_type;
    using Entry = std::pair<std::size_t, value_type>;
    using SparseRow = std::vector<Entry>;

    RowReducer(const K& k, std::size_t cols)
        : field_(k), cols_(cols), where_(cols, -1), scratch_(cols, k.zero()), mark_(cols, 0) {}

    const K& field() const { return field_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool is_pivot(std::size_t c) const { return where_[c] >= 0; }

    /// Remainder of v modulo the current row space, sorted by column.
    SparseRow reduce(const SparseRow& v) const {
        const K& k = field_;
        touched_.clear();
        auto touch = [&](std::size_t c) {
            if (!mark_[c]) {
                mark_[c] = 1;
                touched_.push_back(c);
            }
        };
        for (const auto& [c, x] : v) {
            touch(c);
            k.add_to(scratch_[c], x);
        }
        for (const auto& [c, x0] : v) {
            if (where_[c] < 0) continue;
            auto x = scratch_[c];
            if (k.is_zero(x)) continue;
            for (const auto& [j, y] : rows_[static_cast<std::size_t>(where_[c])]) {
                touch(j);
                k.sub_mul(scratch_[j], x, y);
            }
        }
        std::sort(touched_.begin(), touched_.end());
        SparseRow out;
        for (auto c : touched_) {
            if (!k.is_zero(scratch_[c])) out.emplace_back(c, scratch_[c]);
            scratch_[c] = k.zero();
            mark_[c] = 0;
        }
        return out;
    }

    bool in_span(const SparseRow& v) const { return reduce(v).empty(); }
    bool in_span(const Vec<K>& v) const { return in_span(sparse(v)); }

    /// Returns true when v enlarged the row space.
    bool add(const SparseRow& v) {
        const K& k = field_;
        auto r = reduce(v);
        if (r.empty()) return false;
        const std::size_t lead = r.front().first;
        auto inv = k.inv(r.front().second);
        for (auto& e : r) e.second = k.mul(e.second, inv);
        for (auto& row : rows_) {
            auto it = std::lower_bound(row.begin(), row.end(), lead,
                                       [](const Entry& e, std::size_t c) { return e.first < c; });
            if (it == row.end() || it->first != lead) continue;
            auto x = it->second;
            row = axpy_sparse(row, x, r);
        }
        where_[lead] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(r));
        pivots_.push_back(lead);
        return true;
    }

    bool add(const Vec<K>& v) {
        if (v.size() != cols_) throw Error(Errc::dimension_mismatch, "row length");
        return add(sparse(v));
    }

    void add_rows(const Matrix<K>& m) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            SparseRow v;
            auto row = m.row_span(i);
            for (std::size_t j = 0; j < cols_; ++j)
                if (!field_.is_zero(row[j])) v.emplace_back(j, row[j]);
            if (!v.empty()) add(v);
        }
    }

    /// Indices of the stored rows ordered by pivot column.
    std::vector<std::size_t> order() const {
        std::vector<std::size_t> o(rows_.size());
        for (std::size_t i = 0; i < o.size(); ++i) o[i] = i;
        std::sort(o.begin(), o.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
        return o;
    }
    const SparseRow& stored_row(std::size_t i) const { return rows_[i]; }
    std::size_t stored_pivot(std::size_t i) const { return pivots_[i]; }

    /// The reduced basis sorted by pivot column, padded with zero rows to `rows`.
    Rref<K> finish(std::size_t rows) const {
        auto o = order();
        Matrix<K> out(field_, std::max(rows, rows_.size()), cols_);
        std::vector<std::size_t> piv;
        for (std::size_t i = 0; i < o.size(); ++i) {
            for (const auto& [j, x] : rows_[o[i]]) out(i, j) = x;
            piv.push_back(pivots_[o[i]]);
        }
        return {std::move(out), std::move(piv), rows_.size()};
    }

    SparseRow sparse(const Vec<K>& v) const {
        SparseRow s;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!field_.is_zero(v[j])) s.emplace_back(j, v[j]);
        return s;
    }

private:
    // a - x*b on sorted sparse rows
    SparseRow axpy_sparse(const SparseRow& a, const value_type& x, const SparseRow& b) const {
        const K& k = field_;
        SparseRow out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, k.neg(k.mul(x, b[j].second)));
                ++j;
            } else {
                auto v = a[i].second;
                k.sub_mul(v, x, b[j].second);
                if (!k.is_zero(v)) out.emplace_back(a[i].first, v);
                ++i;
                ++j;
            }
        }
        return out;
    }

    K field_;
    std::size_t cols_;
    std::vector<SparseRow> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<long> where_;
    mutable std::vector<value_type> scratch_;
    mutable std::vector<char> mark_;
    mutable std::vector<std::size_t> touched_;
};
/// Reduced row echelon form, pivot columns and rank.
template <ExactField K>
Rref<K> rref(const Matrix<K>& m) {
    if (m.rows() > m.cols()) {
        RowReducer<K> red(m.field(), m.cols());
        red.add_rows(m);
        return red.finish(m.rows());
    }
    if constexpr (std::is_same_v<K, Rationals>)
        return detail::rref_rational(m);
    else
        return detail::rref_generic(m);
}

template <ExactField K>
std::size_t rank(const Matrix<K>& m) {
    return rref(m).rank;
}

/**
 * Basis of the null space {v : m v = 0}, one basis vector per row, ordered
 * by the free column it is normalised on.
 */
template <ExactField K>
Matrix<K> kernel(const Matrix<K>& m) {
    const K& k = m.field();
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec<K>> rows;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<K> v(m.cols(), k.zero());
        v[f] = k.one();
        for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = k.neg(rr.reduced(i, f));
        rows.push_back(std::move(v));
    }
    return Matrix<K>::from_rows(k, m.cols(), rows);
}

/// Null space of the row space held by a reducer, one basis vector per row.
template <ExactField K>
Matrix<K> kernel(const RowReducer<K>& red) {
    const K& k = red.field();
    auto rr = red.finish(0);
    std::vector<bool> is_pivot(red.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec<K>> rows;
    for (std::size_t f = 0; f < red.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<K> v(red.cols(), k.zero());
        v[f] = k.one();
        for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = k.neg(rr.reduced(i, f));
        rows.push_back(std::move(v));
    }
    return Matrix<K>::from_rows(k, red.cols(), rows);
}

template <ExactField K>
bool is_isomorphism(const Matrix<K>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

template <ExactField K>
bool is_injective(const Matrix<K>& m) {
    return rank(m) == m.cols();
}

template <ExactField K>
bool is_surjective(const Matrix<K>& m) {
    return rank(m) == m.rows();
}

/**
 * Solves m X = b for X (b may have several columns); returns nullopt when the
 * system is inconsistent.  Free variables are set to zero.
 */
template <ExactField K>
std::optional<Matrix<K>> solve(const Matrix<K>& m, const Matrix<K>& b) {
    const K& k = m.field();
    if (m.rows() != b.rows()) throw Error(Errc::dimension_mismatch, "solve: row counts differ");
    std::vector<Matrix<K>> parts{m, b};
    auto aug = hstack<K>(k, m.rows(), parts);
    auto rr = rref(aug);
    for (std::size_t i = 0; i < rr.rank; ++i)
        if (rr.pivots[i] >= m.cols()) return std::nullopt;
    Matrix<K> x(k, m.cols(), b.cols());
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(rr.pivots[i], j) = rr.reduced(i, m.cols() + j);
    return x;
}

template <ExactField K>
std::optional<Vec<K>> solve_vec(const Matrix<K>& m, const Vec<K>& b) {
    auto x = solve(m, Matrix<K>::from_columns(m.field(), m.rows(), {b}));
    if (!x) return std::nullopt;
    return x->column(0);
}

template <ExactField K>
Matrix<K> inverse(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw Error(Errc::singular_matrix, "inverse of non-square " + m.shape());
    auto x = solve(m, Matrix<K>::identity(m.field(), m.rows()));
    if (!x || !is_isomorphism(m)) throw Error(Errc::singular_matrix, "matrix is not invertible");
    return *x;
}

/**
 * A subspace given by a reduced basis (rows of an rref).  Coordinates of a
 * member are read off the pivot positions.
 */
template <ExactField K>
class Subspace {
public:
    Subspace() = default;
    Subspace(const K& k, std::size_t ambient) : field_(k), basis_(k, 0, ambient) {}

    static Subspace span_of_rows(const Matrix<K>& rows) {
        Subspace s(rows.field(), rows.cols());
        auto rr = rref(rows);
        std::vector<Vec<K>> b;
        for (std::size_t i = 0; i < rr.rank; ++i) b.push_back(rr.reduced.row(i));
        s.basis_ = Matrix<K>::from_rows(rows.field(), rows.cols(), b);
        s.pivots_ = rr.pivots;
        return s;
    }

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return basis_.cols(); }
    const Matrix<K>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Coordinates of v in the reduced basis, or nullopt when v is not a member.
    std::optional<Vec<K>> coordinates(const Vec<K>& v) const {
        const K& k = field_;
        Vec<K> c(dim(), k.zero());
        Vec<K> rest = v;
        for (std::size_t i = 0; i < dim(); ++i) {
            c[i] = rest[pivots_[i]];
            if (k.is_zero(c[i])) continue;
            for (std::size_t j = 0; j < ambient(); ++j)
                if (!k.is_zero(basis_(i, j))) k.sub_mul(rest[j], c[i], basis_(i, j));
        }
        if (!is_zero_vec(k, rest)) return std::nullopt;
        return c;
    }

    bool contains(const Vec<K>& v) const { return coordinates(v).has_value(); }

    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

private:
    K field_{};
    Matrix<K> basis_;
    std::vector<std::size_t> pivots_;
};

/**
 * The quotient of k^ambient by the row space of a relation matrix.
 *
 * The chosen basis of the quotient is the set of non-pivot coordinates of
 * rref(relations); the section sends each quotient basis vector to the unit
 * vector of its coordinate, so project * section = id.  The projection and
 * section matrices are materialised only on request.
 */
template <ExactField K>
class QuotientSpace {
public:
    using value_type = typename K::value_type;

    QuotientSpace() = default;

    QuotientSpace(std::size_t ambient_dim, const Matrix<K>& relations) {
        if (relations.cols() != ambient_dim)
            throw Error(Errc::dimension_mismatch, "relations have " + std::to_string(relations.cols()) +
                                                      " columns, ambient is " + std::to_string(ambient_dim));
        RowReducer<K> red(relations.field(), ambient_dim);
        red.add_rows(relations);
        init(red);
    }

    /// Quotient by the row space accumulated in a reducer.
    explicit QuotientSpace(const RowReducer<K>& relations) { init(relations); }

    static QuotientSpace free(const K& k, std::size_t ambient_dim) {
        return QuotientSpace(RowReducer<K>(k, ambient_dim));
    }

    const K& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t basis_dim() const { return basis_cols_.size(); }
    std::size_t relation_rank() const { return pivots_.size(); }
    const std::vector<std::size_t>& basis_columns() const { return basis_cols_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

    /// Ambient coordinate that represents quotient basis vector b.
    std::size_t section_index(std::size_t b) const { return basis_cols_[b]; }

    /// Projection of the single ambient unit vector e_c.
    Vec<K> project_unit(std::size_t c) const {
        Vec<K> out(basis_dim(), field_.zero());
        add_project_unit(out, c, field_.one());
        return out;
    }

    /// out += x * project(e_c)
    void add_project_unit(Vec<K>& out, std::size_t c, const value_type& x) const {
        const K& k = field_;
        long w = where_[c];
        if (w >= 0) {
            for (const auto& [b, t] : tail_[static_cast<std::size_t>(w)]) k.sub_mul(out[b], x, t);
        } else {
            k.add_to(out[static_cast<std::size_t>(-w - 1)], x);
        }
    }

    Vec<K> project(const Vec<K>& v) const {
        Vec<K> out(basis_dim(), field_.zero());
        for (std::size_t c = 0; c < ambient_dim_; ++c)
            if (!field_.is_zero(v[c])) add_project_unit(out, c, v[c]);
        return out;
    }

    Vec<K> section(const Vec<K>& q) const {
        Vec<K> v(ambient_dim_, field_.zero());
        for (std::size_t b = 0; b < basis_dim(); ++b) v[basis_cols_[b]] = q[b];
        return v;
    }

    Matrix<K> project_matrix() const {
        Matrix<K> p(field_, basis_dim(), ambient_dim_);
        for (std::size_t c = 0; c < ambient_dim_; ++c) p.set_column(c, project_unit(c));
        return p;
    }

    Matrix<K> section_matrix() const {
        Matrix<K> s(field_, ambient_dim_, basis_dim());
        for (std::size_t b = 0; b < basis_dim(); ++b) s(basis_cols_[b], b) = field_.one();
        return s;
    }

    /// rref of the relations with zero rows dropped.
    Matrix<K> relations() const {
        Matrix<K> r(field_, pivots_.size(), ambient_dim_);
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            r(i, pivots_[i]) = field_.one();
            for (const auto& [b, t] : tail_[i]) r(i, basis_cols_[b]) = t;
        }
        return r;
    }

private:
    void init(const RowReducer<K>& red) {
        field_ = red.field();
        ambient_dim_ = red.cols();
        where_.assign(ambient_dim_, 0);
        auto order = red.order();
        for (std::size_t i = 0; i < order.size(); ++i) {
            pivots_.push_back(red.stored_pivot(order[i]));
            where_[pivots_.back()] = static_cast<long>(i);
        }
        std::vector<long> pos(ambient_dim_, -1);
        for (std::size_t c = 0; c < ambient_dim_; ++c)
            if (!red.is_pivot(c)) {
                pos[c] = static_cast<long>(basis_cols_.size());
                where_[c] = -static_cast<long>(basis_cols_.size()) - 1;
                basis_cols_.push_back(c);
            }
        for (std::size_t i = 0; i < order.size(); ++i) {
            std::vector<std::pair<std::size_t, value_type>> t;
            for (const auto& [c, x] : red.stored_row(order[i]))
                if (pos[c] >= 0) t.emplace_back(static_cast<std::size_t>(pos[c]), x);
            tail_.push_back(std::move(t));
        }
    }

    K field_{};
    std::size_t ambient_dim_ = 0;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> basis_cols_;
    std::vector<long> where_;  // pivot: row index; basis column b: -(b+1)
    std::vector<std::vector<std::pair<std::size_t, value_type>>> tail_;
};
template <ExactField K>
QuotientSpace<K> quotient(std::size_t ambient_dim, const Matrix<K>& relations) {
    return QuotientSpace<K>(ambient_dim, relations);
}

}  // namespace coring::lin

#endif  // CORING_LINALG_HPP
