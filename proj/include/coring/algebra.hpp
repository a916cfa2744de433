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

#ifndef CORING_ALGEBRA_HPP
#define CORING_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "report.hpp"

namespace coring {

using lin::ExactField;
using lin::Matrix;
using lin::Vec;
using lin::PrimeField;
using lin::Rationals;

/**
 * Finite-dimensional associative algebra given by structure constants.
 *
 * Row i*dim+j of `mult` holds the coordinates of e_i e_j.  A unit is optional:
 * firm rings are generally non-unital and none is ever synthesised here.
 */
template <ExactField K>
class Algebra {
public:
    Algebra() = default;
    Algebra(const K& k, std::size_t dim, Matrix<K> mult, std::optional<Vec<K>> unit = {}, std::string name = {})
        : field_(k), dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)), name_(std::move(name)) {
        if (mult_.rows() != dim * dim || mult_.cols() != dim)
            throw Error(Errc::dimension_mismatch, "structure constants of '" + name_ + "' have shape " +
                                                      mult_.shape() + ", expected " + std::to_string(dim * dim) +
                                                      "x" + std::to_string(dim));
        if (unit_ && unit_->size() != dim) throw Error(Errc::dimension_mismatch, "unit of '" + name_ + "'");
    }

    const K& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const Matrix<K>& mult() const { return mult_; }
    const std::optional<Vec<K>>& unit() const { return unit_; }
    bool is_unital() const { return unit_.has_value(); }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    Vec<K> basis_product(std::size_t i, std::size_t j) const { return mult_.row(i * dim_ + j); }

    Vec<K> product(const Vec<K>& x, const Vec<K>& y) const {
        const K& k = field_;
        Vec<K> out(dim_, k.zero());
        for (std::size_t i = 0; i < dim_; ++i) {
            if (k.is_zero(x[i])) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (k.is_zero(y[j])) continue;
                auto c = k.mul(x[i], y[j]);
                auto r = mult_.row_span(i * dim_ + j);
                for (std::size_t l = 0; l < dim_; ++l)
                    if (!k.is_zero(r[l])) k.add_mul(out[l], c, r[l]);
            }
        }
        return out;
    }

    /// Matrix of x -> a x.
    Matrix<K> left_mult(const Vec<K>& a) const {
        Matrix<K> m(field_, dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, product(a, lin::unit_vec(field_, dim_, j)));
        return m;
    }

    /// Matrix of x -> x a.
    Matrix<K> right_mult(const Vec<K>& a) const {
        Matrix<K> m(field_, dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, product(lin::unit_vec(field_, dim_, j), a));
        return m;
    }

    Vec<K> basis(std::size_t i) const { return lin::unit_vec(field_, dim_, i); }

    bool same_structure(const Algebra& o) const {
        if (dim_ != o.dim_ || !(mult_ == o.mult_) || unit_.has_value() != o.unit_.has_value()) return false;
        if (unit_) {
            for (std::size_t i = 0; i < dim_; ++i)
                if (!field_.is_zero(field_.sub((*unit_)[i], (*o.unit_)[i]))) return false;
        }
        return true;
    }

    /// Solves for a two-sided identity; nullopt when the algebra has none.
    std::optional<Vec<K>> find_unit() const {
        const K& k = field_;
        Matrix<K> sys(k, 2 * dim_ * dim_, dim_);
        Matrix<K> rhs(k, 2 * dim_ * dim_, 1);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t l = 0; l < dim_; ++l) {
                for (std::size_t t = 0; t < dim_; ++t) {
                    sys(j * dim_ + t, l) = mult_(l * dim_ + j, t);
                    sys(dim_ * dim_ + j * dim_ + t, l) = mult_(j * dim_ + l, t);
                }
            }
        for (std::size_t j = 0; j < dim_; ++j) {
            rhs(j * dim_ + j, 0) = k.one();
            rhs(dim_ * dim_ + j * dim_ + j, 0) = k.one();
        }
        auto x = lin::solve(sys, rhs);
        if (!x) return std::nullopt;
        return x->column(0);
    }

    Algebra with_detected_unit() const {
        Algebra a = *this;
        a.unit_ = find_unit();
        return a;
    }

    // ---- standard algebras ------------------------------------------------

    /// The ground field as a one-dimensional algebra.
    static Algebra ground(const K& k) {
        Matrix<K> m(k, 1, 1);
        m(0, 0) = k.one();
        return Algebra(k, 1, m, Vec<K>{k.one()}, "k");
    }

    /// Full n x n matrices; basis e_ij at index i*n+j.
    static Algebra matrices(const K& k, std::size_t n) {
        std::size_t d = n * n;
        Matrix<K> m(k, d * d, d);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) m((i * n + j) * d + (j * n + l), i * n + l) = k.one();
        Vec<K> u(d, k.zero());
        for (std::size_t i = 0; i < n; ++i) u[i * n + i] = k.one();
        return Algebra(k, d, m, u, "M" + std::to_string(n));
    }

    /// Span of the given matrix units (i, j) inside M_n, which must be closed
    /// under multiplication.  Unit detected, not assumed.
    static Algebra matrix_units(const K& k, std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& units,
                                std::string name) {
        std::vector<Matrix<K>> basis;
        for (auto [i, j] : units) {
            Matrix<K> e(k, n, n);
            e(i, j) = k.one();
            basis.push_back(e);
        }
        return from_matrices(k, basis, std::move(name));
    }

    static Algebra upper_triangular(const K& k, std::size_t n) {
        std::vector<std::pair<std::size_t, std::size_t>> units;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) units.push_back({i, j});
        return matrix_units(k, n, units, "U" + std::to_string(n));
    }

    static Algebra diagonal(const K& k, std::size_t n) {
        std::vector<std::pair<std::size_t, std::size_t>> units;
        for (std::size_t i = 0; i < n; ++i) units.push_back({i, i});
        return matrix_units(k, n, units, "D" + std::to_string(n));
    }

    /// k[x]/(x^n) with basis 1, x, ..., x^{n-1}.
    static Algebra truncated_polynomials(const K& k, std::size_t n) {
        Matrix<K> m(k, n * n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; i + j < n; ++j) m(i * n + j, i + j) = k.one();
        return Algebra(k, n, m, lin::unit_vec(k, n, 0), "k[x]/(x^" + std::to_string(n) + ")");
    }

    static Algebra zero_multiplication(const K& k, std::size_t d) {
        return Algebra(k, d, Matrix<K>(k, d * d, d), std::nullopt, "zero" + std::to_string(d));
    }

    /**
     * The algebra spanned by square matrices under composition (a b = a∘b).
     * Throws precondition_failed if the span is not closed or the given
     * matrices are dependent.
     */
    static Algebra from_matrices(const K& k, const std::vector<Matrix<K>>& basis, std::string name) {
        std::size_t d = basis.size();
        std::size_t n = d ? basis[0].rows() : 0;
        std::vector<Vec<K>> cols;
        for (const auto& b : basis) cols.push_back(lin::vectorize(b));
        auto span = Matrix<K>::from_columns(k, n * n, cols);
        if (lin::rank(span) != d) throw Error(Errc::precondition_failed, "matrices spanning '" + name + "' are dependent");
        Matrix<K> m(k, d * d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                auto c = lin::solve_vec(span, lin::vectorize(Matrix<K>(basis[i] * basis[j])));
                if (!c) throw Error(Errc::precondition_failed, "span '" + name + "' is not closed under products");
                m.set_row(i * d + j, *c);
            }
        Algebra a(k, d, m, std::nullopt, std::move(name));
        return a.with_detected_unit();
    }

private:
    K field_{};
    std::size_t dim_ = 0;
    Matrix<K> mult_;
    std::optional<Vec<K>> unit_;
    std::string name_;
};

template <ExactField K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

template <ExactField K>
AlgebraPtr<K> share(Algebra<K> a) {
    return std::make_shared<const Algebra<K>>(std::move(a));
}

template <ExactField K>
bool same_algebra(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b) {
    return a == b || (a && b && a->same_structure(*b));
}

namespace detail {
inline std::string basis_name(std::size_t i) { return "e" + std::to_string(i + 1); }

template <ExactField K>
std::string vec_string(const K& k, const Vec<K>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << k.to_string(v[i]);
    os << ')';
    return os.str();
}

template <ExactField K>
bool vec_equal(const K& k, const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!k.is_zero(k.sub(a[i], b[i]))) return false;
    return true;
}

/// Collects witnesses for a report line, keeping the first few verbatim.
class Witnesses {
public:
    void add(std::string w) {
        if (kept_.size() < 6) kept_.push_back(std::move(w));
        ++count_;
    }
    bool empty() const { return count_ == 0; }
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < kept_.size(); ++i) s += (i ? "; " : "") + kept_[i];
        if (count_ > kept_.size()) s += "; ... (" + std::to_string(count_) + " total)";
        return s;
    }

private:
    std::vector<std::string> kept_;
    std::size_t count_ = 0;
};
}  // namespace detail

/// Associativity on every basis triple, and the unit laws when a unit is given.
template <ExactField K>
ValidationReport validate_algebra(const Algebra<K>& a) {
    const K& k = a.field();
    ValidationReport rep;
    detail::Witnesses bad;
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto ij = a.basis_product(i, j);
            for (std::size_t l = 0; l < d; ++l) {
                auto lhs = a.product(ij, a.basis(l));
                auto rhs = a.product(a.basis(i), a.basis_product(j, l));
                if (!detail::vec_equal(k, lhs, rhs))
                    bad.add("(" + detail::basis_name(i) + "," + detail::basis_name(j) + "," + detail::basis_name(l) + ")");
            }
        }
    rep.add(a.name() + ".associativity", bad.empty(), bad.str());
    if (a.unit()) {
        detail::Witnesses nu;
        for (std::size_t i = 0; i < d; ++i) {
            if (!detail::vec_equal(k, a.product(*a.unit(), a.basis(i)), a.basis(i)) ||
                !detail::vec_equal(k, a.product(a.basis(i), *a.unit()), a.basis(i)))
                nu.add(detail::basis_name(i));
        }
        rep.add(a.name() + ".unit", nu.empty(), nu.str());
    }
    return rep;
}

/// True when f : B -> A (columns = images of B's basis) is multiplicative.
template <ExactField K>
bool is_algebra_morphism(const Matrix<K>& f, const Algebra<K>& b, const Algebra<K>& a, std::string* witness = nullptr) {
    const K& k = a.field();
    if (f.rows() != a.dim() || f.cols() != b.dim()) throw Error(Errc::dimension_mismatch, "algebra map shape " + f.shape());
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) {
            auto lhs = f.apply(b.basis_product(i, j));
            auto rhs = a.product(f.column(i), f.column(j));
            if (!detail::vec_equal(k, lhs, rhs)) {
                if (witness) *witness = "(" + detail::basis_name(i) + "," + detail::basis_name(j) + ")";
                return false;
            }
        }
    return true;
}

/**
 * A vector space with commuting left and right actions.
 *
 * left_act(i) is the matrix of m -> b_i m for the i-th basis element of the
 * left algebra; right_act(i) is m -> m a_i.  One-sided modules use the ground
 * field on the idle side.
 */
template <ExactField K>
class Bimodule {
public:
    Bimodule() = default;
    Bimodule(AlgebraPtr<K> left, AlgebraPtr<K> right, std::size_t dim, std::vector<Matrix<K>> left_act,
             std::vector<Matrix<K>> right_act, std::string name = {})
        : left_(std::move(left)), right_(std::move(right)), dim_(dim), left_act_(std::move(left_act)),
          right_act_(std::move(right_act)), name_(std::move(name)) {
        if (left_act_.size() != left_->dim() || right_act_.size() != right_->dim())
            throw Error(Errc::dimension_mismatch, "bimodule '" + name_ + "': one action matrix per algebra basis element");
        for (const auto* acts : {&left_act_, &right_act_})
            for (const auto& m : *acts)
                if (m.rows() != dim || m.cols() != dim)
                    throw Error(Errc::dimension_mismatch, "bimodule '" + name_ + "': action matrix " + m.shape() +
                                                              " on a space of dim " + std::to_string(dim));
    }

    const K& field() const { return left_->field(); }
    std::size_t dim() const { return dim_; }
    const AlgebraPtr<K>& left() const { return left_; }
    const AlgebraPtr<K>& right() const { return right_; }
    const Matrix<K>& left_act(std::size_t i) const { return left_act_[i]; }
    const Matrix<K>& right_act(std::size_t i) const { return right_act_[i]; }
    const std::vector<Matrix<K>>& left_acts() const { return left_act_; }
    const std::vector<Matrix<K>>& right_acts() const { return right_act_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    Matrix<K> left_action(const Vec<K>& b) const { return combine(left_act_, b); }
    Matrix<K> right_action(const Vec<K>& a) const { return combine(right_act_, a); }

    Vec<K> act_left(const Vec<K>& b, const Vec<K>& m) const {
        Vec<K> out(dim_, field().zero());
        for (std::size_t i = 0; i < b.size(); ++i)
            if (!field().is_zero(b[i])) lin::axpy(field(), out, b[i], left_act_[i].apply(m));
        return out;
    }
    Vec<K> act_right(const Vec<K>& m, const Vec<K>& a) const {
        Vec<K> out(dim_, field().zero());
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!field().is_zero(a[i])) lin::axpy(field(), out, a[i], right_act_[i].apply(m));
        return out;
    }

    Vec<K> basis(std::size_t i) const { return lin::unit_vec(field(), dim_, i); }

    bool same_structure(const Bimodule& o) const {
        if (dim_ != o.dim_ || !same_algebra(left_, o.left_) || !same_algebra(right_, o.right_)) return false;
        for (std::size_t i = 0; i < left_act_.size(); ++i)
            if (!(left_act_[i] == o.left_act_[i])) return false;
        for (std::size_t i = 0; i < right_act_.size(); ++i)
            if (!(right_act_[i] == o.right_act_[i])) return false;
        return true;
    }

    // ---- standard modules -------------------------------------------------

    /// A as an A-A bimodule.
    static Bimodule regular(const AlgebraPtr<K>& a) {
        std::vector<Matrix<K>> l, r;
        for (std::size_t i = 0; i < a->dim(); ++i) {
            l.push_back(a->left_mult(a->basis(i)));
            r.push_back(a->right_mult(a->basis(i)));
        }
        return Bimodule(a, a, a->dim(), l, r, a->name());
    }

    /// A^n as a right A-module, copy-major basis (copy c, element i) -> c*dim(A)+i.
    static Bimodule free_right(const AlgebraPtr<K>& ground, const AlgebraPtr<K>& a, std::size_t n) {
        std::vector<Matrix<K>> r;
        for (std::size_t i = 0; i < a->dim(); ++i) {
            auto one = a->right_mult(a->basis(i));
            std::vector<Matrix<K>> blocks(n, one);
            r.push_back(lin::direct_sum<K>(a->field(), blocks));
        }
        return Bimodule(ground, a, n * a->dim(), trivial_acts(ground, n * a->dim()), r,
                        n == 1 ? a->name() : a->name() + "^" + std::to_string(n));
    }

    /// k^n with the ground field acting on both sides.
    static Bimodule vector_space(const AlgebraPtr<K>& ground, std::size_t n, std::string name = {}) {
        return Bimodule(ground, ground, n, trivial_acts(ground, n), trivial_acts(ground, n), std::move(name));
    }

    /// Scalar actions of a dim-1 algebra whose basis element acts as its own coefficient.
    static std::vector<Matrix<K>> trivial_acts(const AlgebraPtr<K>& ground, std::size_t n) {
        if (ground->dim() != 1) throw Error(Errc::algebra_mismatch, "trivial actions need a one-dimensional algebra");
        auto e = ground->basis_product(0, 0);
        return {Matrix<K>::identity(ground->field(), n).scaled(e[0])};
    }

private:
    Matrix<K> combine(const std::vector<Matrix<K>>& acts, const Vec<K>& c) const {
        Matrix<K> m(field(), dim_, dim_);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!field().is_zero(c[i])) m = m + acts[i].scaled(c[i]);
        return m;
    }

    AlgebraPtr<K> left_, right_;
    std::size_t dim_ = 0;
    std::vector<Matrix<K>> left_act_, right_act_;
    std::string name_;
};

template <ExactField K>
using BimodulePtr = std::shared_ptr<const Bimodule<K>>;

template <ExactField K>
BimodulePtr<K> share(Bimodule<K> m) {
    return std::make_shared<const Bimodule<K>>(std::move(m));
}

/// Action axioms on all basis triples: both actions associative, they
/// commute, and units (where present) act as the identity.
template <ExactField K>
ValidationReport validate_bimodule(const Bimodule<K>& m) {
    ValidationReport rep;
    const auto& L = *m.left();
    const auto& R = *m.right();
    const std::string n = m.name();
    detail::Witnesses la, ra, cm;
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j)
            if (!(m.left_action(L.basis_product(i, j)) == m.left_act(i) * m.left_act(j)))
                la.add("(" + detail::basis_name(i) + "," + detail::basis_name(j) + ")");
    for (std::size_t i = 0; i < R.dim(); ++i)
        for (std::size_t j = 0; j < R.dim(); ++j)
            if (!(m.right_action(R.basis_product(i, j)) == m.right_act(j) * m.right_act(i)))
                ra.add("(" + detail::basis_name(i) + "," + detail::basis_name(j) + ")");
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < R.dim(); ++j)
            if (!(m.left_act(i) * m.right_act(j) == m.right_act(j) * m.left_act(i)))
                cm.add("(" + detail::basis_name(i) + "," + detail::basis_name(j) + ")");
    rep.add(n + ".left_associative", la.empty(), la.str());
    rep.add(n + ".right_associative", ra.empty(), ra.str());
    rep.add(n + ".actions_commute", cm.empty(), cm.str());
    if (L.unit()) rep.add(n + ".left_unit", m.left_action(*L.unit()).is_identity());
    if (R.unit()) rep.add(n + ".right_unit", m.right_action(*R.unit()).is_identity());
    return rep;
}

/// f : M -> N commutes with the right actions (same right algebra).
template <ExactField K>
bool is_right_linear(const Matrix<K>& f, const Bimodule<K>& m, const Bimodule<K>& n) {
    for (std::size_t i = 0; i < m.right()->dim(); ++i)
        if (!(f * m.right_act(i) == n.right_act(i) * f)) return false;
    return true;
}

template <ExactField K>
bool is_left_linear(const Matrix<K>& f, const Bimodule<K>& m, const Bimodule<K>& n) {
    for (std::size_t i = 0; i < m.left()->dim(); ++i)
        if (!(f * m.left_act(i) == n.left_act(i) * f)) return false;
    return true;
}

template <ExactField K>
bool is_bilinear(const Matrix<K>& f, const Bimodule<K>& m, const Bimodule<K>& n) {
    return is_left_linear(f, m, n) && is_right_linear(f, m, n);
}

template <ExactField K>
Bimodule<K> direct_sum(const Bimodule<K>& a, const Bimodule<K>& b) {
    if (!same_algebra(a.left(), b.left()) || !same_algebra(a.right(), b.right()))
        throw Error(Errc::algebra_mismatch, "direct sum of '" + a.name() + "' and '" + b.name() + "'");
    const K& k = a.field();
    std::vector<Matrix<K>> l, r;
    for (std::size_t i = 0; i < a.left()->dim(); ++i) {
        std::vector<Matrix<K>> bl{a.left_act(i), b.left_act(i)};
        l.push_back(lin::direct_sum<K>(k, bl));
    }
    for (std::size_t i = 0; i < a.right()->dim(); ++i) {
        std::vector<Matrix<K>> bl{a.right_act(i), b.right_act(i)};
        r.push_back(lin::direct_sum<K>(k, bl));
    }
    return Bimodule<K>(a.left(), a.right(), a.dim() + b.dim(), l, r, a.name() + "+" + b.name());
}

/// Replaces the left algebra by the ground field (forgets the left action).
template <ExactField K>
Bimodule<K> forget_left(const Bimodule<K>& m, const AlgebraPtr<K>& ground) {
    return Bimodule<K>(ground, m.right(), m.dim(), Bimodule<K>::trivial_acts(ground, m.dim()), m.right_acts(), m.name());
}

template <ExactField K>
Bimodule<K> forget_right(const Bimodule<K>& m, const AlgebraPtr<K>& ground) {
    return Bimodule<K>(m.left(), ground, m.dim(), m.left_acts(), Bimodule<K>::trivial_acts(ground, m.dim()), m.name());
}

/// Restricts the right action along an algebra map phi : B -> right algebra.
template <ExactField K>
Bimodule<K> restrict_right(const Bimodule<K>& m, const AlgebraPtr<K>& b, const Matrix<K>& phi) {
    std::vector<Matrix<K>> r;
    for (std::size_t i = 0; i < b->dim(); ++i) r.push_back(m.right_action(phi.column(i)));
    return Bimodule<K>(m.left(), b, m.dim(), m.left_acts(), r, m.name());
}

template <ExactField K>
Bimodule<K> restrict_left(const Bimodule<K>& m, const AlgebraPtr<K>& b, const Matrix<K>& phi) {
    std::vector<Matrix<K>> l;
    for (std::size_t i = 0; i < b->dim(); ++i) l.push_back(m.left_action(phi.column(i)));
    return Bimodule<K>(b, m.right(), m.dim(), l, m.right_acts(), m.name());
}

/// Basis (as rows of a reduced echelon matrix) of the sub-bimodule generated by gens.
template <ExactField K>
lin::Subspace<K> generated_submodule(const Bimodule<K>& m, const std::vector<Vec<K>>& gens) {
    const K& k = m.field();
    lin::RowReducer<K> red(k, m.dim());
    std::vector<Vec<K>> queue;
    for (const auto& g : gens)
        if (red.add(g)) queue.push_back(g);
    while (!queue.empty()) {
        auto v = std::move(queue.back());
        queue.pop_back();
        for (const auto& acts : {&m.left_acts(), &m.right_acts()})
            for (const auto& a : *acts) {
                auto w = a.apply(v);
                if (red.add(w)) queue.push_back(std::move(w));
            }
    }
    return lin::Subspace<K>::span_of_rows(red.finish(0).reduced);
}

/// A quotient module together with its projection.
template <ExactField K>
struct QuotientModule {
    Bimodule<K> module;
    Matrix<K> projection;  // M -> M/U
    Matrix<K> section;     // M/U -> M, a linear splitting
};

template <ExactField K>
QuotientModule<K> quotient_module(const Bimodule<K>& m, const std::vector<Vec<K>>& gens, std::string name = {}) {
    auto sub = generated_submodule(m, gens);
    lin::QuotientSpace<K> q(m.dim(), sub.basis());
    auto p = q.project_matrix();
    auto s = q.section_matrix();
    std::vector<Matrix<K>> l, r;
    for (const auto& a : m.left_acts()) l.push_back(p * a * s);
    for (const auto& a : m.right_acts()) r.push_back(p * a * s);
    return {Bimodule<K>(m.left(), m.right(), q.basis_dim(), l, r, name.empty() ? m.name() + "/U" : name), p, s};
}

}  // namespace coring

#endif  // CORING_ALGEBRA_HPP
