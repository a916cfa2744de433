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

#ifndef CORING_TENSOR_HPP
#define CORING_TENSOR_HPP

#include <algorithm>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace coring {

/**
 * M1 (x)_{A1} M2 (x)_{A2} ... (x) Mn as one flat quotient.
 *
 * The ambient space is the k-tensor product with mixed-radix coordinates
 * (first factor most significant, matching kron).  Relations are the
 * balancing vectors (x a) (x) y - x (x) (a y) at every junction, with all other
 * factors fixed to basis elements.  Quotient basis vectors are represented by
 * single basis tuples, so a quotient element lifts to a sparse sum of tuples.
 */
template <ExactField K>
class TensorChain {
public:
    using value_type = typename K::value_type;
    using Tuple = std::vector<std::size_t>;
    using Terms = std::vector<std::pair<Tuple, value_type>>;

    explicit TensorChain(std::vector<BimodulePtr<K>> factors, std::string name = {})
        : factors_(std::move(factors)), name_(std::move(name)) {
        if (factors_.empty()) throw Error(Errc::dimension_mismatch, "empty tensor product");
        const K& k = field();
        ambient_ = 1;
        for (const auto& f : factors_) dims_.push_back(f->dim());
        strides_.assign(factors_.size(), 1);
        for (std::size_t i = factors_.size(); i-- > 0;) {
            strides_[i] = ambient_;
            ambient_ *= dims_[i];
        }
        if (name_.empty())
            for (std::size_t i = 0; i < factors_.size(); ++i) name_ += (i ? "(x)" : "") + factors_[i]->name();

        lin::RowReducer<K> red(k, ambient_);
        for (std::size_t t = 0; t + 1 < factors_.size(); ++t) {
            const auto& m = *factors_[t];
            const auto& n = *factors_[t + 1];
            if (!same_algebra(m.right(), n.left()))
                throw Error(Errc::algebra_mismatch, "cannot tensor '" + m.name() + "' (right algebra '" +
                                                        m.right()->name() + "') with '" + n.name() +
                                                        "' (left algebra '" + n.left()->name() + "')");
            for (std::size_t a = 0; a < m.right()->dim(); ++a) {
                const auto& ra = m.right_act(a);
                const auto& la = n.left_act(a);
                if (acts_as_same_scalar(ra, la)) continue;
                for (std::size_t idx = 0; idx < ambient_; ++idx) {
                    Tuple tu = decode(idx);
                    std::vector<std::pair<std::size_t, value_type>> row;
                    const std::size_t x = tu[t], y = tu[t + 1];
                    for (std::size_t i = 0; i < dims_[t]; ++i)
                        if (!k.is_zero(ra(i, x))) row.emplace_back(idx + (i - x) * strides_[t], ra(i, x));
                    for (std::size_t j = 0; j < dims_[t + 1]; ++j)
                        if (!k.is_zero(la(j, y))) row.emplace_back(idx + (j - y) * strides_[t + 1], k.neg(la(j, y)));
                    if (row.empty()) continue;
                    std::sort(row.begin(), row.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
                    // merge duplicate coordinates
                    std::vector<std::pair<std::size_t, value_type>> merged;
                    for (auto& e : row) {
                        if (!merged.empty() && merged.back().first == e.first)
                            k.add_to(merged.back().second, e.second);
                        else
                            merged.push_back(std::move(e));
                    }
                    std::erase_if(merged, [&](const auto& e) { return k.is_zero(e.second); });
                    if (!merged.empty()) red.add(merged);
                }
            }
        }
        q_ = lin::QuotientSpace<K>(red);
    }

    TensorChain(const TensorChain&) = delete;
    TensorChain& operator=(const TensorChain&) = delete;

    const K& field() const { return factors_[0]->field(); }
    std::size_t arity() const { return factors_.size(); }
    const Bimodule<K>& factor(std::size_t i) const { return *factors_[i]; }
    const BimodulePtr<K>& factor_ptr(std::size_t i) const { return factors_[i]; }
    const std::vector<BimodulePtr<K>>& factors() const { return factors_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return q_.basis_dim(); }
    const lin::QuotientSpace<K>& quotient() const { return q_; }
    const std::string& name() const { return name_; }

    std::size_t encode(const Tuple& t) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < t.size(); ++i) idx += t[i] * strides_[i];
        return idx;
    }
    Tuple decode(std::size_t idx) const {
        Tuple t(dims_.size());
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            t[i] = idx / strides_[i];
            idx %= strides_[i];
        }
        return t;
    }

    /// The basis tuple representing quotient basis vector q.
    Tuple basis_tuple(std::size_t q) const { return decode(q_.section_index(q)); }

    Vec<K> zero() const { return Vec<K>(dim(), field().zero()); }

    Vec<K> pure_basis(const Tuple& t) const { return q_.project_unit(encode(t)); }

    void add_pure_basis(Vec<K>& out, const Tuple& t, const value_type& c) const {
        q_.add_project_unit(out, encode(t), c);
    }

    /// out += c * class of x1 (x) ... (x) xn
    void add_pure(Vec<K>& out, const std::vector<Vec<K>>& xs, const value_type& c) const {
        const K& k = field();
        if (xs.size() != factors_.size()) throw Error(Errc::dimension_mismatch, "pure tensor arity");
        std::vector<std::vector<std::size_t>> supp(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i].size() != dims_[i])
                throw Error(Errc::dimension_mismatch, "pure tensor factor " + std::to_string(i) + " of '" + name_ + "'");
            for (std::size_t j = 0; j < xs[i].size(); ++j)
                if (!k.is_zero(xs[i][j])) supp[i].push_back(j);
            if (supp[i].empty()) return;
        }
        Tuple pos(xs.size(), 0);
        while (true) {
            value_type coef = c;
            std::size_t idx = 0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                std::size_t j = supp[i][pos[i]];
                coef = k.mul(coef, xs[i][j]);
                idx += j * strides_[i];
            }
            q_.add_project_unit(out, idx, coef);
            std::size_t i = xs.size();
            while (i-- > 0) {
                if (++pos[i] < supp[i].size()) break;
                pos[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
    }

    Vec<K> pure(const std::vector<Vec<K>>& xs) const {
        Vec<K> out = zero();
        add_pure(out, xs, field().one());
        return out;
    }

    /// Sparse representative of a quotient element.
    Terms lift(const Vec<K>& q) const {
        Terms out;
        for (std::size_t b = 0; b < q.size(); ++b)
            if (!field().is_zero(q[b])) out.emplace_back(basis_tuple(b), q[b]);
        return out;
    }

    /// The quotient with the outer actions of the first and last factors.
    const Bimodule<K>& result() const {
        std::call_once(result_once_, [this] { build_result(); });
        return *result_;
    }
    BimodulePtr<K> result_ptr() const {
        result();
        return result_;
    }

private:
    static bool acts_as_same_scalar(const Matrix<K>& a, const Matrix<K>& b) {
        if (a.rows() == 0 || b.rows() == 0) return true;
        const K& k = a.field();
        auto s = a(0, 0);
        auto scalar = [&](const Matrix<K>& m) {
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (!k.is_zero(k.sub(m(i, j), i == j ? s : k.zero()))) return false;
            return true;
        };
        return scalar(a) && scalar(b);
    }

    void build_result() const {
        const K& k = field();
        const auto& first = *factors_.front();
        const auto& last = *factors_.back();
        const std::size_t n = factors_.size() - 1;
        std::vector<Matrix<K>> l, r;
        for (std::size_t b = 0; b < first.left()->dim(); ++b) {
            Matrix<K> m(k, dim(), dim());
            for (std::size_t q = 0; q < dim(); ++q) {
                Tuple t = basis_tuple(q);
                Vec<K> col = zero();
                const auto& act = first.left_act(b);
                for (std::size_t i = 0; i < dims_[0]; ++i) {
                    if (k.is_zero(act(i, t[0]))) continue;
                    Tuple u = t;
                    u[0] = i;
                    add_pure_basis(col, u, act(i, t[0]));
                }
                m.set_column(q, col);
            }
            l.push_back(std::move(m));
        }
        for (std::size_t a = 0; a < last.right()->dim(); ++a) {
            Matrix<K> m(k, dim(), dim());
            for (std::size_t q = 0; q < dim(); ++q) {
                Tuple t = basis_tuple(q);
                Vec<K> col = zero();
                const auto& act = last.right_act(a);
                for (std::size_t i = 0; i < dims_[n]; ++i) {
                    if (k.is_zero(act(i, t[n]))) continue;
                    Tuple u = t;
                    u[n] = i;
                    add_pure_basis(col, u, act(i, t[n]));
                }
                m.set_column(q, col);
            }
            r.push_back(std::move(m));
        }
        result_ = share(Bimodule<K>(first.left(), last.right(), dim(), l, r, name_));
    }

    std::vector<BimodulePtr<K>> factors_;
    std::string name_;
    std::vector<std::size_t> dims_, strides_;
    std::size_t ambient_ = 1;
    lin::QuotientSpace<K> q_;
    mutable std::once_flag result_once_;
    mutable BimodulePtr<K> result_;
};

template <ExactField K>
using ChainPtr = std::shared_ptr<const TensorChain<K>>;

template <ExactField K>
ChainPtr<K> chain(std::vector<BimodulePtr<K>> factors, std::string name = {}) {
    return std::make_shared<const TensorChain<K>>(std::move(factors), std::move(name));
}

/// Linear map out of a tensor chain, defined on basis tuples.
template <ExactField K, class Fn>
Matrix<K> map_on_tuples(const TensorChain<K>& src, std::size_t target_dim, Fn&& fn) {
    Matrix<K> m(src.field(), target_dim, src.dim());
    for (std::size_t q = 0; q < src.dim(); ++q) {
        Vec<K> col = fn(src.basis_tuple(q));
        if (col.size() != target_dim) throw Error(Errc::dimension_mismatch, "map out of '" + src.name() + "'");
        m.set_column(q, col);
    }
    return m;
}

/// f1 (x) ... (x) fn between two chains with matching arity.
template <ExactField K>
Matrix<K> tensor_maps(const TensorChain<K>& src, const TensorChain<K>& tgt, const std::vector<Matrix<K>>& fs) {
    if (fs.size() != src.arity() || fs.size() != tgt.arity())
        throw Error(Errc::dimension_mismatch, "tensor of maps: arity");
    return map_on_tuples(src, tgt.dim(), [&](const auto& t) {
        std::vector<Vec<K>> xs;
        for (std::size_t i = 0; i < t.size(); ++i) xs.push_back(fs[i].column(t[i]));
        return tgt.pure(xs);
    });
}

/// Identity-on-factors comparison map (e.g. between a nested and a flat chain
/// with the same factors, or between two quotients of one ambient space).
template <ExactField K>
Matrix<K> identity_comparison(const TensorChain<K>& src, const TensorChain<K>& tgt) {
    std::vector<Matrix<K>> ids;
    for (std::size_t i = 0; i < src.arity(); ++i) ids.push_back(Matrix<K>::identity(src.field(), src.factor(i).dim()));
    return tensor_maps(src, tgt, ids);
}

/**
 * Regrouping map from a flat chain to a chain whose factors are themselves
 * chain results.  groups[i] lists how many consecutive flat factors make up
 * target factor i, and inner[i] is that factor's chain (null for a plain
 * factor, in which case groups[i] must be 1).
 */
template <ExactField K>
Matrix<K> regroup(const TensorChain<K>& flat, const TensorChain<K>& nested,
                  const std::vector<const TensorChain<K>*>& inner) {
    if (inner.size() != nested.arity()) throw Error(Errc::dimension_mismatch, "regroup arity");
    return map_on_tuples(flat, nested.dim(), [&](const auto& t) {
        std::vector<Vec<K>> xs;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (!inner[i]) {
                xs.push_back(nested.factor(i).basis(t[pos++]));
                continue;
            }
            typename TensorChain<K>::Tuple sub(t.begin() + pos, t.begin() + pos + inner[i]->arity());
            pos += inner[i]->arity();
            xs.push_back(inner[i]->pure_basis(sub));
        }
        return nested.pure(xs);
    });
}

/// m (x) a -> m a on M (x)_A A.
template <ExactField K>
Matrix<K> right_multiplication_map(const TensorChain<K>& ma) {
    const auto& m = ma.factor(0);
    return map_on_tuples(ma, m.dim(), [&](const auto& t) { return m.right_act(t[1]).column(t[0]); });
}

/// a (x) m -> a m on A (x)_A M.
template <ExactField K>
Matrix<K> left_multiplication_map(const TensorChain<K>& am) {
    const auto& m = am.factor(1);
    return map_on_tuples(am, m.dim(), [&](const auto& t) { return m.left_act(t[0]).column(t[1]); });
}

}  // namespace coring

#endif  // CORING_TENSOR_HPP
