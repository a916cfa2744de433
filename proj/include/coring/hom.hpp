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

#ifndef CORING_HOM_HPP
#define CORING_HOM_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tensor.hpp"

namespace coring {

/**
 * A subspace of linear maps source -> target, each stored as a
 * target.dim x source.dim matrix and vectorised column-major.  The basis is
 * the reduced echelon basis of the subspace, so it is reproducible.
 *
 * The space also carries, built on first use, the bimodule structure (x f)(u) = x f(u) from target's left algebra and (f b)(u) = f(b u)
 * from source's left algebra.
 */
template <ExactField K>
class MapSpace {
public:
    MapSpace(BimodulePtr<K> source, BimodulePtr<K> target, lin::Subspace<K> space, std::string name)
        : source_(std::move(source)), target_(std::move(target)), space_(std::move(space)), name_(std::move(name)) {
        for (std::size_t b = 0; b < space_.dim(); ++b)
            elements_.push_back(lin::unvectorize(field(), space_.basis().row(b), target_->dim(), source_->dim()));
    }
    MapSpace(const MapSpace&) = delete;
    MapSpace& operator=(const MapSpace&) = delete;

    const Bimodule<K>& source() const { return *source_; }
    const Bimodule<K>& target() const { return *target_; }
    const BimodulePtr<K>& source_ptr() const { return source_; }
    const BimodulePtr<K>& target_ptr() const { return target_; }
    const K& field() const { return source_->field(); }
    std::size_t dim() const { return space_.dim(); }
    const lin::Subspace<K>& space() const { return space_; }
    const std::string& name() const { return name_; }

    const Matrix<K>& element(std::size_t b) const { return elements_[b]; }
    Matrix<K> element(const Vec<K>& coords) const {
        Vec<K> v(target_->dim() * source_->dim(), field().zero());
        for (std::size_t b = 0; b < dim(); ++b)
            if (!field().is_zero(coords[b])) lin::axpy(field(), v, coords[b], space_.basis().row(b));
        return lin::unvectorize(field(), v, target_->dim(), source_->dim());
    }
    std::optional<Vec<K>> coordinates(const Matrix<K>& f) const { return space_.coordinates(lin::vectorize(f)); }
    Vec<K> coords(const Matrix<K>& f) const {
        auto c = coordinates(f);
        if (!c) throw Error(Errc::precondition_failed, "map is not an element of " + name_);
        return *c;
    }
    bool contains(const Matrix<K>& f) const { return space_.contains(lin::vectorize(f)); }

    /// Evaluation f(u) for the element with the given coordinates.
    Vec<K> apply(std::size_t b, const Vec<K>& u) const { return elements_[b].apply(u); }

    /// The hom-space as a bimodule (target-left on the left, source-left on the right).
    const Bimodule<K>& as_bimodule() const {
        std::call_once(bimodule_once_, [this] { bimodule_ = share(build_bimodule()); });
        return *bimodule_;
    }
    BimodulePtr<K> bimodule_ptr() const {
        as_bimodule();
        return bimodule_;
    }

    /// Matrix of post-composition g -> h g into another map space with the same source.
    Matrix<K> post_compose(const Matrix<K>& h, const MapSpace& into) const {
        Matrix<K> m(field(), into.dim(), dim());
        for (std::size_t b = 0; b < dim(); ++b) m.set_column(b, into.coords(Matrix<K>(h * element(b))));
        return m;
    }

    /// Matrix of pre-composition g -> g h into another map space with the same target.
    Matrix<K> pre_compose(const Matrix<K>& h, const MapSpace& into) const {
        Matrix<K> m(field(), into.dim(), dim());
        for (std::size_t b = 0; b < dim(); ++b) m.set_column(b, into.coords(Matrix<K>(element(b) * h)));
        return m;
    }

    /// Matrix of the inclusion of this space into a larger one.
    Matrix<K> inclusion_into(const MapSpace& big) const {
        return pre_compose(Matrix<K>::identity(field(), source_->dim()), big);
    }

private:
    Bimodule<K> build_bimodule() const {
        std::vector<Matrix<K>> l, r;
        for (std::size_t x = 0; x < target_->left()->dim(); ++x) {
            Matrix<K> m(field(), dim(), dim());
            for (std::size_t b = 0; b < dim(); ++b) m.set_column(b, coords(Matrix<K>(target_->left_act(x) * element(b))));
            l.push_back(std::move(m));
        }
        for (std::size_t y = 0; y < source_->left()->dim(); ++y) {
            Matrix<K> m(field(), dim(), dim());
            for (std::size_t b = 0; b < dim(); ++b) m.set_column(b, coords(Matrix<K>(element(b) * source_->left_act(y))));
            r.push_back(std::move(m));
        }
        return Bimodule<K>(target_->left(), source_->left(), dim(), l, r, name_);
    }

    BimodulePtr<K> source_, target_;
    lin::Subspace<K> space_;
    std::string name_;
    std::vector<Matrix<K>> elements_;
    mutable std::once_flag bimodule_once_;
    mutable BimodulePtr<K> bimodule_;
};

template <ExactField K>
using MapSpacePtr = std::shared_ptr<const MapSpace<K>>;

namespace detail {

// Adds the constraints F S_i = T_i F (vec(F) column-major) to a reducer.
template <ExactField K>
void add_commuting_constraints(lin::RowReducer<K>& red, const std::vector<Matrix<K>>& s_acts,
                               const std::vector<Matrix<K>>& t_acts, std::size_t t_dim, std::size_t s_dim) {
    const K& k = red.field();
    using Entry = typename lin::RowReducer<K>::Entry;
    for (std::size_t a = 0; a < s_acts.size(); ++a) {
        const auto& S = s_acts[a];
        const auto& T = t_acts[a];
        for (std::size_t i = 0; i < t_dim; ++i)
            for (std::size_t j = 0; j < s_dim; ++j) {
                // (F S)_{ij} - (T F)_{ij} = sum_l F_{il} S_{lj} - T_{il} F_{lj}
                std::vector<Entry> row;
                for (std::size_t l = 0; l < s_dim; ++l)
                    if (!k.is_zero(S(l, j))) row.emplace_back(l * t_dim + i, S(l, j));
                for (std::size_t l = 0; l < t_dim; ++l)
                    if (!k.is_zero(T(i, l))) row.emplace_back(j * t_dim + l, k.neg(T(i, l)));
                std::sort(row.begin(), row.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
                std::vector<Entry> merged;
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

}  // namespace detail

/// Hom_A(M, N) for right A-modules: {f : f(x a) = f(x) a}.
template <ExactField K>
MapSpacePtr<K> hom_right_linear(const BimodulePtr<K>& m, const BimodulePtr<K>& n, std::string name = {}) {
    if (!same_algebra(m->right(), n->right()))
        throw Error(Errc::algebra_mismatch, "Hom of right modules '" + m->name() + "' and '" + n->name() +
                                                "' over different algebras");
    lin::RowReducer<K> red(m->field(), n->dim() * m->dim());
    detail::add_commuting_constraints(red, m->right_acts(), n->right_acts(), n->dim(), m->dim());
    auto space = lin::Subspace<K>::span_of_rows(lin::kernel(red));
    if (name.empty()) name = "Hom(" + m->name() + "," + n->name() + ")";
    return std::make_shared<const MapSpace<K>>(m, n, std::move(space), std::move(name));
}

/// Left-linear maps M -> N over the common left algebra.
template <ExactField K>
MapSpacePtr<K> hom_left_linear(const BimodulePtr<K>& m, const BimodulePtr<K>& n, std::string name = {}) {
    if (!same_algebra(m->left(), n->left()))
        throw Error(Errc::algebra_mismatch, "Hom of left modules '" + m->name() + "' and '" + n->name() +
                                                "' over different algebras");
    lin::RowReducer<K> red(m->field(), n->dim() * m->dim());
    detail::add_commuting_constraints(red, m->left_acts(), n->left_acts(), n->dim(), m->dim());
    auto space = lin::Subspace<K>::span_of_rows(lin::kernel(red));
    if (name.empty()) name = "LHom(" + m->name() + "," + n->name() + ")";
    return std::make_shared<const MapSpace<K>>(m, n, std::move(space), std::move(name));
}

/// Bimodule maps M -> N: left- and right-linear at once.
template <ExactField K>
MapSpacePtr<K> hom_bilinear(const BimodulePtr<K>& m, const BimodulePtr<K>& n, std::string name = {}) {
    if (!same_algebra(m->left(), n->left()) || !same_algebra(m->right(), n->right()))
        throw Error(Errc::algebra_mismatch, "Hom of bimodules '" + m->name() + "' and '" + n->name() +
                                                "' over different algebras");
    lin::RowReducer<K> red(m->field(), n->dim() * m->dim());
    detail::add_commuting_constraints(red, m->left_acts(), n->left_acts(), n->dim(), m->dim());
    detail::add_commuting_constraints(red, m->right_acts(), n->right_acts(), n->dim(), m->dim());
    auto space = lin::Subspace<K>::span_of_rows(lin::kernel(red));
    if (name.empty()) name = "BiHom(" + m->name() + "," + n->name() + ")";
    return std::make_shared<const MapSpace<K>>(m, n, std::move(space), std::move(name));
}

/// Sub-space of a map space cut out by the kernel of a linear map on coordinates.
template <ExactField K>
MapSpacePtr<K> map_subspace(const MapSpace<K>& big, const Matrix<K>& constraint, std::string name) {
    const K& k = big.field();
    auto ker = lin::kernel(constraint);  // rows: coordinate vectors in big
    std::vector<Vec<K>> rows;
    for (std::size_t i = 0; i < ker.rows(); ++i) rows.push_back(lin::vectorize(big.element(ker.row(i))));
    auto basis = Matrix<K>::from_rows(k, big.target().dim() * big.source().dim(), rows);
    return std::make_shared<const MapSpace<K>>(big.source_ptr(), big.target_ptr(),
                                               lin::Subspace<K>::span_of_rows(basis), std::move(name));
}

/// Sigma* = Hom_A(Sigma, A) with its A-B bimodule structure.
template <ExactField K>
MapSpacePtr<K> dual_module(const BimodulePtr<K>& sigma) {
    auto a = share(Bimodule<K>::regular(sigma->right()));
    return hom_right_linear(sigma, a, sigma->name() + "*");
}

/// ev : Sigma* (x)_B Sigma -> A, f (x) u -> f(u), over the chain [Sigma*, Sigma].
template <ExactField K>
Matrix<K> evaluation_map(const MapSpace<K>& dual, const TensorChain<K>& pairing) {
    return map_on_tuples(pairing, dual.target().dim(), [&](const auto& t) { return dual.apply(t[0], dual.source().basis(t[1])); });
}

}  // namespace coring

#endif  // CORING_HOM_HPP
