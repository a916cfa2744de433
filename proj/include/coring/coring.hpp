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

#ifndef CORING_CORING_HPP
#define CORING_CORING_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hom.hpp"

namespace coring {

/**
 * An A-coring: an A-bimodule C with comultiplication C -> C (x)_A C and
 * counit C -> A.  The comultiplication is stored in the quotient coordinates
 * of the chain [C, C].
 */
template <ExactField K>
class Coring {
public:
    Coring(BimodulePtr<K> carrier, Matrix<K> comult, Matrix<K> counit, std::string name = {})
        : carrier_(std::move(carrier)), comult_(std::move(comult)), counit_(std::move(counit)), name_(std::move(name)) {
        const auto& a = carrier_->left();
        if (!same_algebra(a, carrier_->right()))
            throw Error(Errc::algebra_mismatch, "coring carrier '" + carrier_->name() + "' is not an A-A bimodule");
        if (!a->is_unital()) throw Error(Errc::not_unital, "coring base algebra '" + a->name() + "' has no unit");
        if (name_.empty()) name_ = carrier_->name();
        cc_ = chain<K>({carrier_, carrier_});
        base_module_ = share(Bimodule<K>::regular(a));
        if (comult_.rows() != cc_->dim() || comult_.cols() != carrier_->dim())
            throw Error(Errc::dimension_mismatch, "comultiplication of '" + name_ + "' has shape " + comult_.shape() +
                                                      ", expected " + std::to_string(cc_->dim()) + "x" +
                                                      std::to_string(carrier_->dim()));
        if (counit_.rows() != a->dim() || counit_.cols() != carrier_->dim())
            throw Error(Errc::dimension_mismatch, "counit of '" + name_ + "' has shape " + counit_.shape());
    }

    /// Comultiplication given by ambient C (x)_k C vectors, one per basis element.
    static Coring from_ambient(BimodulePtr<K> carrier, const std::vector<Vec<K>>& comult, Matrix<K> counit,
                               std::string name = {}) {
        auto cc = chain<K>({carrier, carrier});
        Matrix<K> d(carrier->field(), cc->dim(), carrier->dim());
        if (comult.size() != carrier->dim()) throw Error(Errc::dimension_mismatch, "one comultiplication vector per basis element");
        for (std::size_t j = 0; j < comult.size(); ++j) {
            if (comult[j].size() != cc->ambient_dim())
                throw Error(Errc::dimension_mismatch, "comultiplication vector length " + std::to_string(comult[j].size()));
            d.set_column(j, cc->quotient().project(comult[j]));
        }
        return Coring(std::move(carrier), d, std::move(counit), std::move(name));
    }

    const K& field() const { return carrier_->field(); }
    const AlgebraPtr<K>& base() const { return carrier_->left(); }
    const Bimodule<K>& carrier() const { return *carrier_; }
    const BimodulePtr<K>& carrier_ptr() const { return carrier_; }
    const BimodulePtr<K>& base_module() const { return base_module_; }
    std::size_t dim() const { return carrier_->dim(); }
    const TensorChain<K>& cc() const { return *cc_; }
    const ChainPtr<K>& cc_ptr() const { return cc_; }
    const Matrix<K>& comult() const { return comult_; }
    const Matrix<K>& counit() const { return counit_; }
    const std::string& name() const { return name_; }

    const TensorChain<K>& ccc() const {
        std::call_once(lazy_->once, [this] { lazy_->ccc = chain<K>({carrier_, carrier_, carrier_}); });
        return *lazy_->ccc;
    }

    /// The trivial coring A with comultiplication a -> a (x) 1 and counit id.
    static Coring trivial(const AlgebraPtr<K>& a) {
        auto c = share(Bimodule<K>::regular(a));
        auto cc = chain<K>({c, c});
        Matrix<K> delta(a->field(), cc->dim(), a->dim());
        for (std::size_t j = 0; j < a->dim(); ++j) delta.set_column(j, cc->pure({a->basis(j), *a->unit()}));
        return Coring(c, delta, Matrix<K>::identity(a->field(), a->dim()), a->name() + "-trivial");
    }

private:
    BimodulePtr<K> carrier_;
    Matrix<K> comult_, counit_;
    std::string name_;
    ChainPtr<K> cc_;
    BimodulePtr<K> base_module_;
    struct Lazy {
        std::once_flag once;
        ChainPtr<K> ccc;
    };
    std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

template <ExactField K>
using CoringPtr = std::shared_ptr<const Coring<K>>;

template <ExactField K>
CoringPtr<K> share(Coring<K> c) {
    return std::make_shared<const Coring<K>>(std::move(c));
}

/// Right C-comodule: a module over the base algebra with coaction M -> M (x)_A C.
template <ExactField K>
class Comodule {
public:
    Comodule(CoringPtr<K> coring, BimodulePtr<K> carrier, Matrix<K> coaction, std::string name = {})
        : coring_(std::move(coring)), carrier_(std::move(carrier)), coaction_(std::move(coaction)), name_(std::move(name)) {
        if (!same_algebra(carrier_->right(), coring_->base()))
            throw Error(Errc::coring_mismatch, "comodule carrier '" + carrier_->name() + "' is not a module over the base of '" +
                                                   coring_->name() + "'");
        if (name_.empty()) name_ = carrier_->name();
        mc_ = chain<K>({carrier_, coring_->carrier_ptr()});
        if (coaction_.rows() != mc_->dim() || coaction_.cols() != carrier_->dim())
            throw Error(Errc::dimension_mismatch, "coaction of '" + name_ + "' has shape " + coaction_.shape());
    }

    static Comodule from_ambient(CoringPtr<K> coring, BimodulePtr<K> carrier, const std::vector<Vec<K>>& coaction,
                                 std::string name = {}) {
        auto mc = chain<K>({carrier, coring->carrier_ptr()});
        if (coaction.size() != carrier->dim()) throw Error(Errc::dimension_mismatch, "one coaction vector per basis element");
        Matrix<K> r(carrier->field(), mc->dim(), carrier->dim());
        for (std::size_t j = 0; j < coaction.size(); ++j) {
            if (coaction[j].size() != mc->ambient_dim())
                throw Error(Errc::dimension_mismatch, "coaction vector length " + std::to_string(coaction[j].size()));
            r.set_column(j, mc->quotient().project(coaction[j]));
        }
        return Comodule(std::move(coring), std::move(carrier), r, std::move(name));
    }

    /// C as a right comodule over itself.
    static Comodule regular(const CoringPtr<K>& c) { return Comodule(c, c->carrier_ptr(), c->comult(), c->name()); }

    const K& field() const { return carrier_->field(); }
    const Coring<K>& coring() const { return *coring_; }
    const CoringPtr<K>& coring_ptr() const { return coring_; }
    const Bimodule<K>& carrier() const { return *carrier_; }
    const BimodulePtr<K>& carrier_ptr() const { return carrier_; }
    std::size_t dim() const { return carrier_->dim(); }
    const TensorChain<K>& mc() const { return *mc_; }
    const ChainPtr<K>& mc_ptr() const { return mc_; }
    const Matrix<K>& coaction() const { return coaction_; }
    const std::string& name() const { return name_; }

private:
    CoringPtr<K> coring_;
    BimodulePtr<K> carrier_;
    Matrix<K> coaction_;
    std::string name_;
    ChainPtr<K> mc_;
};

template <ExactField K>
using ComodulePtr = std::shared_ptr<const Comodule<K>>;

template <ExactField K>
ComodulePtr<K> share(Comodule<K> c) {
    return std::make_shared<const Comodule<K>>(std::move(c));
}

namespace detail {

template <ExactField K>
std::string column_mismatches(const Matrix<K>& got, const Matrix<K>& want) {
    Witnesses w;
    for (std::size_t j = 0; j < got.cols(); ++j) {
        auto a = got.column(j), b = want.column(j);
        if (!vec_equal(got.field(), a, b)) w.add(basis_name(j) + " -> " + vec_string(got.field(), a) + " != " + vec_string(got.field(), b));
    }
    return w.str();
}

template <ExactField K>
void add_identity_check(ValidationReport& rep, const std::string& name, const Matrix<K>& got, const Matrix<K>& want) {
    bool ok = got.rows() == want.rows() && got.cols() == want.cols() && got == want;
    rep.add(name, ok, ok ? std::string{} : (got.rows() == want.rows() && got.cols() == want.cols()
                                               ? column_mismatches(got, want)
                                               : "shape " + got.shape() + " vs " + want.shape()));
}

}  // namespace detail

/// (Delta (x) C) : C (x) C -> C (x) C (x) C on basis tuples.
template <ExactField K>
Matrix<K> comult_left_leg(const Coring<K>& c, const TensorChain<K>& src, const TensorChain<K>& tgt, std::size_t pos) {
    // applies Delta to factor `pos` of src and flattens into tgt (arity + 1)
    return map_on_tuples(src, tgt.dim(), [&](const auto& t) {
        Vec<K> out = tgt.zero();
        for (const auto& [xy, coef] : c.cc().lift(c.comult().column(t[pos]))) {
            typename TensorChain<K>::Tuple u;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (i == pos) {
                    u.push_back(xy[0]);
                    u.push_back(xy[1]);
                } else {
                    u.push_back(t[i]);
                }
            }
            tgt.add_pure_basis(out, u, coef);
        }
        return out;
    });
}

/// Coring axioms: bilinearity of Delta and epsilon, coassociativity in C(x)C(x)C,
/// and both counit laws.
template <ExactField K>
ValidationReport validate_coring(const Coring<K>& c) {
    ValidationReport rep;
    const std::string n = c.name();
    const auto& C = c.carrier();
    const auto& A = *c.base();
    const auto& cc = c.cc();
    const auto& ccr = cc.result();
    const auto& Ar = *c.base_module();

    bool dl = true, dr = true, el = true, er = true;
    for (std::size_t a = 0; a < A.dim(); ++a) {
        dl = dl && c.comult() * C.left_act(a) == ccr.left_act(a) * c.comult();
        dr = dr && c.comult() * C.right_act(a) == ccr.right_act(a) * c.comult();
        el = el && c.counit() * C.left_act(a) == Ar.left_act(a) * c.counit();
        er = er && c.counit() * C.right_act(a) == Ar.right_act(a) * c.counit();
    }
    rep.add(n + ".comult_bilinear", dl && dr, dl ? (dr ? "" : "right linearity") : "left linearity");
    rep.add(n + ".counit_bilinear", el && er, el ? (er ? "" : "right linearity") : "left linearity");

    const auto& ccc = c.ccc();
    auto lhs = comult_left_leg(c, cc, ccc, 0) * c.comult();
    auto rhs = comult_left_leg(c, cc, ccc, 1) * c.comult();
    detail::add_identity_check(rep, n + ".coassociative", lhs, rhs);

    auto eps_left = map_on_tuples(cc, C.dim(), [&](const auto& t) { return C.act_left(c.counit().column(t[0]), C.basis(t[1])); });
    auto eps_right = map_on_tuples(cc, C.dim(), [&](const auto& t) { return C.act_right(C.basis(t[0]), c.counit().column(t[1])); });
    auto id = Matrix<K>::identity(C.field(), C.dim());
    detail::add_identity_check(rep, n + ".left_counit", Matrix<K>(eps_left * c.comult()), id);
    detail::add_identity_check(rep, n + ".right_counit", Matrix<K>(eps_right * c.comult()), id);
    return rep;
}

/// (rho (x) C) and (M (x) Delta) into [M, C, C].
template <ExactField K>
ValidationReport validate_comodule(const Comodule<K>& m) {
    ValidationReport rep;
    const std::string n = m.name();
    const auto& M = m.carrier();
    const auto& c = m.coring();
    const auto& mc = m.mc();
    const auto& mcr = mc.result();

    bool rl = true, ll = true;
    for (std::size_t a = 0; a < M.right()->dim(); ++a) rl = rl && m.coaction() * M.right_act(a) == mcr.right_act(a) * m.coaction();
    for (std::size_t b = 0; b < M.left()->dim(); ++b) ll = ll && m.coaction() * M.left_act(b) == mcr.left_act(b) * m.coaction();
    rep.add(n + ".coaction_right_linear", rl);
    rep.add(n + ".coaction_left_linear", ll);

    auto mcc = chain<K>({m.carrier_ptr(), c.carrier_ptr(), c.carrier_ptr()});
    auto rho_c = map_on_tuples(mc, mcc->dim(), [&](const auto& t) {
        Vec<K> out = mcc->zero();
        for (const auto& [xy, coef] : mc.lift(m.coaction().column(t[0]))) mcc->add_pure_basis(out, {xy[0], xy[1], t[1]}, coef);
        return out;
    });
    auto m_delta = comult_left_leg(c, mc, *mcc, 1);
    detail::add_identity_check(rep, n + ".coassociative", Matrix<K>(rho_c * m.coaction()), Matrix<K>(m_delta * m.coaction()));

    auto m_eps = map_on_tuples(mc, M.dim(), [&](const auto& t) { return M.act_right(M.basis(t[0]), c.counit().column(t[1])); });
    detail::add_identity_check(rep, n + ".counit", Matrix<K>(m_eps * m.coaction()), Matrix<K>::identity(M.field(), M.dim()));
    return rep;
}

/**
 * N (x)_B L for a comodule L whose carrier is a left B-module, with coaction
 * N (x) rho_L.  With L = C this is the cofree comodule N (x)_A C.
 */
template <ExactField K>
Comodule<K> tensor_comodule(const BimodulePtr<K>& n, const Comodule<K>& l, std::string name = {}) {
    auto nl = chain<K>({n, l.carrier_ptr()});
    auto carrier = nl->result_ptr();
    if (!name.empty()) {
        auto renamed = *carrier;
        renamed.set_name(name);
        carrier = share(std::move(renamed));
    }
    auto target = chain<K>({carrier, l.coring().carrier_ptr()});
    auto rho = map_on_tuples(*nl, target->dim(), [&](const auto& t) {
        Vec<K> out = target->zero();
        for (const auto& [xc, coef] : l.mc().lift(l.coaction().column(t[1])))
            target->add_pure(out, {nl->pure_basis({t[0], xc[0]}), l.coring().carrier().basis(xc[1])}, coef);
        return out;
    });
    return Comodule<K>(l.coring_ptr(), carrier, rho, name.empty() ? carrier->name() : name);
}

template <ExactField K>
Comodule<K> cofree_comodule(const BimodulePtr<K>& n, const CoringPtr<K>& c) {
    return tensor_comodule(n, Comodule<K>::regular(c), n->name() + "(x)" + c->name());
}

template <ExactField K>
Comodule<K> direct_sum(const Comodule<K>& a, const Comodule<K>& b) {
    auto carrier = share(direct_sum(a.carrier(), b.carrier()));
    auto target = chain<K>({carrier, a.coring().carrier_ptr()});
    Matrix<K> rho(a.field(), target->dim(), carrier->dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        Vec<K> out = target->zero();
        for (const auto& [mc, coef] : a.mc().lift(a.coaction().column(j))) target->add_pure_basis(out, {mc[0], mc[1]}, coef);
        rho.set_column(j, out);
    }
    for (std::size_t j = 0; j < b.dim(); ++j) {
        Vec<K> out = target->zero();
        for (const auto& [mc, coef] : b.mc().lift(b.coaction().column(j)))
            target->add_pure_basis(out, {a.dim() + mc[0], mc[1]}, coef);
        rho.set_column(a.dim() + j, out);
    }
    return Comodule<K>(a.coring_ptr(), carrier, rho, a.name() + "+" + b.name());
}

/// f (x) C : [L, C] -> [N, C] for a module map f : L -> N.
template <ExactField K>
Matrix<K> map_tensor_coring(const Matrix<K>& f, const TensorChain<K>& lc, const TensorChain<K>& nc) {
    return tensor_maps(lc, nc, {f, Matrix<K>::identity(f.field(), lc.factor(1).dim())});
}

/// Hom^C(L, N) as the equaliser of j1(f) = rho_N f and j2(f) = (f (x) C) rho_L inside Hom_A(L, N).
template <ExactField K>
MapSpacePtr<K> hom_colinear(const Comodule<K>& l, const Comodule<K>& n) {
    if (!(&l.coring() == &n.coring()) && !(l.coring().carrier().same_structure(n.coring().carrier()) &&
                                           l.coring().comult() == n.coring().comult() &&
                                           l.coring().counit() == n.coring().counit()))
        throw Error(Errc::coring_mismatch, "comodules '" + l.name() + "' and '" + n.name() + "' are over different corings");
    auto h = hom_right_linear(l.carrier_ptr(), n.carrier_ptr());
    const auto& lc = l.mc();
    const auto& nc = n.mc();
    Matrix<K> cons(l.field(), nc.dim() * l.dim(), h->dim());
    for (std::size_t b = 0; b < h->dim(); ++b) {
        const auto& f = h->element(b);
        Matrix<K> d = n.coaction() * f - map_tensor_coring(f, lc, nc) * l.coaction();
        cons.set_column(b, lin::vectorize(d));
    }
    return map_subspace(*h, cons, "HomC(" + l.name() + "," + n.name() + ")");
}

/// A colinear left inverse of the coaction, certifying (C, A)-injectivity.
template <ExactField K>
struct InjectivityWitness {
    ComodulePtr<K> cofree;  // N (x)_A C
    Matrix<K> gamma;        // N (x)_A C -> N
};

template <ExactField K>
std::optional<InjectivityWitness<K>> relative_injectivity(const Comodule<K>& n) {
    auto cof = share(cofree_comodule(n.carrier_ptr(), n.coring_ptr()));
    auto hc = hom_colinear(*cof, n);
    const K& k = n.field();
    Matrix<K> sys(k, n.dim() * n.dim(), hc->dim());
    for (std::size_t b = 0; b < hc->dim(); ++b) sys.set_column(b, lin::vectorize(Matrix<K>(hc->element(b) * n.coaction())));
    auto x = lin::solve_vec(sys, lin::vectorize(Matrix<K>::identity(k, n.dim())));
    if (!x) return std::nullopt;
    return InjectivityWitness<K>{cof, hc->element(*x)};
}

/**
 * The contracting maps of the equaliser Hom^C(L,N) -> Hom_A(L,N) => Hom_A(L,N(x)C)
 * for an injective N: alpha(f) = gamma (f (x) C) rho_L and beta(g) = gamma g.
 */
template <ExactField K>
ValidationReport contractible_equalizer_check(const Comodule<K>& l, const Comodule<K>& n, const InjectivityWitness<K>& w) {
    ValidationReport rep;
    const K& k = l.field();
    auto h = hom_right_linear(l.carrier_ptr(), n.carrier_ptr());
    auto hc = hom_colinear(l, n);
    auto hnc = hom_right_linear(l.carrier_ptr(), w.cofree->carrier_ptr());
    const std::string p = "equalizer(" + l.name() + "," + n.name() + ").";

    auto i = hc->inclusion_into(*h);
    auto j1 = h->post_compose(n.coaction(), *hnc);
    Matrix<K> j2(k, hnc->dim(), h->dim());
    Matrix<K> alpha(k, hc->dim(), h->dim());
    for (std::size_t b = 0; b < h->dim(); ++b) {
        Matrix<K> g = map_tensor_coring(h->element(b), l.mc(), n.mc()) * l.coaction();
        j2.set_column(b, hnc->coords(g));
        alpha.set_column(b, hc->coords(Matrix<K>(w.gamma * g)));
    }
    auto beta = hnc->post_compose(w.gamma, *h);
    rep.add(p + "gamma_retracts_coaction", Matrix<K>(w.gamma * n.coaction()).is_identity());
    detail::add_identity_check(rep, p + "j1_i_eq_j2_i", Matrix<K>(j1 * i), Matrix<K>(j2 * i));
    detail::add_identity_check(rep, p + "alpha_i_eq_id", Matrix<K>(alpha * i), Matrix<K>::identity(k, hc->dim()));
    detail::add_identity_check(rep, p + "beta_j1_eq_id", Matrix<K>(beta * j1), Matrix<K>::identity(k, h->dim()));
    detail::add_identity_check(rep, p + "beta_j2_eq_i_alpha", Matrix<K>(beta * j2), Matrix<K>(i * alpha));
    return rep;
}

/// varpi_M : Hom_A(Sigma, M) -> Hom^C(Sigma, M (x)_A C), f -> (f (x) C) rho_Sigma.
/// `cofree_m` must be cofree_comodule(m, C), so its carrier has the basis of [M, C].
template <ExactField K>
Matrix<K> varpi(const Comodule<K>& sigma, const BimodulePtr<K>& m, const MapSpace<K>& hom_a, const MapSpace<K>& hom_c) {
    auto mc = chain<K>({m, sigma.coring().carrier_ptr()});
    Matrix<K> out(sigma.field(), hom_c.dim(), hom_a.dim());
    for (std::size_t b = 0; b < hom_a.dim(); ++b)
        out.set_column(b, hom_c.coords(Matrix<K>(map_tensor_coring(hom_a.element(b), sigma.mc(), *mc) * sigma.coaction())));
    return out;
}

}  // namespace coring

#endif  // CORING_CORING_HPP
