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

#ifndef CORING_GALOIS_HPP
#define CORING_GALOIS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"
#include "family.hpp"

namespace coring {

/**
 * A right C-comodule Sigma whose carrier is an R-A bimodule with colinear
 * left R-action, together with its canonical map
 * can : Sigma* (x)_R Sigma -> C, f (x) u -> f(u_0) u_1.
 */
template <ExactField K>
struct GaloisInstance {
    std::string name;
    ComodulePtr<K> sigma;
    MapSpacePtr<K> dual;  // Hom_A(Sigma, A)
    ChainPtr<K> source;   // [Sigma*, Sigma] over R
    Matrix<K> can;
    std::size_t rank = 0;

    const Coring<K>& coring() const { return sigma->coring(); }
    const AlgebraPtr<K>& r() const { return sigma->carrier().left(); }
    const Bimodule<K>& carrier() const { return sigma->carrier(); }
    bool is_galois() const { return rank == source->dim() && rank == coring().dim(); }
    std::string rank_str() const {
        return "rank " + std::to_string(rank) + " from dim " + std::to_string(source->dim()) + " to dim " +
               std::to_string(coring().dim());
    }
};

template <ExactField K>
GaloisInstance<K> make_galois(std::string name, ComodulePtr<K> sigma) {
    const auto& c = sigma->coring();
    const auto& sig = sigma->carrier();
    auto dual = dual_module(sigma->carrier_ptr());
    auto src = chain<K>({dual->bimodule_ptr(), sigma->carrier_ptr()});
    auto can = map_on_tuples(*src, c.dim(), [&](const auto& t) {
        Vec<K> out(c.dim(), c.field().zero());
        for (const auto& [sc, coef] : sigma->mc().lift(sigma->coaction().column(t[1])))
            lin::axpy(c.field(), out, coef, c.carrier().act_left(dual->apply(t[0], sig.basis(sc[0])), c.carrier().basis(sc[1])));
        return out;
    });
    auto r = lin::rank(can);
    return {std::move(name), std::move(sigma), std::move(dual), std::move(src), std::move(can), r};
}

/// can_M : Hom_A(Sigma, M) (x)_R Sigma -> M (x)_A C.
template <ExactField K>
struct CanonicalM {
    MapSpacePtr<K> hom;
    ChainPtr<K> source;
    ChainPtr<K> target;
    Matrix<K> can;
    std::size_t rank = 0;
    bool iso() const { return rank == source->dim() && rank == target->dim(); }
    std::string rank_str() const {
        return "rank " + std::to_string(rank) + " from dim " + std::to_string(source->dim()) + " to dim " +
               std::to_string(target->dim());
    }
};

template <ExactField K>
CanonicalM<K> canonical_map_for(const Comodule<K>& sigma, const BimodulePtr<K>& m) {
    auto hom = hom_right_linear(sigma.carrier_ptr(), m);
    auto src = chain<K>({hom->bimodule_ptr(), sigma.carrier_ptr()});
    auto tgt = chain<K>({m, sigma.coring().carrier_ptr()});
    const auto& cc = sigma.coring().carrier();
    auto can = map_on_tuples(*src, tgt->dim(), [&](const auto& t) {
        Vec<K> out = tgt->zero();
        for (const auto& [sc, coef] : sigma.mc().lift(sigma.coaction().column(t[1])))
            tgt->add_pure(out, {hom->apply(t[0], sigma.carrier().basis(sc[0])), cc.basis(sc[1])}, coef);
        return out;
    });
    auto r = lin::rank(can);
    return {std::move(hom), std::move(src), std::move(tgt), std::move(can), r};
}

namespace detail {

// Hom_A(Sigma, f) (x)_R Sigma between the sources of two canonical maps.
template <ExactField K>
Matrix<K> hom_functor_on(const CanonicalM<K>& from, const CanonicalM<K>& to, const Matrix<K>& f) {
    const auto& sig = from.source->factor(1);
    return tensor_maps(*from.source, *to.source, {from.hom->post_compose(f, *to.hom), Matrix<K>::identity(f.field(), sig.dim())});
}

template <ExactField K>
void add_cokernel_check(ValidationReport& rep, const std::string& name, const Matrix<K>& fg, const Matrix<K>& fpi,
                        std::size_t dim_free, std::size_t dim_m) {
    auto rg = lin::rank(fg);
    auto rp = lin::rank(fpi);
    bool ok = rp == dim_m && Matrix<K>(fpi * fg).is_zero() && rg + dim_m == dim_free;
    rep.add(name, ok,
            ok ? std::string{}
               : "image of relations has rank " + std::to_string(rg) + ", projection rank " + std::to_string(rp) + ", dims " +
                     std::to_string(dim_free) + " -> " + std::to_string(dim_m));
}

}  // namespace detail

struct ComonadicOptions {
    std::size_t naturality_samples = 20;
    std::uint64_t seed = 1;
};

template <ExactField K>
struct ComonadicReport {
    bool galois = false;
    bool comonadic = false;
    std::optional<std::string> counterexample;
    std::optional<std::size_t> counterexample_index;  // into the family
    ValidationReport checks;
};

/**
 * Galois-comonadicity on a finite family: can_M an isomorphism for every
 * member, naturality of can in M on random morphisms, and preservation of
 * the member presentations by both functors.
 */
template <ExactField K>
ComonadicReport<K> is_comonadic_galois(const GaloisInstance<K>& g, const std::vector<FamilyMember<K>>& family,
                                       const ComonadicOptions& opt = {}) {
    ComonadicReport<K> out;
    const std::string n = g.name;
    const K& k = g.sigma->field();
    out.galois = g.is_galois();
    out.checks.add(n + ".can", out.galois, g.rank_str());
    if (!out.galois) out.counterexample = "can itself: " + g.rank_str();

    std::vector<CanonicalM<K>> cans;
    bool all = out.galois;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& m = family[i].module;
        cans.push_back(canonical_map_for(*g.sigma, m));
        const auto& c = cans.back();
        out.checks.add(n + ".can_M." + m->name(), c.iso(), c.rank_str());
        if (!c.iso() && all) {
            all = false;
            out.counterexample = "M = " + m->name() + ": can_M has " + c.rank_str();
            out.counterexample_index = i;
        }
    }
    out.comonadic = all;

    if (!family.empty()) {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
        std::uniform_int_distribution<int> coef(-2, 2);
        std::string bad;
        for (std::size_t s = 0; s < opt.naturality_samples && bad.empty(); ++s) {
            std::size_t i = pick(rng), j = pick(rng);
            const auto& mi = family[i].module;
            const auto& mj = family[j].module;
            auto h = hom_right_linear(mi, mj);
            Vec<K> x(h->dim(), k.zero());
            for (auto& v : x) v = k.from_int(coef(rng));
            Matrix<K> f = h->dim() ? h->element(x) : Matrix<K>(k, mj->dim(), mi->dim());
            Matrix<K> lhs = map_tensor_coring(f, *cans[i].target, *cans[j].target) * cans[i].can;
            Matrix<K> rhs = cans[j].can * detail::hom_functor_on(cans[i], cans[j], f);
            if (!(lhs == rhs)) bad = "morphism " + mi->name() + " -> " + mj->name() + ": " + detail::column_mismatches(lhs, rhs);
        }
        out.checks.add(n + ".naturality", bad.empty(), bad.empty() ? std::to_string(opt.naturality_samples) + " random morphisms" : bad);
    }

    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!family[i].presentation) continue;
        const auto& p = *family[i].presentation;
        const auto& m = family[i].module;
        auto cf = canonical_map_for(*g.sigma, p.free);
        auto cr = canonical_map_for(*g.sigma, p.relations);
        detail::add_cokernel_check(out.checks, n + ".cokernel.hom." + m->name(), detail::hom_functor_on(cr, cf, p.g),
                                   detail::hom_functor_on(cf, cans[i], p.pi), cf.source->dim(), cans[i].source->dim());
        detail::add_cokernel_check(out.checks, n + ".cokernel.tensor." + m->name(),
                                   map_tensor_coring(p.g, *cr.target, *cf.target), map_tensor_coring(p.pi, *cf.target, *cans[i].target),
                                   cf.target->dim(), cans[i].target->dim());
    }
    return out;
}

/// ev_N : Hom^C(Sigma, N) (x)_R Sigma -> N.
template <ExactField K>
struct EvaluationM {
    MapSpacePtr<K> hom;
    ChainPtr<K> source;
    Matrix<K> ev;
    std::size_t rank = 0;
    bool iso() const { return rank == source->dim() && rank == ev.rows(); }
    std::string rank_str() const {
        return "rank " + std::to_string(rank) + " from dim " + std::to_string(source->dim()) + " to dim " + std::to_string(ev.rows());
    }
};

template <ExactField K>
EvaluationM<K> evaluation_for(const Comodule<K>& sigma, const Comodule<K>& n) {
    auto hc = hom_colinear(sigma, n);
    auto src = chain<K>({hc->bimodule_ptr(), sigma.carrier_ptr()});
    auto ev = map_on_tuples(*src, n.dim(), [&](const auto& t) { return hc->apply(t[0], sigma.carrier().basis(t[1])); });
    auto r = lin::rank(ev);
    return {std::move(hc), std::move(src), std::move(ev), r};
}

/**
 * ev_N over the (C, A)-injective comodules given.  For a comonadic instance
 * every ev_N must be invertible; otherwise some must fail.
 */
template <ExactField K>
ValidationReport evaluation_check(const GaloisInstance<K>& g, const std::vector<ComodulePtr<K>>& comodules, bool comonadic) {
    ValidationReport rep;
    bool all_iso = true;
    std::size_t tested = 0;
    for (const auto& n : comodules) {
        const std::string name = g.name + ".ev." + n->name();
        if (!relative_injectivity(*n)) {
            rep.skip(name, "'" + n->name() + "' is not (C,A)-injective");
            continue;
        }
        auto e = evaluation_for(*g.sigma, *n);
        ++tested;
        all_iso = all_iso && e.iso();
        if (comonadic)
            rep.add(name, e.iso(), e.rank_str());
        else
            rep.skip(name, "not comonadic; ev has " + e.rank_str());
    }
    if (tested)
        rep.add(g.name + ".ev_consistent", comonadic == all_iso,
                comonadic ? (all_iso ? "" : "comonadic but some ev_N is not invertible")
                          : (all_iso ? "not comonadic but every tested ev_N is invertible" : ""));
    return rep;
}

/// ev_N over cofree N = M (x)_A C, which are injective through M (x) counit.
template <ExactField K>
ValidationReport evaluation_check(const GaloisInstance<K>& g, const std::vector<BimodulePtr<K>>& cofree_of, bool comonadic) {
    ValidationReport rep;
    bool all_iso = true;
    for (const auto& m : cofree_of) {
        auto n = cofree_comodule(m, g.sigma->coring_ptr());
        auto e = evaluation_for(*g.sigma, n);
        all_iso = all_iso && e.iso();
        const std::string name = g.name + ".ev." + n.name();
        if (comonadic)
            rep.add(name, e.iso(), e.rank_str());
        else
            rep.skip(name, "not comonadic; ev has " + e.rank_str());
    }
    if (!cofree_of.empty())
        rep.add(g.name + ".ev_consistent", comonadic == all_iso,
                comonadic ? (all_iso ? "" : "comonadic but some ev_N is not invertible")
                          : (all_iso ? "not comonadic but every tested ev_N is invertible" : ""));
    return rep;
}

/// *C = {A-linear maps C -> A on the left} with (phi * psi)(c) = psi(c_1 phi(c_2)).
template <ExactField K>
struct LeftDual {
    MapSpacePtr<K> maps;
    AlgebraPtr<K> ring;
};

template <ExactField K>
LeftDual<K> left_dual_ring(const Coring<K>& c) {
    const K& k = c.field();
    auto maps = hom_left_linear(c.carrier_ptr(), c.base_module(), "*" + c.name());
    const std::size_t d = maps->dim();
    Matrix<K> mult(k, d * d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Matrix<K> f(k, c.base()->dim(), c.dim());
            for (std::size_t x = 0; x < c.dim(); ++x) {
                Vec<K> v(c.base()->dim(), k.zero());
                for (const auto& [xy, coef] : c.cc().lift(c.comult().column(x)))
                    lin::axpy(k, v, coef, maps->apply(b, c.carrier().act_right(c.carrier().basis(xy[0]), maps->apply(a, c.carrier().basis(xy[1])))));
                f.set_column(x, v);
            }
            mult.set_row(a * d + b, maps->coords(f));
        }
    return {maps, share(Algebra<K>(k, d, mult, std::nullopt, "*" + c.name()).with_detected_unit())};
}

/// *C -> End(_R Sigma) and back, with End given the opposite composition product.
template <ExactField K>
ValidationReport dual_ring_iso_check(const GaloisInstance<K>& g) {
    ValidationReport rep;
    const std::string n = g.name + ".star_dual";
    const K& k = g.sigma->field();
    const auto& sig = g.carrier();
    const auto& c = g.coring();
    if (!g.is_galois()) {
        rep.skip(n, "can is not invertible");
        return rep;
    }
    auto ld = left_dual_ring(c);
    auto end = hom_left_linear(g.sigma->carrier_ptr(), g.sigma->carrier_ptr(), "End");
    Matrix<K> alpha(k, end->dim(), ld.maps->dim());
    for (std::size_t p = 0; p < ld.maps->dim(); ++p) {
        Matrix<K> h(k, sig.dim(), sig.dim());
        for (std::size_t u = 0; u < sig.dim(); ++u) {
            Vec<K> v(sig.dim(), k.zero());
            for (const auto& [sc, coef] : g.sigma->mc().lift(g.sigma->coaction().column(u)))
                lin::axpy(k, v, coef, sig.act_right(sig.basis(sc[0]), ld.maps->apply(p, c.carrier().basis(sc[1]))));
            h.set_column(u, v);
        }
        auto x = end->coordinates(h);
        if (!x) {
            rep.add(n + ".alpha_left_linear", false, "image of " + detail::basis_name(p) + " is not left linear");
            return rep;
        }
        alpha.set_column(p, *x);
    }
    auto cinv = lin::inverse(g.can);
    Matrix<K> beta(k, ld.maps->dim(), end->dim());
    for (std::size_t q = 0; q < end->dim(); ++q) {
        Matrix<K> f(k, c.base()->dim(), c.dim());
        for (std::size_t x = 0; x < c.dim(); ++x) {
            Vec<K> v(c.base()->dim(), k.zero());
            for (const auto& [fu, coef] : g.source->lift(cinv.column(x)))
                lin::axpy(k, v, coef, g.dual->apply(fu[0], end->apply(q, sig.basis(fu[1]))));
            f.set_column(x, v);
        }
        beta.set_column(q, ld.maps->coords(f));
    }
    detail::add_identity_check(rep, n + ".beta_alpha", Matrix<K>(beta * alpha), Matrix<K>::identity(k, ld.maps->dim()));
    detail::add_identity_check(rep, n + ".alpha_beta", Matrix<K>(alpha * beta), Matrix<K>::identity(k, end->dim()));
    std::string bad;
    for (std::size_t a = 0; a < ld.maps->dim() && bad.empty(); ++a)
        for (std::size_t b = 0; b < ld.maps->dim() && bad.empty(); ++b) {
            auto lhs = end->element(alpha.apply(ld.ring->product(ld.ring->basis(a), ld.ring->basis(b))));
            Matrix<K> rhs = end->element(alpha.column(b)) * end->element(alpha.column(a));
            if (!(lhs == rhs)) bad = "(" + detail::basis_name(a) + "," + detail::basis_name(b) + ")";
        }
    rep.add(n + ".alpha_multiplicative", bad.empty(), bad);
    return rep;
}

/// Every L in the list is a quotient of a direct sum of copies of Sigma.
template <ExactField K>
ValidationReport generator_check(const GaloisInstance<K>& g, const std::vector<ComodulePtr<K>>& comodules) {
    ValidationReport rep;
    for (const auto& l : comodules) {
        auto hc = hom_colinear(*g.sigma, *l);
        std::vector<Matrix<K>> parts;
        for (std::size_t b = 0; b < hc->dim(); ++b) parts.push_back(hc->element(b));
        std::size_t r = parts.empty() ? 0 : lin::rank(hstack<K>(l->field(), l->dim(), parts));
        rep.add(g.name + ".generator." + l->name(), r == l->dim(),
                std::to_string(hc->dim()) + " copies of Sigma map onto rank " + std::to_string(r) + " of dim " + std::to_string(l->dim()));
    }
    return rep;
}

/**
 * The equivalence - (x)_R Sigma : firm R-modules -> C-comodules on a finite
 * family: unit and counit invertible, can invertible, *C = End(_R Sigma),
 * and Sigma generating.  Throws NotFirm when R is not firm.
 */
template <ExactField K>
ValidationReport equivalence_check(const GaloisInstance<K>& g, const std::vector<BimodulePtr<K>>& rmods,
                                   const std::vector<ComodulePtr<K>>& comodules) {
    const K& k = g.sigma->field();
    auto r = g.r();
    auto rf = is_firm_ring(r);
    if (!rf) throw Error(Errc::not_firm, "ring '" + r->name() + "': " + rf.certificate.str());
    ValidationReport rep;
    const std::string n = g.name;
    const auto& sig = g.carrier();
    auto rreg = share(Bimodule<K>::regular(r));

    for (const auto& nm : rmods) {
        const std::string name = n + ".unit." + nm->name();
        auto fw = firmness(nm, r);
        if (!fw) {
            rep.skip(name, "'" + nm->name() + "' is not firm: " + fw.certificate.str());
            continue;
        }
        const auto& w = *fw.witness;
        auto ns = share(tensor_comodule(nm, *g.sigma));
        auto nsc = chain<K>({nm, g.sigma->carrier_ptr()});
        auto hc = hom_colinear(*g.sigma, *ns);
        auto gf = chain<K>({hc->bimodule_ptr(), rreg});
        Matrix<K> unit(k, gf->dim(), nm->dim());
        bool ok = true;
        for (std::size_t x = 0; x < nm->dim() && ok; ++x) {
            Vec<K> col = gf->zero();
            for (const auto& [nr, coef] : w.chain->lift(w.d.column(x))) {
                Matrix<K> lam(k, ns->dim(), sig.dim());
                for (std::size_t u = 0; u < sig.dim(); ++u) lam.set_column(u, nsc->pure_basis({nr[0], u}));
                auto lc = hc->coordinates(lam);
                if (!lc) {
                    ok = false;
                    break;
                }
                gf->add_pure(col, {*lc, r->basis(nr[1])}, coef);
            }
            unit.set_column(x, col);
        }
        if (!ok) {
            rep.add(name, false, "n (x) - is not colinear");
            continue;
        }
        auto rk = lin::rank(unit);
        rep.add(name, rk == nm->dim() && rk == gf->dim(),
                "rank " + std::to_string(rk) + " from dim " + std::to_string(nm->dim()) + " to dim " + std::to_string(gf->dim()));
    }

    for (const auto& l : comodules) {
        auto hc = hom_colinear(*g.sigma, *l);
        auto fg = chain<K>({hc->bimodule_ptr(), rreg, g.sigma->carrier_ptr()});
        auto counit = map_on_tuples(*fg, l->dim(), [&](const auto& t) {
            return hc->apply(t[0], sig.left_act(t[1]).column(t[2]));
        });
        auto rk = lin::rank(counit);
        rep.add(n + ".counit." + l->name(), rk == l->dim() && rk == fg->dim(),
                "rank " + std::to_string(rk) + " from dim " + std::to_string(fg->dim()) + " to dim " + std::to_string(l->dim()));
    }

    rep.add(n + ".can", g.is_galois(), g.rank_str());
    rep.append(dual_ring_iso_check(g));
    rep.append(generator_check(g, comodules));
    return rep;
}

/// Finite surrogate for local units: a two-sided unit for the whole basis.
template <ExactField K>
ValidationReport local_units_check(const GaloisInstance<K>& g) {
    ValidationReport rep;
    const std::string name = g.name + ".local_units";
    if (!g.r()->is_unital()) {
        rep.skip(name, "'" + g.r()->name() + "' has no two-sided local unit for its basis");
        return rep;
    }
    // e = 1 serves every finite subset; e Sigma = Sigma is then a direct summand
    auto sf = left_firmness(g.sigma->carrier_ptr(), g.r());
    rep.add(name, static_cast<bool>(sf), sf.certificate.str());
    return rep;
}

template <ExactField K>
std::optional<Matrix<K>> iota_for(const GaloisInstance<K>& g) {
    return iota_from_actions(g.sigma->carrier_ptr(), g.carrier().left_acts());
}

template <ExactField K>
void add_coring_morphism_check(ValidationReport& rep, const std::string& name, const Matrix<K>& theta, const Coring<K>& from,
                               const Coring<K>& to) {
    detail::add_identity_check(rep, name + ".counit", Matrix<K>(to.counit() * theta), from.counit());
    Matrix<K> lhs = to.comult() * theta;
    Matrix<K> rhs = tensor_maps(from.cc(), to.cc(), {theta, theta}) * from.comult();
    detail::add_identity_check(rep, name + ".comult", lhs, rhs);
}

/// The comatrix coring of a firmly projective Sigma and the map theta into C it induces.
template <ExactField K>
struct ComatrixComparison {
    FirmDualPair<K> pair;
    ComatrixContext<K> context;
    ComatrixCoring<K> comatrix;
    Matrix<K> theta;  // D -> C
};

template <ExactField K>
std::optional<ComatrixComparison<K>> comatrix_comparison(const GaloisInstance<K>& g, std::string* why = nullptr) {
    auto iota = iota_for(g);
    if (!iota) {
        if (why) *why = "R does not act through Sigma (x)_A Sigma*";
        return std::nullopt;
    }
    auto fp = is_firmly_projective(g.sigma->carrier_ptr(), g.r(), *iota);
    if (!fp) {
        if (why) *why = fp.reason;
        return std::nullopt;
    }
    auto& f = *fp.pair;
    auto ctx = make_context(g.name + ".comatrix", f.sigma_r, f.pair.dagger, f.iota_dagger, f.pair.mu);
    auto cc = comatrix_coring(ctx);
    const auto& p = *ctx.pairing;
    auto theta = map_on_tuples(p, g.coring().dim(), [&](const auto& t) {
        auto pr = f.dagger_chain->basis_tuple(t[0]);
        auto v = f.sigma_r->left_act(pr[1]).column(t[1]);
        return g.can.apply(g.source->pure({g.source->factor(0).basis(pr[0]), v}));
    });
    return ComatrixComparison<K>{f, std::move(ctx), std::move(cc), std::move(theta)};
}

/**
 * can as a coring morphism out of the comatrix coring when Sigma is firmly
 * projective, and Galois agreeing with comonadic on the family.
 */
template <ExactField K>
ValidationReport firmly_projective_comparison(const GaloisInstance<K>& g, bool comonadic) {
    ValidationReport rep;
    const std::string n = g.name + ".firmly_projective";
    std::string why;
    auto cmp = comatrix_comparison(g, &why);
    if (!cmp) {
        rep.skip(n, why);
        return rep;
    }
    rep.add(n, true);
    add_coring_morphism_check(rep, g.name + ".theta", cmp->theta, *cmp->comatrix.coring, g.coring());
    auto rk = lin::rank(cmp->theta);
    rep.add(g.name + ".theta_iso_iff_galois", (rk == cmp->theta.rows() && rk == cmp->theta.cols()) == g.is_galois(),
            "theta rank " + std::to_string(rk));
    rep.add(g.name + ".galois_iff_comonadic", g.is_galois() == comonadic,
            std::string(g.is_galois() ? "Galois" : "not Galois") + ", " + (comonadic ? "comonadic" : "not comonadic"));
    return rep;
}

/**
 * For a Galois Sigma and a firm ring S of colinear endomorphisms containing
 * the image of R: nu_M inverts can'_M : Hom_A(Sigma, M) (x)_S S (x)_S Sigma -> M (x)_A C.
 */
template <ExactField K>
ValidationReport galois_implies_comonadic(const GaloisInstance<K>& g, const std::vector<Matrix<K>>& s_mats,
                                          const std::vector<FamilyMember<K>>& family, const std::string& s_name = "S") {
    if (!g.is_galois()) throw Error(Errc::not_galois, "'" + g.name + "': can has " + g.rank_str());
    const K& k = g.sigma->field();
    const auto& sig = g.carrier();
    const auto& c = g.coring();
    auto t = hom_colinear(*g.sigma, *g.sigma);
    for (std::size_t i = 0; i < s_mats.size(); ++i)
        if (!t->contains(s_mats[i]))
            throw Error(Errc::precondition_failed, s_name + " basis " + detail::basis_name(i) + " is not a colinear endomorphism");
    auto s = share(Algebra<K>::from_matrices(k, s_mats, s_name));
    std::vector<Vec<K>> cols;
    for (const auto& m : s_mats) cols.push_back(lin::vectorize(m));
    auto span = Matrix<K>::from_columns(k, sig.dim() * sig.dim(), cols);
    Matrix<K> jr(k, s->dim(), g.r()->dim());
    for (std::size_t x = 0; x < g.r()->dim(); ++x) {
        auto y = lin::solve_vec(span, lin::vectorize(sig.left_act(x)));
        if (!y) throw Error(Errc::precondition_failed, s_name + " does not contain the action of " + detail::basis_name(x));
        jr.set_column(x, *y);
    }
    auto sf = is_firm_ring(s);
    if (!sf) throw Error(Errc::precondition_failed, s_name + " is not firm: " + sf.certificate.str());
    auto rsf = left_firmness(g.sigma->carrier_ptr(), g.r());
    if (!rsf) throw Error(Errc::precondition_failed, "Sigma is not firm over R: " + rsf.certificate.str());
    const auto& dr = *rsf.witness;

    auto sigma_s = share(Bimodule<K>(s, sig.right(), sig.dim(), s_mats, sig.right_acts(), sig.name()));
    auto sreg = share(Bimodule<K>::regular(s));
    auto cinv = lin::inverse(g.can);
    ValidationReport rep;
    for (const auto& mem : family) {
        const auto& m = mem.module;
        const std::string name = g.name + ".nu." + s_name + "." + m->name();
        auto h = hom_right_linear(sigma_s, m);
        auto x = chain<K>({h->bimodule_ptr(), sreg, sigma_s});
        auto mc = chain<K>({m, c.carrier_ptr()});
        auto can_p = map_on_tuples(*x, mc->dim(), [&](const auto& tt) {
            Vec<K> out = mc->zero();
            auto su = sigma_s->left_act(tt[1]).column(tt[2]);
            for (const auto& [sc, coef] : g.sigma->mc().lift(g.sigma->coaction().apply(su)))
                mc->add_pure(out, {h->apply(tt[0], sig.basis(sc[0])), c.carrier().basis(sc[1])}, coef);
            return out;
        });
        auto nu = map_on_tuples(*mc, x->dim(), [&](const auto& tt) {
            Vec<K> out = x->zero();
            for (const auto& [fu, c1] : g.source->lift(cinv.column(tt[1]))) {
                Matrix<K> mf(k, m->dim(), sig.dim());
                for (std::size_t v = 0; v < sig.dim(); ++v) mf.set_column(v, m->act_right(m->basis(tt[0]), g.dual->apply(fu[0], sig.basis(v))));
                auto hc = h->coords(mf);
                for (const auto& [ru, c2] : dr.chain->lift(dr.d.column(fu[1])))
                    x->add_pure(out, {hc, jr.column(ru[0]), sig.basis(ru[1])}, k.mul(c1, c2));
            }
            return out;
        });
        detail::add_identity_check(rep, name + ".nu_can", Matrix<K>(nu * can_p), Matrix<K>::identity(k, x->dim()));
        detail::add_identity_check(rep, name + ".can_nu", Matrix<K>(can_p * nu), Matrix<K>::identity(k, mc->dim()));
    }
    return rep;
}

/// End^C(Sigma) as an algebra of matrices, with R -> End^C(Sigma).
template <ExactField K>
struct ColinearEnd {
    MapSpacePtr<K> maps;
    AlgebraPtr<K> ring;
    std::vector<Matrix<K>> basis;
    Matrix<K> j;  // R -> ring
};

template <ExactField K>
ColinearEnd<K> colinear_endomorphisms(const GaloisInstance<K>& g) {
    auto t = hom_colinear(*g.sigma, *g.sigma);
    std::vector<Matrix<K>> basis;
    for (std::size_t b = 0; b < t->dim(); ++b) basis.push_back(t->element(b));
    auto ring = share(Algebra<K>::from_matrices(g.sigma->field(), basis, "End^C"));
    Matrix<K> j(g.sigma->field(), t->dim(), g.r()->dim());
    for (std::size_t x = 0; x < g.r()->dim(); ++x) j.set_column(x, t->coords(g.carrier().left_act(x)));
    return {t, ring, basis, j};
}

/// Sigma over its colinear endomorphism ring T, as a second instance.
template <ExactField K>
GaloisInstance<K> over_endomorphisms(const GaloisInstance<K>& g, const ColinearEnd<K>& e) {
    const auto& sig = g.carrier();
    auto carrier = share(Bimodule<K>(e.ring, sig.right(), sig.dim(), e.basis, sig.right_acts(), sig.name()));
    auto s = share(Comodule<K>(g.sigma->coring_ptr(), carrier, g.sigma->coaction(), g.sigma->name()));
    return make_galois(g.name + "/T", s);
}

/**
 * Comparison of R with T = End^C(Sigma): comonadic over R implies
 * comonadic over T, and the two agree when j(R) is a left ideal of T.
 */
template <ExactField K>
ValidationReport endomorphism_ring_check(const GaloisInstance<K>& g, bool comonadic_r, const std::vector<FamilyMember<K>>& family,
                                         const ComonadicOptions& opt = {}) {
    ValidationReport rep;
    const std::string n = g.name + ".endomorphisms";
    auto e = colinear_endomorphisms(g);
    auto gt = over_endomorphisms(g, e);
    auto ct = is_comonadic_galois(gt, family, opt);
    rep.add(n + ".r_implies_t", !comonadic_r || ct.comonadic,
            std::string(comonadic_r ? "comonadic" : "not comonadic") + " over R, " + (ct.comonadic ? "comonadic" : "not comonadic") +
                " over T");
    std::string bad;
    for (std::size_t a = 0; a < e.ring->dim() && bad.empty(); ++a)
        for (std::size_t x = 0; x < g.r()->dim() && bad.empty(); ++x) {
            auto p = e.ring->product(e.ring->basis(a), e.j.column(x));
            if (!lin::solve_vec(e.j, p)) bad = detail::basis_name(a) + " * j(" + detail::basis_name(x) + ")";
        }
    if (!bad.empty())
        rep.skip(n + ".ideal_agreement", "image of R is not a left ideal of End^C(Sigma): " + bad + " leaves it");
    else
        rep.add(n + ".ideal_agreement", comonadic_r == ct.comonadic);
    return rep;
}

/**
 * From an invertible can: Z = Sigma (x)_A Sigma* is firm, Sigma is a firm
 * Z-module, and (Z, A, Sigma, Sigma* (x)_Z Z, eta, eps) is a context.  Its
 * comatrix coring is Sigma* (x)_Z Sigma, which is usually smaller than C, so
 * the isomorphism onto C is taken from the context over R instead.
 */
template <ExactField K>
struct RebuiltContext {
    ElementaryRing<K> z;
    MapSpacePtr<K> dual;
    ChainPtr<K> dagger_chain;  // [Sigma*, Z]
    std::optional<ComatrixContext<K>> context;
    std::optional<ComatrixCoring<K>> comatrix;
    Matrix<K> theta;  // comatrix coring over R -> C
    std::optional<ComatrixComparison<K>> over_r;
    ValidationReport report;
};

template <ExactField K>
RebuiltContext<K> comonadic_context(const GaloisInstance<K>& g) {
    if (!g.is_galois()) throw Error(Errc::not_galois, "'" + g.name + "': can has " + g.rank_str());
    const K& k = g.sigma->field();
    const auto& sig = g.carrier();
    const auto& c = g.coring();
    const std::string n = g.name + ".rebuilt";
    RebuiltContext<K> out;
    auto pair = evaluation_pair(g.sigma->carrier_ptr(), &out.dual);
    out.z = elementary_ring(pair);
    const auto& z = out.z;
    const auto& dual = *out.dual;
    auto cinv = lin::inverse(g.can);
    auto& rep = out.report;

    // d_{Z,Sigma}(u) = (u_0 (x) f) (x)_Z v with can^{-1}(u_1) = f (x) v
    auto zreg = share(Bimodule<K>::regular(z.ring));
    auto zs = chain<K>({zreg, z.sigma});
    Matrix<K> dzs(k, zs->dim(), sig.dim());
    for (std::size_t u = 0; u < sig.dim(); ++u) {
        Vec<K> col = zs->zero();
        for (const auto& [sc, c1] : g.sigma->mc().lift(g.sigma->coaction().column(u)))
            for (const auto& [fv, c2] : g.source->lift(cinv.column(sc[1])))
                zs->add_pure(col, {z.carrier->pure_basis({sc[0], fv[0]}), sig.basis(fv[1])}, k.mul(c1, c2));
        dzs.set_column(u, col);
    }
    auto mzs = left_multiplication_map(*zs);
    detail::add_identity_check(rep, n + ".sigma_firm.mu_d", Matrix<K>(mzs * dzs), Matrix<K>::identity(k, sig.dim()));
    detail::add_identity_check(rep, n + ".sigma_firm.d_mu", Matrix<K>(dzs * mzs), Matrix<K>::identity(k, zs->dim()));

    auto zz = chain<K>({zreg, zreg});
    auto dz = map_on_tuples(*z.carrier, zz->dim(), [&](const auto& t) {
        Vec<K> col = zz->zero();
        for (const auto& [zv, coef] : zs->lift(dzs.column(t[0])))
            zz->add_pure(col, {z.ring->basis(zv[0]), z.carrier->pure_basis({zv[1], t[1]})}, coef);
        return col;
    });
    auto mz = left_multiplication_map(*zz);
    detail::add_identity_check(rep, n + ".ring_firm.mu_d", Matrix<K>(mz * dz), Matrix<K>::identity(k, z.ring->dim()));
    detail::add_identity_check(rep, n + ".ring_firm.d_mu", Matrix<K>(dz * mz), Matrix<K>::identity(k, zz->dim()));

    // Sigma* as an A-Z bimodule: phi . (u (x) psi) = phi(u) psi
    const auto& sd = *pair.dagger;
    std::vector<Matrix<K>> zr;
    for (std::size_t b = 0; b < z.ring->dim(); ++b) {
        auto lifted = z.carrier->lift(z.ring->basis(b));
        Matrix<K> act(k, sd.dim(), sd.dim());
        for (std::size_t phi = 0; phi < sd.dim(); ++phi) {
            Vec<K> col(sd.dim(), k.zero());
            for (const auto& [up, coef] : lifted)
                lin::axpy(k, col, coef, sd.act_left(dual.apply(phi, sig.basis(up[0])), sd.basis(up[1])));
            act.set_column(phi, col);
        }
        zr.push_back(std::move(act));
    }
    auto sdz = share(Bimodule<K>(c.base(), z.ring, sd.dim(), sd.left_acts(), zr, sd.name()));
    out.dagger_chain = chain<K>({sdz, zreg});
    const auto& dc = *out.dagger_chain;
    auto dagger = dc.result_ptr();

    auto zd = chain<K>({z.sigma, dagger});
    auto eta = map_on_tuples(*z.carrier, zd->dim(), [&](const auto& t) {
        Vec<K> col = zd->zero();
        for (const auto& [sc, c1] : g.sigma->mc().lift(g.sigma->coaction().column(t[0])))
            for (const auto& [fv, c2] : g.source->lift(cinv.column(sc[1])))
                zd->add_pure(col, {sig.basis(sc[0]), dc.pure({pair.dagger->basis(fv[0]), z.carrier->pure_basis({fv[1], t[1]})})},
                             k.mul(c1, c2));
        return col;
    });
    auto pr = chain<K>({dagger, z.sigma});
    auto eps = map_on_tuples(*pr, c.base()->dim(), [&](const auto& t) {
        auto fz = dc.basis_tuple(t[0]);
        return dual.apply(fz[0], z.sigma->left_act(fz[1]).column(t[1]));
    });
    out.context = make_context(n, z.sigma, dagger, eta, eps);
    auto vr = validate_context(*out.context);
    rep.append(vr);
    std::string zdim = "context over Z not valid";
    if (vr.passed()) {
        out.comatrix = comatrix_coring(*out.context);
        zdim = "comatrix coring over Z has dim " + std::to_string(out.comatrix->coring->dim());
    }

    // C itself is the comatrix coring of the context over R, Sigma* (x)_R Sigma.
    std::string why;
    auto cmp = comatrix_comparison(g, &why);
    if (!cmp) {
        rep.add(n + ".theta_iso", false, "no context over " + g.r()->name() + ": " + why + "; " + zdim);
        return out;
    }
    out.theta = cmp->theta;
    const auto& d = *cmp->comatrix.coring;
    auto rk = lin::rank(out.theta);
    rep.add(n + ".theta_iso", rk == d.dim() && rk == c.dim(),
            "rank " + std::to_string(rk) + " from dim " + std::to_string(d.dim()) + " to dim " + std::to_string(c.dim()) + "; " + zdim);
    add_coring_morphism_check(rep, n + ".theta", out.theta, d, c);
    out.over_r = std::move(cmp);
    return out;
}

/// The counit of C factors as evaluation after can^{-1}.
template <ExactField K>
ValidationReport counit_factorization_check(const GaloisInstance<K>& g) {
    ValidationReport rep;
    const std::string name = g.name + ".counit_is_evaluation";
    if (!g.is_galois()) {
        rep.skip(name, "can is not invertible");
        return rep;
    }
    auto ev = evaluation_map(*g.dual, *g.source);
    detail::add_identity_check(rep, name, Matrix<K>(ev * lin::inverse(g.can)), g.coring().counit());
    return rep;
}

/**
 * The unital case: a dual basis for Sigma over A, j : R -> End^C(Sigma) an
 * algebra isomorphism, and Sigma a projective generator on the family.
 * Throws NotUnital for a ring without unit.
 */
template <ExactField K>
ValidationReport unital_corollary_check(const GaloisInstance<K>& g, const std::vector<FamilyMember<K>>& family,
                                        const std::vector<ComodulePtr<K>>& comodules) {
    auto r = g.r();
    if (!r->is_unital()) throw Error(Errc::not_unital, "ring '" + r->name() + "' has no unit");
    const K& k = g.sigma->field();
    const auto& sig = g.carrier();
    const std::string n = g.name + ".unital";
    ValidationReport rep;

    auto ev = evaluation_pair(g.sigma->carrier_ptr());
    auto z = elementary_ring(ev);
    auto one = ring_map_from_actions(z, {Matrix<K>::identity(k, sig.dim())});
    if (!one) {
        rep.add(n + ".dual_basis", false, "the identity of Sigma is not of finite rank over A");
    } else {
        auto terms = z.carrier->lift(one->column(0));
        Matrix<K> got(k, sig.dim(), sig.dim());
        for (std::size_t u = 0; u < sig.dim(); ++u) {
            Vec<K> v(sig.dim(), k.zero());
            for (const auto& [ef, coef] : terms)
                lin::axpy(k, v, coef, sig.act_right(sig.basis(ef[0]), ev.pair(ef[1], sig.basis(u))));
            got.set_column(u, v);
        }
        auto want = Matrix<K>::identity(k, sig.dim());
        rep.add(n + ".dual_basis", got == want,
                got == want ? std::to_string(terms.size()) + " terms" : detail::column_mismatches(got, want));
    }

    auto e = colinear_endomorphisms(g);
    auto rk = lin::rank(e.j);
    rep.add(n + ".j_iso", rk == r->dim() && rk == e.ring->dim(),
            "rank " + std::to_string(rk) + " from dim " + std::to_string(r->dim()) + " to dim " + std::to_string(e.ring->dim()));
    std::string why;
    rep.add(n + ".j_multiplicative", is_algebra_morphism(e.j, *r, *e.ring, &why), why);

    rep.append(generator_check(g, comodules));
    for (const auto& mem : family) {
        if (!mem.presentation) continue;
        const auto& p = *mem.presentation;
        auto from = share(cofree_comodule(p.free, g.sigma->coring_ptr()));
        auto to = share(cofree_comodule(mem.module, g.sigma->coring_ptr()));
        auto hf = hom_colinear(*g.sigma, *from);
        auto ht = hom_colinear(*g.sigma, *to);
        auto fc = chain<K>({p.free, g.coring().carrier_ptr()});
        auto mc = chain<K>({mem.module, g.coring().carrier_ptr()});
        auto post = hf->post_compose(map_tensor_coring(p.pi, *fc, *mc), *ht);
        auto pr = lin::rank(post);
        rep.add(n + ".lifting." + mem.module->name(), pr == ht->dim(),
                "rank " + std::to_string(pr) + " onto dim " + std::to_string(ht->dim()));
    }
    return rep;
}

}  // namespace coring

#endif  // CORING_GALOIS_HPP
