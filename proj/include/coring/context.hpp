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

#ifndef CORING_CONTEXT_HPP
#define CORING_CONTEXT_HPP

#include <string>
#include <utility>
#include <vector>

#include "firm.hpp"

namespace coring {

/**
 * Comatrix coring context (R, A, Sigma, Sigma-dagger, eta, eps): Sigma is
 * R-A, dagger is A-R, eta : R -> Sigma (x)_A dagger and
 * eps : dagger (x)_R Sigma -> A.
 */
template <ExactField K>
struct ComatrixContext {
    std::string name;
    AlgebraPtr<K> r, a;
    BimodulePtr<K> sigma, dagger;
    ChainPtr<K> z;        // [sigma, dagger] over A
    ChainPtr<K> pairing;  // [dagger, sigma] over R
    Matrix<K> eta, eps;
};

template <ExactField K>
ComatrixContext<K> make_context(std::string name, BimodulePtr<K> sigma, BimodulePtr<K> dagger, Matrix<K> eta, Matrix<K> eps) {
    auto r = sigma->left();
    auto a = sigma->right();
    if (!same_algebra(dagger->left(), a) || !same_algebra(dagger->right(), r))
        throw Error(Errc::algebra_mismatch, "context '" + name + "': '" + dagger->name() + "' is not an " + a->name() + "-" +
                                                r->name() + " bimodule");
    auto z = chain<K>({sigma, dagger});
    auto p = chain<K>({dagger, sigma});
    if (eta.rows() != z->dim() || eta.cols() != r->dim())
        throw Error(Errc::dimension_mismatch, "context '" + name + "': eta has shape " + eta.shape());
    if (eps.rows() != a->dim() || eps.cols() != p->dim())
        throw Error(Errc::dimension_mismatch, "context '" + name + "': eps has shape " + eps.shape());
    return {std::move(name), r, a, std::move(sigma), std::move(dagger), z, p, std::move(eta), std::move(eps)};
}

/// Both bilinearities and the two triangle diagrams.
template <ExactField K>
ValidationReport validate_context(const ComatrixContext<K>& c) {
    ValidationReport rep;
    const std::string n = c.name;
    const auto& sig = *c.sigma;
    const auto& dag = *c.dagger;
    auto rreg = share(Bimodule<K>::regular(c.r));
    auto areg = share(Bimodule<K>::regular(c.a));
    rep.add(n + ".eta_bilinear", is_bilinear(c.eta, *rreg, c.z->result()));
    rep.add(n + ".eps_bilinear", is_bilinear(c.eps, c.pairing->result(), *areg));

    auto rs = chain<K>({rreg, c.sigma});
    auto left = map_on_tuples(*rs, sig.dim(), [&](const auto& t) {
        Vec<K> out(sig.dim(), sig.field().zero());
        for (const auto& [ef, coef] : c.z->lift(c.eta.column(t[0])))
            lin::axpy(sig.field(), out, coef, sig.act_right(sig.basis(ef[0]), c.eps.apply(c.pairing->pure_basis({ef[1], t[1]}))));
        return out;
    });
    detail::add_identity_check(rep, n + ".left_triangle", left, left_multiplication_map(*rs));

    auto dr = chain<K>({c.dagger, rreg});
    auto right = map_on_tuples(*dr, dag.dim(), [&](const auto& t) {
        Vec<K> out(dag.dim(), dag.field().zero());
        for (const auto& [ef, coef] : c.z->lift(c.eta.column(t[1])))
            lin::axpy(dag.field(), out, coef, dag.act_left(c.eps.apply(c.pairing->pure_basis({t[0], ef[0]})), dag.basis(ef[1])));
        return out;
    });
    detail::add_identity_check(rep, n + ".right_triangle", right, right_multiplication_map(*dr));
    return rep;
}

/// The comatrix coring D = dagger (x)_R Sigma with its comodules Sigma (right) and dagger (left).
template <ExactField K>
struct ComatrixCoring {
    CoringPtr<K> coring;
    ComodulePtr<K> sigma;
    ChainPtr<K> dagger_chain;  // [D, dagger]
    Matrix<K> dagger_coaction;
    FirmWitness<K> sigma_firm, dagger_firm;
};

template <ExactField K>
ComatrixCoring<K> comatrix_coring(const ComatrixContext<K>& c) {
    auto rep = validate_context(c);
    if (!rep.passed()) throw Error(Errc::invalid_context, "context '" + c.name + "': " + rep.first_failure()->name);
    auto sf = left_firmness(c.sigma, c.r);
    if (!sf) throw Error(Errc::not_firm, "context '" + c.name + "': Sigma: " + sf.certificate.str());
    auto df = firmness(c.dagger, c.r);
    if (!df) throw Error(Errc::not_firm, "context '" + c.name + "': dagger: " + df.certificate.str());
    const auto& ds = *sf.witness;
    const auto& dd = *df.witness;
    const K& k = c.sigma->field();
    const auto& p = *c.pairing;
    auto d = p.result_ptr();

    auto cc = chain<K>({d, d});
    auto delta = map_on_tuples(p, cc->dim(), [&](const auto& t) {
        Vec<K> out = cc->zero();
        for (const auto& [ru, c1] : ds.chain->lift(ds.d.column(t[1])))
            for (const auto& [ef, c2] : c.z->lift(c.eta.column(ru[0])))
                cc->add_pure(out, {p.pure_basis({t[0], ef[0]}), p.pure_basis({ef[1], ru[1]})}, k.mul(c1, c2));
        return out;
    });
    auto coring = share(Coring<K>(d, delta, c.eps, c.name + ".D"));

    auto sd = chain<K>({c.sigma, d});
    Matrix<K> rho(k, sd->dim(), c.sigma->dim());
    for (std::size_t u = 0; u < c.sigma->dim(); ++u) {
        Vec<K> out = sd->zero();
        for (const auto& [ru, c1] : ds.chain->lift(ds.d.column(u)))
            for (const auto& [ef, c2] : c.z->lift(c.eta.column(ru[0])))
                sd->add_pure(out, {c.sigma->basis(ef[0]), p.pure_basis({ef[1], ru[1]})}, k.mul(c1, c2));
        rho.set_column(u, out);
    }
    auto sigma = share(Comodule<K>(coring, c.sigma, rho, c.sigma->name()));

    auto dg = chain<K>({d, c.dagger});
    Matrix<K> lam(k, dg->dim(), c.dagger->dim());
    for (std::size_t phi = 0; phi < c.dagger->dim(); ++phi) {
        Vec<K> out = dg->zero();
        for (const auto& [pr, c1] : dd.chain->lift(dd.d.column(phi)))
            for (const auto& [ef, c2] : c.z->lift(c.eta.column(pr[1])))
                dg->add_pure(out, {p.pure_basis({pr[0], ef[0]}), c.dagger->basis(ef[1])}, k.mul(c1, c2));
        lam.set_column(phi, out);
    }
    return {coring, sigma, dg, lam, ds, dd};
}

/// Counit and coassociativity of the left D-coaction on dagger.
template <ExactField K>
ValidationReport validate_left_coaction(const ComatrixCoring<K>& m, const std::string& name) {
    ValidationReport rep;
    const auto& c = *m.coring;
    const auto& dg = *m.dagger_chain;
    const auto& dag = dg.factor(1);
    auto counit = map_on_tuples(dg, dag.dim(), [&](const auto& t) { return dag.act_left(c.counit().column(t[0]), dag.basis(t[1])); });
    detail::add_identity_check(rep, name + ".counit", Matrix<K>(counit * m.dagger_coaction), Matrix<K>::identity(dag.field(), dag.dim()));

    auto ddg = chain<K>({c.carrier_ptr(), c.carrier_ptr(), dg.factor_ptr(1)});
    auto delta_leg = comult_left_leg(c, dg, *ddg, 0);
    auto lam_leg = map_on_tuples(dg, ddg->dim(), [&](const auto& t) {
        Vec<K> out = ddg->zero();
        for (const auto& [xf, coef] : dg.lift(m.dagger_coaction.column(t[1]))) ddg->add_pure_basis(out, {t[0], xf[0], xf[1]}, coef);
        return out;
    });
    detail::add_identity_check(rep, name + ".coassociative", Matrix<K>(delta_leg * m.dagger_coaction),
                               Matrix<K>(lam_leg * m.dagger_coaction));
    return rep;
}

/**
 * Triangle identities of the adjunction F = - (x)_R Sigma, G = - (x)_A dagger:
 * beta_{FN} o F(alpha_N) = id on [N, Sigma] and G(beta_M) o alpha_{GM} = id on [M, dagger].
 */
template <ExactField K>
ValidationReport adjunction_check(const ComatrixContext<K>& c, const std::vector<BimodulePtr<K>>& ns,
                                  const std::vector<BimodulePtr<K>>& ms) {
    ValidationReport rep;
    const K& k = c.sigma->field();
    const auto& sig = *c.sigma;
    for (const auto& n : ns) {
        const std::string name = c.name + ".triangle_F." + n->name();
        auto fw = firmness(n, c.r);
        if (!fw) {
            rep.skip(name, "'" + n->name() + "' is not firm: " + fw.certificate.str());
            continue;
        }
        const auto& w = *fw.witness;
        auto ns2 = chain<K>({n, c.sigma});
        auto big = chain<K>({n, c.sigma, c.dagger, c.sigma});
        auto f_alpha = map_on_tuples(*ns2, big->dim(), [&](const auto& t) {
            Vec<K> out = big->zero();
            for (const auto& [nr, c1] : w.chain->lift(w.d.column(t[0])))
                for (const auto& [ef, c2] : c.z->lift(c.eta.column(nr[1])))
                    big->add_pure_basis(out, {nr[0], ef[0], ef[1], t[1]}, k.mul(c1, c2));
            return out;
        });
        auto beta = map_on_tuples(*big, ns2->dim(), [&](const auto& t) {
            return ns2->pure({n->basis(t[0]), sig.act_right(sig.basis(t[1]), c.eps.apply(c.pairing->pure_basis({t[2], t[3]})))});
        });
        detail::add_identity_check(rep, name, Matrix<K>(beta * f_alpha), Matrix<K>::identity(k, ns2->dim()));
    }
    auto df = firmness(c.dagger, c.r);
    for (const auto& m : ms) {
        const std::string name = c.name + ".triangle_G." + m->name();
        if (!df) {
            rep.skip(name, "dagger is not firm: " + df.certificate.str());
            continue;
        }
        const auto& w = *df.witness;
        auto md = chain<K>({m, c.dagger});
        auto big = chain<K>({m, c.dagger, c.sigma, c.dagger});
        auto alpha = map_on_tuples(*md, big->dim(), [&](const auto& t) {
            Vec<K> out = big->zero();
            for (const auto& [pr, c1] : w.chain->lift(w.d.column(t[1])))
                for (const auto& [ef, c2] : c.z->lift(c.eta.column(pr[1])))
                    big->add_pure_basis(out, {t[0], pr[0], ef[0], ef[1]}, k.mul(c1, c2));
            return out;
        });
        auto g_beta = map_on_tuples(*big, md->dim(), [&](const auto& t) {
            return md->pure({m->act_right(m->basis(t[0]), c.eps.apply(c.pairing->pure_basis({t[1], t[2]}))), c.dagger->basis(t[3])});
        });
        detail::add_identity_check(rep, name, Matrix<K>(g_beta * alpha), Matrix<K>::identity(k, md->dim()));
    }
    return rep;
}

}  // namespace coring

#endif  // CORING_CONTEXT_HPP
