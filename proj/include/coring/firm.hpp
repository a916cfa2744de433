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

#ifndef CORING_FIRM_HPP
#define CORING_FIRM_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coring.hpp"

namespace coring {

/// Rank data for the multiplication map of a module over a ring.
struct FirmCertificate {
    std::size_t tensor_dim = 0;
    std::size_t module_dim = 0;
    std::size_t rank = 0;

    bool firm() const { return tensor_dim == module_dim && rank == module_dim; }
    std::string str() const {
        return "multiplication from dim " + std::to_string(tensor_dim) + " onto dim " + std::to_string(module_dim) +
               " has rank " + std::to_string(rank);
    }
};

/**
 * Firmness of M over R: mu : M (x)_R R -> M (or R (x)_R M -> M for a left
 * module) is bijective, and d is its inverse.
 */
template <ExactField K>
struct FirmWitness {
    BimodulePtr<K> module;
    AlgebraPtr<K> ring;
    ChainPtr<K> chain;  // [M, R] or [R, M]
    Matrix<K> mu;
    Matrix<K> d;
    bool left = false;
};

template <ExactField K>
struct FirmResult {
    std::optional<FirmWitness<K>> witness;
    FirmCertificate certificate;
    explicit operator bool() const { return witness.has_value(); }
};

namespace detail {

template <ExactField K>
FirmResult<K> finish_firmness(BimodulePtr<K> m, AlgebraPtr<K> r, ChainPtr<K> c, Matrix<K> mu, bool left) {
    FirmResult<K> out;
    out.certificate = {c->dim(), m->dim(), lin::rank(mu)};
    if (out.certificate.firm()) {
        auto d = lin::inverse(mu);
        out.witness = FirmWitness<K>{std::move(m), std::move(r), std::move(c), std::move(mu), std::move(d), left};
    }
    return out;
}

}  // namespace detail

/// Right firmness of M over R.
template <ExactField K>
FirmResult<K> firmness(const BimodulePtr<K>& m, const AlgebraPtr<K>& r) {
    if (!same_algebra(m->right(), r))
        throw Error(Errc::algebra_mismatch, "'" + m->name() + "' is not a right module over '" + r->name() + "'");
    auto c = chain<K>({m, share(Bimodule<K>::regular(r))});
    return detail::finish_firmness(m, r, c, right_multiplication_map(*c), false);
}

/// Left firmness: R (x)_R M -> M.
template <ExactField K>
FirmResult<K> left_firmness(const BimodulePtr<K>& m, const AlgebraPtr<K>& r) {
    if (!same_algebra(m->left(), r))
        throw Error(Errc::algebra_mismatch, "'" + m->name() + "' is not a left module over '" + r->name() + "'");
    auto c = chain<K>({share(Bimodule<K>::regular(r)), m});
    return detail::finish_firmness(m, r, c, left_multiplication_map(*c), true);
}

/// True when the witness is a genuine two-sided inverse of its multiplication map.
template <ExactField K>
bool witness_valid(const FirmWitness<K>& w) {
    return w.mu.rows() == w.d.cols() && w.mu.cols() == w.d.rows() && Matrix<K>(w.mu * w.d).is_identity() &&
           Matrix<K>(w.d * w.mu).is_identity();
}

/// Firmness of R as a ring.  The left and right checks are both run and must agree.
template <ExactField K>
FirmResult<K> is_firm_ring(const AlgebraPtr<K>& r) {
    auto reg = share(Bimodule<K>::regular(r));
    auto right = firmness(reg, r);
    auto left = left_firmness(reg, r);
    if (bool(right) != bool(left))
        throw Error(Errc::precondition_failed, "internal invariant: left and right firmness of '" + r->name() + "' disagree");
    return right;
}

/// R-hat = R + k with the adjoined unit last.
template <ExactField K>
struct DorrohExtension {
    AlgebraPtr<K> ring;   // R
    AlgebraPtr<K> rhat;   // R-hat
    Matrix<K> inclusion;  // R -> R-hat
};

template <ExactField K>
DorrohExtension<K> dorroh(const AlgebraPtr<K>& r) {
    const K& k = r->field();
    const std::size_t n = r->dim(), d = n + 1;
    Matrix<K> m(k, d * d, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto p = r->basis_product(i, j);
            for (std::size_t l = 0; l < n; ++l) m(i * d + j, l) = p[l];
        }
    for (std::size_t i = 0; i < n; ++i) {
        m(n * d + i, i) = k.one();
        m(i * d + n, i) = k.one();
    }
    m(n * d + n, n) = k.one();
    Matrix<K> inc(k, d, n);
    for (std::size_t i = 0; i < n; ++i) inc(i, i) = k.one();
    auto rhat = share(Algebra<K>(k, d, m, lin::unit_vec(k, d, n), r->name() + "^"));
    return {r, rhat, inc};
}

/// Extends a right R-action to R-hat (the new unit acts as the identity).
template <ExactField K>
BimodulePtr<K> extend_right(const Bimodule<K>& m, const DorrohExtension<K>& e) {
    auto r = m.right_acts();
    r.push_back(Matrix<K>::identity(m.field(), m.dim()));
    return share(Bimodule<K>(m.left(), e.rhat, m.dim(), m.left_acts(), r, m.name()));
}

template <ExactField K>
BimodulePtr<K> restrict_right_to(const Bimodule<K>& m, const DorrohExtension<K>& e) {
    return share(restrict_right(m, e.ring, e.inclusion));
}

/// R as an R-hat bimodule.
template <ExactField K>
BimodulePtr<K> dorroh_carrier(const DorrohExtension<K>& e) {
    const auto& r = *e.ring;
    std::vector<Matrix<K>> l, rr;
    for (std::size_t i = 0; i < r.dim(); ++i) {
        l.push_back(r.left_mult(r.basis(i)));
        rr.push_back(r.right_mult(r.basis(i)));
    }
    l.push_back(Matrix<K>::identity(r.field(), r.dim()));
    rr.push_back(Matrix<K>::identity(r.field(), r.dim()));
    return share(Bimodule<K>(e.rhat, e.rhat, r.dim(), l, rr, r.name()));
}

/// The coring on R over its Dorroh extension.
template <ExactField K>
struct FirmCoring {
    DorrohExtension<K> ext;
    CoringPtr<K> coring;
};

/// Delta = (R (x)_R R -> R (x)_{R-hat} R) o d_R, epsilon = inclusion.
template <ExactField K>
FirmCoring<K> coring_from_firm_ring(const AlgebraPtr<K>& r, const FirmWitness<K>& w) {
    if (!witness_valid(w) || w.left || !same_algebra(w.ring, r) || !w.module->same_structure(Bimodule<K>::regular(r)))
        throw Error(Errc::not_firm, "witness does not certify '" + r->name() + "' as a firm ring");
    auto ext = dorroh(r);
    auto carrier = dorroh_carrier(ext);
    auto cc = chain<K>({carrier, carrier});
    Matrix<K> delta = identity_comparison(*w.chain, *cc) * w.d;
    return {ext, share(Coring<K>(carrier, delta, ext.inclusion, r->name() + "-coring"))};
}

template <ExactField K>
FirmCoring<K> coring_from_firm_ring(const AlgebraPtr<K>& r) {
    auto f = is_firm_ring(r);
    if (!f) throw Error(Errc::not_firm, "'" + r->name() + "' is not firm: " + f.certificate.str());
    return coring_from_firm_ring(r, *f.witness);
}

/**
 * Best bilinear comultiplication R -> R (x)_{R-hat} R: a right inverse of the
 * multiplication when one exists, else zero.  For a non-firm ring the result
 * must fail the coring axioms.
 */
template <ExactField K>
FirmCoring<K> coring_candidate(const AlgebraPtr<K>& r) {
    const K& k = r->field();
    auto ext = dorroh(r);
    auto carrier = dorroh_carrier(ext);
    auto cc = chain<K>({carrier, carrier});
    auto mu = map_on_tuples(*cc, r->dim(), [&](const auto& t) { return r->basis_product(t[0], t[1]); });
    auto h = hom_bilinear(carrier, cc->result_ptr());
    Matrix<K> sys(k, r->dim() * r->dim(), h->dim());
    for (std::size_t b = 0; b < h->dim(); ++b) sys.set_column(b, lin::vectorize(Matrix<K>(mu * h->element(b))));
    auto x = lin::solve_vec(sys, lin::vectorize(Matrix<K>::identity(k, r->dim())));
    Matrix<K> delta = x ? h->element(*x) : Matrix<K>(k, cc->dim(), r->dim());
    return {ext, share(Coring<K>(carrier, delta, ext.inclusion, r->name() + "-candidate"))};
}

/// A firm right R-module as a comodule: rho = (M (x)_R R -> M (x)_{R-hat} R) o d_M.
template <ExactField K>
Comodule<K> firm_module_to_comodule(const FirmWitness<K>& w, const FirmCoring<K>& fc) {
    if (!witness_valid(w) || w.left) throw Error(Errc::not_firm, "invalid firmness witness for '" + w.module->name() + "'");
    if (!same_algebra(w.ring, fc.ext.ring)) throw Error(Errc::algebra_mismatch, "module and coring over different rings");
    auto mhat = extend_right(*w.module, fc.ext);
    auto t = chain<K>({mhat, fc.coring->carrier_ptr()});
    Matrix<K> rho = identity_comparison(*w.chain, *t) * w.d;
    return Comodule<K>(fc.coring, mhat, rho, w.module->name());
}

/// Inverse direction: restrict to R, and read d off the coaction.
template <ExactField K>
FirmWitness<K> comodule_to_firm_module(const Comodule<K>& c, const FirmCoring<K>& fc) {
    auto m = restrict_right_to(c.carrier(), fc.ext);
    auto reg = share(Bimodule<K>::regular(fc.ext.ring));
    auto mr = chain<K>({m, reg});
    auto cmp = identity_comparison(*mr, c.mc());
    auto d = lin::solve(cmp, c.coaction());
    if (!d) throw Error(Errc::not_firm, "coaction of '" + c.name() + "' does not factor through M (x)_R R");
    FirmWitness<K> w{m, fc.ext.ring, mr, right_multiplication_map(*mr), *d, false};
    if (!witness_valid(w)) throw Error(Errc::not_firm, "'" + c.name() + "' restricted to '" + fc.ext.ring->name() + "'");
    return w;
}

// ---- dual pairs and elementary rings ---------------------------------------

/**
 * (Sigma, Sigma-dagger, mu) with Sigma a B-A bimodule, Sigma-dagger an A-B
 * bimodule and mu : Sigma-dagger (x)_B Sigma -> A.
 */
template <ExactField K>
struct DualPair {
    BimodulePtr<K> sigma;
    BimodulePtr<K> dagger;
    ChainPtr<K> pairing;  // [dagger, sigma]
    Matrix<K> mu;

    Vec<K> pair(std::size_t phi, const Vec<K>& u) const {
        return mu.apply(pairing->pure({dagger->basis(phi), u}));
    }
};

template <ExactField K>
DualPair<K> make_dual_pair(BimodulePtr<K> sigma, BimodulePtr<K> dagger, Matrix<K> mu) {
    auto p = chain<K>({dagger, sigma});
    if (mu.cols() != p->dim() || mu.rows() != sigma->right()->dim())
        throw Error(Errc::dimension_mismatch, "pairing of '" + dagger->name() + "' with '" + sigma->name() + "'");
    return {std::move(sigma), std::move(dagger), std::move(p), std::move(mu)};
}

/// (Sigma, Sigma*, ev) for a B-A bimodule Sigma.
template <ExactField K>
DualPair<K> evaluation_pair(const BimodulePtr<K>& sigma, MapSpacePtr<K>* dual_out = nullptr) {
    auto dual = dual_module(sigma);
    auto p = chain<K>({dual->bimodule_ptr(), sigma});
    auto ev = evaluation_map(*dual, *p);
    if (dual_out) *dual_out = dual;
    return {sigma, dual->bimodule_ptr(), p, ev};
}

/// The ring on Sigma (x)_A Sigma-dagger, with its actions on both factors.
template <ExactField K>
struct ElementaryRing {
    AlgebraPtr<K> ring;
    ChainPtr<K> carrier;    // [Sigma, dagger]
    BimodulePtr<K> sigma;   // Sigma as a ring-A bimodule
    BimodulePtr<K> dagger;  // dagger as an A-ring bimodule
};

template <ExactField K>
ElementaryRing<K> elementary_ring(const DualPair<K>& p, std::string name = "Z") {
    const K& k = p.sigma->field();
    const auto& sig = *p.sigma;
    const auto& dag = *p.dagger;
    auto c = chain<K>({p.sigma, p.dagger});
    const std::size_t d = c->dim();
    // (u (x) phi) acting on Sigma: v -> u mu(phi (x) v); on dagger: psi -> mu(psi (x) u) phi
    std::vector<Matrix<K>> on_sigma, on_dagger;
    for (std::size_t q = 0; q < d; ++q) {
        auto t = c->basis_tuple(q);
        Matrix<K> ls(k, sig.dim(), sig.dim()), rd(k, dag.dim(), dag.dim());
        for (std::size_t v = 0; v < sig.dim(); ++v) ls.set_column(v, sig.act_right(sig.basis(t[0]), p.pair(t[1], sig.basis(v))));
        for (std::size_t s = 0; s < dag.dim(); ++s) rd.set_column(s, dag.act_left(p.pair(s, sig.basis(t[0])), dag.basis(t[1])));
        on_sigma.push_back(std::move(ls));
        on_dagger.push_back(std::move(rd));
    }
    Matrix<K> mult(k, d * d, d);
    for (std::size_t a = 0; a < d; ++a) {
        auto ta = c->basis_tuple(a);
        for (std::size_t b = 0; b < d; ++b) {
            auto tb = c->basis_tuple(b);
            auto u = sig.act_right(sig.basis(ta[0]), p.pair(ta[1], sig.basis(tb[0])));
            mult.set_row(a * d + b, c->pure({u, dag.basis(tb[1])}));
        }
    }
    auto z = share(Algebra<K>(k, d, mult, std::nullopt, name).with_detected_unit());
    auto s = share(Bimodule<K>(z, sig.right(), sig.dim(), on_sigma, sig.right_acts(), sig.name()));
    auto g = share(Bimodule<K>(dag.left(), z, dag.dim(), dag.left_acts(), on_dagger, dag.name()));
    return {z, c, s, g};
}

/// mu bilinear over A, and the elementary ring associative.
template <ExactField K>
ValidationReport validate_dual_pair(const DualPair<K>& p, const std::string& name = "pair") {
    ValidationReport rep;
    auto a = share(Bimodule<K>::regular(p.sigma->right()));
    rep.add(name + ".mu_bilinear", is_bilinear(p.mu, p.pairing->result(), *a));
    auto z = elementary_ring(p);
    rep.append(validate_algebra(*z.ring), name + ".");
    return rep;
}

/// Solves for the element of the elementary ring acting on Sigma as each given operator.
template <ExactField K>
std::optional<Matrix<K>> ring_map_from_actions(const ElementaryRing<K>& z, const std::vector<Matrix<K>>& ops) {
    const K& k = z.ring->field();
    const std::size_t n = z.sigma->dim();
    Matrix<K> sys(k, n * n, z.ring->dim());
    for (std::size_t q = 0; q < z.ring->dim(); ++q) sys.set_column(q, lin::vectorize(z.sigma->left_act(q)));
    Matrix<K> out(k, z.ring->dim(), ops.size());
    for (std::size_t i = 0; i < ops.size(); ++i) {
        auto x = lin::solve_vec(sys, lin::vectorize(ops[i]));
        if (!x) return std::nullopt;
        out.set_column(i, *x);
    }
    return out;
}

/**
 * An R-firm dual pair built from Sigma and iota : R -> Sigma (x)_A Sigma*.
 * sigma_r is Sigma with the induced left R-action, and dagger = Sigma* (x)_R R.
 */
template <ExactField K>
struct FirmDualPair {
    AlgebraPtr<K> r;
    Matrix<K> iota;             // R -> Z
    ElementaryRing<K> z;        // Sigma (x)_A Sigma*
    MapSpacePtr<K> dual;        // Sigma* as maps out of sigma_r
    BimodulePtr<K> sigma_r;     // R-A
    ChainPtr<K> dagger_chain;   // [Sigma*, R]
    DualPair<K> pair;           // (sigma_r, dagger, mu)
    FirmWitness<K> sigma_firm;  // left, over R
    FirmWitness<K> dagger_firm; // right, over R
    FirmWitness<K> ring_firm;   // d_R
    Matrix<K> iota_dagger;      // R -> Sigma (x)_A dagger
    ChainPtr<K> z_dagger;       // [sigma_r, dagger]
};

template <ExactField K>
struct FirmProjectivity {
    std::optional<FirmDualPair<K>> pair;
    std::string reason;
    explicit operator bool() const { return pair.has_value(); }
};

template <ExactField K>
FirmProjectivity<K> is_firmly_projective(const BimodulePtr<K>& sigma, const AlgebraPtr<K>& r, const Matrix<K>& iota) {
    const K& k = sigma->field();
    auto ev = evaluation_pair(sigma);
    auto z = elementary_ring(ev);
    if (iota.rows() != z.ring->dim() || iota.cols() != r->dim())
        throw Error(Errc::dimension_mismatch, "iota has shape " + iota.shape());
    std::string why;
    if (!is_algebra_morphism(iota, *r, *z.ring, &why))
        throw Error(Errc::not_algebra_morphism, "iota : " + r->name() + " -> " + z.ring->name() + ": " + why);

    FirmProjectivity<K> out;
    auto rf = is_firm_ring(r);
    if (!rf) {
        out.reason = "ring '" + r->name() + "' is not firm: " + rf.certificate.str();
        return out;
    }
    auto sigma_r = share(restrict_left(*z.sigma, r, iota));
    auto sf = left_firmness(sigma_r, r);
    if (!sf) {
        out.reason = "'" + sigma->name() + "' is not firm over '" + r->name() + "': " + sf.certificate.str();
        return out;
    }
    auto dual = dual_module(sigma_r);
    auto reg = share(Bimodule<K>::regular(r));
    auto dc = chain<K>({dual->bimodule_ptr(), reg});
    auto dagger = dc->result_ptr();
    auto df = firmness(dagger, r);
    if (!df) {
        out.reason = "'" + dagger->name() + "' is not firm over '" + r->name() + "': " + df.certificate.str();
        return out;
    }
    // mu(phi (x) r (x) u) = phi(r u)
    auto pairing = chain<K>({dagger, sigma_r});
    auto mu = map_on_tuples(*pairing, sigma->right()->dim(), [&](const auto& t) {
        auto pr = dc->basis_tuple(t[0]);
        return dual->apply(pr[0], sigma_r->left_act(pr[1]).column(t[1]));
    });
    DualPair<K> pair{sigma_r, dagger, pairing, mu};

    // iota-dagger = (iota (x) R) o d_R
    auto zd = chain<K>({sigma_r, dagger});
    const auto& rr = *rf.witness;
    Matrix<K> idag(k, zd->dim(), r->dim());
    for (std::size_t j = 0; j < r->dim(); ++j) {
        Vec<K> col = zd->zero();
        for (const auto& [ab, c1] : rr.chain->lift(rr.d.column(j)))
            for (const auto& [uf, c2] : z.carrier->lift(iota.column(ab[0])))
                zd->add_pure(col, {sigma_r->basis(uf[0]), dc->pure_basis({uf[1], ab[1]})}, k.mul(c1, c2));
        idag.set_column(j, col);
    }
    out.pair = FirmDualPair<K>{r, iota, z, dual, sigma_r, dc, pair, *sf.witness, *df.witness, *rf.witness, idag, zd};
    return out;
}

/// iota with R acting on Sigma through the given left actions, if Z contains them.
template <ExactField K>
std::optional<Matrix<K>> iota_from_actions(const BimodulePtr<K>& sigma, const std::vector<Matrix<K>>& acts) {
    auto z = elementary_ring(evaluation_pair(sigma));
    return ring_map_from_actions(z, acts);
}

/**
 * Z firm and Sigma firm over Z, through the explicit inverses
 * d_{Z,Sigma}(u) = iota(r) (x)_Z u' and d_Z(u (x) phi) = iota(r) (x)_Z (u' (x) phi)
 * where d_{R,Sigma}(u) = r (x) u'.
 */
template <ExactField K>
ValidationReport firm_over_elementary_check(const FirmDualPair<K>& f) {
    ValidationReport rep;
    const K& k = f.r->field();
    const auto& z = f.z;
    auto zreg = share(Bimodule<K>::regular(z.ring));
    auto zs = chain<K>({zreg, z.sigma});
    auto zz = chain<K>({zreg, zreg});
    const auto& ds = f.sigma_firm;  // [R, Sigma_R]
    const auto& sig = *z.sigma;

    Matrix<K> d_zs(k, zs->dim(), sig.dim());
    for (std::size_t u = 0; u < sig.dim(); ++u) {
        Vec<K> col = zs->zero();
        for (const auto& [ru, c] : ds.chain->lift(ds.d.column(u)))
            zs->add_pure(col, {f.iota.column(ru[0]), sig.basis(ru[1])}, c);
        d_zs.set_column(u, col);
    }
    auto mu_zs = left_multiplication_map(*zs);
    rep.add("sigma_firm_over_Z.mu_d", Matrix<K>(mu_zs * d_zs).is_identity());
    rep.add("sigma_firm_over_Z.d_mu", Matrix<K>(d_zs * mu_zs).is_identity());

    Matrix<K> d_z(k, zz->dim(), z.ring->dim());
    for (std::size_t q = 0; q < z.ring->dim(); ++q) {
        auto t = z.carrier->basis_tuple(q);  // (u, phi)
        Vec<K> col = zz->zero();
        for (const auto& [ru, c] : ds.chain->lift(ds.d.column(t[0])))
            zz->add_pure(col, {f.iota.column(ru[0]), z.carrier->pure_basis({ru[1], t[1]})}, c);
        d_z.set_column(q, col);
    }
    auto mu_z = right_multiplication_map(*zz);
    rep.add("Z_firm.mu_d", Matrix<K>(mu_z * d_z).is_identity());
    rep.add("Z_firm.d_mu", Matrix<K>(d_z * mu_z).is_identity());

    auto zf = is_firm_ring(z.ring);
    rep.add("Z_firm.generic", bool(zf), zf.certificate.str());
    auto id = Matrix<K>::identity(k, z.ring->dim());
    auto again = is_firmly_projective(z.sigma, z.ring, id);
    rep.add("firmly_projective_over_Z", bool(again), again.reason);
    return rep;
}

/**
 * The two mutually inverse maps between dagger and Sigma* (x)_R R:
 * alpha(phi) = zeta(phi') (x) r with d(phi) = phi' (x) r and zeta(phi)(u) = mu(phi (x) u),
 * beta(psi (x) r) = psi(e) f with iota-dagger(r) = e (x) f.
 */
template <ExactField K>
ValidationReport dagger_iso_check(const FirmDualPair<K>& f) {
    ValidationReport rep;
    const K& k = f.r->field();
    const auto& dag = *f.pair.dagger;
    const auto& sig = *f.sigma_r;
    const auto& dc = *f.dagger_chain;
    const auto& dd = f.dagger_firm;
    auto zeta = [&](std::size_t phi) {
        Matrix<K> m(k, sig.right()->dim(), sig.dim());
        for (std::size_t u = 0; u < sig.dim(); ++u) m.set_column(u, f.pair.pair(phi, sig.basis(u)));
        return f.dual->coords(m);
    };
    Matrix<K> alpha(k, dc.dim(), dag.dim());
    for (std::size_t phi = 0; phi < dag.dim(); ++phi) {
        Vec<K> col = dc.zero();
        for (const auto& [pr, c] : dd.chain->lift(dd.d.column(phi)))
            dc.add_pure(col, {zeta(pr[0]), f.r->basis(pr[1])}, c);
        alpha.set_column(phi, col);
    }
    Matrix<K> beta(k, dag.dim(), dc.dim());
    for (std::size_t q = 0; q < dc.dim(); ++q) {
        auto t = dc.basis_tuple(q);  // (psi, r)
        Vec<K> col(dag.dim(), k.zero());
        for (const auto& [ef, c] : f.z_dagger->lift(f.iota_dagger.column(t[1]))) {
            auto a = f.dual->apply(t[0], sig.basis(ef[0]));
            lin::axpy(k, col, c, dag.act_left(a, dag.basis(ef[1])));
        }
        beta.set_column(q, col);
    }
    rep.add("dagger_iso.beta_alpha", Matrix<K>(beta * alpha).is_identity());
    rep.add("dagger_iso.alpha_beta", Matrix<K>(alpha * beta).is_identity());
    return rep;
}

}  // namespace coring

#endif  // CORING_FIRM_HPP
