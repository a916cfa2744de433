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

#ifndef CORING_CORPUS_HPP
#define CORING_CORPUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "context.hpp"
#include "standard.hpp"

namespace coring {

template <ExactField K>
struct NamedMorphism {
    std::string name;
    AlgebraPtr<K> source, target;
    Matrix<K> map;
};

template <ExactField K>
struct GaloisEntry {
    std::string name;
    ComodulePtr<K> sigma;
};

struct Parameters {
    std::size_t family_size = 10;
    std::uint64_t seed = 1;
    std::size_t max_dim = 12;

    bool operator==(const Parameters&) const = default;
};

/**
 * A named collection of structures over one field, with the suites to run
 * and the verdict each suite is expected to reach ("pass" or "fail").
 * Structures referenced by others are registered automatically.
 */
template <ExactField K>
struct Instance {
    std::string name;
    std::string description;
    K field{};
    std::vector<AlgebraPtr<K>> algebras;
    std::vector<BimodulePtr<K>> bimodules;
    std::vector<CoringPtr<K>> corings;
    std::vector<ComodulePtr<K>> comodules;
    std::vector<NamedMorphism<K>> morphisms;
    std::vector<ComatrixContext<K>> contexts;
    std::vector<GaloisEntry<K>> galois;
    std::vector<std::string> suites{"all"};
    Parameters params;
    std::map<std::string, std::string> expect;

    Instance() = default;
    Instance(std::string n, K k, std::string desc = {}) : name(std::move(n)), description(std::move(desc)), field(std::move(k)) {}

    AlgebraPtr<K> add(const AlgebraPtr<K>& a) {
        for (const auto& x : algebras)
            if (x == a || (x->name() == a->name() && x->same_structure(*a))) return x;
        for (const auto& x : algebras)
            if (x->name() == a->name())
                throw Error(Errc::invalid_params, "instance '" + name + "': two algebras named '" + a->name() + "'");
        algebras.push_back(a);
        return a;
    }
    BimodulePtr<K> add(const BimodulePtr<K>& m) {
        add(m->left());
        add(m->right());
        for (const auto& x : bimodules)
            if (x == m || (x->name() == m->name() && x->same_structure(*m))) return x;
        for (const auto& x : bimodules)
            if (x->name() == m->name())
                throw Error(Errc::invalid_params, "instance '" + name + "': two bimodules named '" + m->name() + "'");
        bimodules.push_back(m);
        return m;
    }
    CoringPtr<K> add(const CoringPtr<K>& c) {
        add(c->carrier_ptr());
        for (const auto& x : corings)
            if (x == c) return x;
        corings.push_back(c);
        return c;
    }
    ComodulePtr<K> add(const ComodulePtr<K>& m) {
        add(m->coring_ptr());
        add(m->carrier_ptr());
        for (const auto& x : comodules)
            if (x == m) return x;
        comodules.push_back(m);
        return m;
    }
    void add_morphism(std::string n, const AlgebraPtr<K>& s, const AlgebraPtr<K>& t, Matrix<K> f) {
        morphisms.push_back({std::move(n), add(s), add(t), std::move(f)});
    }
    void add_context(ComatrixContext<K> c) {
        add(c.sigma);
        add(c.dagger);
        contexts.push_back(std::move(c));
    }
    void add_galois(std::string n, const ComodulePtr<K>& s) { galois.push_back({std::move(n), add(s)}); }

    void expect_all(const std::string& verdict) {
        for (const char* s : {"axioms", "firm", "dorroh", "context", "galois", "comonadic", "equivalence", "compare", "all"})
            expect[s] = verdict;
    }
};

using AnyInstance = std::variant<Instance<Rationals>, Instance<PrimeField>>;

inline const std::string& instance_name(const AnyInstance& a) {
    return std::visit([](const auto& i) -> const std::string& { return i.name; }, a);
}

namespace corpus {

template <ExactField K>
BimodulePtr<K> renamed(const BimodulePtr<K>& m, std::string name) {
    auto c = *m;
    c.set_name(std::move(name));
    return share(std::move(c));
}

template <ExactField K>
AlgebraPtr<K> renamed(const Algebra<K>& a, std::string name) {
    auto c = a;
    c.set_name(std::move(name));
    return share(std::move(c));
}

template <ExactField K>
Matrix<K> scaled(const Matrix<K>& m, long s) {
    return m.scaled(m.field().from_int(s));
}

/// R = A = k, C = k, Sigma = k; with the trivial context.
template <ExactField K>
Instance<K> trivial(const K& k) {
    Instance<K> in("trivial", k, "ground field as coring, comodule and context");
    auto g = share(Algebra<K>::ground(k));
    auto c = share(Coring<K>::trivial(g));
    auto s = share(Bimodule<K>::vector_space(g, 1, "S"));
    auto sd = share(Bimodule<K>::vector_space(g, 1, "Sd"));
    auto sigma = share(Comodule<K>(c, s, Matrix<K>::identity(k, 1), "S"));
    in.add_galois("S", sigma);
    in.add_context(make_context("unit", s, sd, Matrix<K>::identity(k, 1), Matrix<K>::identity(k, 1)));
    in.expect_all("pass");
    return in;
}

/// C = A (x)_k A for A = k[x]/(x^2), Sigma = A with rho(a) = 1 (x) a, R = k.
template <ExactField K>
Instance<K> sweedler(const K& k, std::string name = "sweedler") {
    Instance<K> in(std::move(name), k, "Sweedler coring of k inside k[x]/(x^2)");
    auto g = share(Algebra<K>::ground(k));
    auto a = renamed(Algebra<K>::truncated_polynomials(k, 2), "A");
    auto areg = share(Bimodule<K>::regular(a));
    auto left = renamed(share(forget_right(*areg, g)), "A_k");
    auto right = renamed(share(forget_left(*areg, g)), "kA");
    auto ch = chain<K>({left, right});
    auto carrier = renamed(ch->result_ptr(), "AkA");
    auto cc = chain<K>({carrier, carrier});
    const auto& one = *a->unit();
    auto delta = map_on_tuples(*ch, cc->dim(), [&](const auto& t) {
        return cc->pure({ch->pure({a->basis(t[0]), one}), ch->pure({one, a->basis(t[1])})});
    });
    auto eps = map_on_tuples(*ch, a->dim(), [&](const auto& t) { return a->basis_product(t[0], t[1]); });
    auto c = share(Coring<K>(carrier, delta, eps, "AkA"));
    auto sc = chain<K>({right, carrier});
    Matrix<K> rho(k, sc->dim(), right->dim());
    for (std::size_t u = 0; u < right->dim(); ++u) rho.set_column(u, sc->pure({one, ch->pure({one, a->basis(u)})}));
    in.add_galois("A", share(Comodule<K>(c, right, rho, "A")));
    in.expect_all("pass");
    return in;
}

/// The n x n matrix coring over k with Sigma = k^n, R = k.
template <ExactField K>
Instance<K> matrix_coring(const K& k, std::size_t n, std::string name) {
    Instance<K> in(std::move(name), k, std::to_string(n) + "x" + std::to_string(n) + " matrix coring with its column comodule");
    auto g = share(Algebra<K>::ground(k));
    auto mc = share(standard::matrix_coring(g, n));
    auto col = share(standard::column_comodule(mc, n));
    in.add_galois("col", col);
    in.expect_all("pass");
    return in;
}

/// (M_n, k, k^n, rows, e_ij -> e_i (x) e_j*, evaluation) with Sigma over the trivial k-coring.
template <ExactField K>
ComatrixContext<K> matrix_context(const AlgebraPtr<K>& mn, const AlgebraPtr<K>& g, std::size_t n, long scale = 1) {
    const K& k = g->field();
    auto col = renamed(standard::column_module(mn, g, n), "cols");
    auto row = renamed(standard::row_module(mn, g, n), "rows");
    auto z = chain<K>({col, row});
    Matrix<K> eta(k, z->dim(), n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) eta.set_column(i * n + j, z->pure_basis({i, j}));
    auto p = chain<K>({row, col});
    auto eps = map_on_tuples(*p, 1, [&](const auto& t) { return Vec<K>{k.from_int(t[0] == t[1] ? scale : 0)}; });
    return make_context("M" + std::to_string(n), col, row, eta, eps);
}

template <ExactField K>
Instance<K> matrix_context_instance(const K& k, std::size_t n, std::string name) {
    Instance<K> in(std::move(name), k, "k^" + std::to_string(n) + " over M_" + std::to_string(n) + " and the trivial coring k");
    auto g = share(Algebra<K>::ground(k));
    auto mn = share(Algebra<K>::matrices(k, n));
    auto ctx = matrix_context(mn, g, n);
    auto c = share(Coring<K>::trivial(g));
    auto sc = chain<K>({ctx.sigma, c->carrier_ptr()});
    Matrix<K> rho(k, sc->dim(), n);
    for (std::size_t u = 0; u < n; ++u) rho.set_column(u, sc->pure({ctx.sigma->basis(u), Vec<K>{k.one()}}));
    in.add_galois("cols", share(Comodule<K>(c, ctx.sigma, rho, "cols")));
    in.add_context(std::move(ctx));
    in.expect_all("pass");
    return in;
}

/// A = upper triangular 2x2, C = A, Sigma = A over the diagonal subring (not an ideal).
template <ExactField K>
Instance<K> diagonal_subring(const K& k, bool corrupt_morphism = false) {
    Instance<K> in(corrupt_morphism ? "diagonal_subring_bad_morphism" : "diagonal_subring", k,
                   "Sigma = A over the trivial coring A, with R the diagonal subring");
    auto a = share(Algebra<K>::matrix_units(k, 2, {{0, 0}, {0, 1}, {1, 1}}, "U2"));
    auto d = share(Algebra<K>::matrix_units(k, 2, {{0, 0}, {1, 1}}, "D2"));
    Matrix<K> inc(k, 3, 2);
    inc(0, 0) = k.one();
    inc(2, 1) = k.one();
    auto c = share(Coring<K>::trivial(a));
    auto s = share(restrict_left(Bimodule<K>::regular(a), d, inc));
    s = renamed(s, "S");
    auto sc = chain<K>({s, c->carrier_ptr()});
    Matrix<K> rho(k, sc->dim(), s->dim());
    for (std::size_t u = 0; u < s->dim(); ++u) rho.set_column(u, sc->pure({s->basis(u), *a->unit()}));
    in.add_galois("S", share(Comodule<K>(c, s, rho, "S")));
    if (corrupt_morphism) {
        inc(2, 1) = k.zero();
        inc(1, 1) = k.one();
        in.add_morphism("inclusion", d, a, inc);
        in.suites = {"axioms"};
        in.expect["axioms"] = "fail";
        return in;
    }
    in.add_morphism("inclusion", d, a, inc);
    in.expect_all("pass");
    for (const char* s2 : {"galois", "comonadic", "equivalence", "all"}) in.expect[s2] = "fail";
    return in;
}

/// A firm R without unit (default span{e11, e12}); its coring over R-hat and Sigma = R.
template <ExactField K>
Instance<K> firm_nonunital(const K& k, AlgebraPtr<K> r = nullptr, std::string name = "firm_nonunital") {
    if (!r) r = share(Algebra<K>::matrix_units(k, 2, {{0, 0}, {0, 1}}, "R"));
    Instance<K> in(std::move(name), k, "firm ring " + r->name() + " without unit, its coring over the Dorroh extension");
    auto fc = coring_from_firm_ring(r);
    std::vector<Matrix<K>> l;
    for (std::size_t i = 0; i < r->dim(); ++i) l.push_back(r->left_mult(r->basis(i)));
    const auto& car = fc.coring->carrier();
    auto s = share(Bimodule<K>(r, car.right(), r->dim(), l, car.right_acts(), "S"));
    in.add_galois("S", share(Comodule<K>(fc.coring, s, fc.coring->comult(), "S")));
    in.expect_all("pass");
    return in;
}

template <ExactField K>
Instance<K> zero_mult(const K& k) {
    Instance<K> in("zero_mult", k, "one-dimensional ring with zero multiplication");
    in.add(renamed(Algebra<K>::zero_multiplication(k, 1), "Z"));
    in.expect_all("pass");
    in.expect["firm"] = "fail";
    in.expect["all"] = "fail";
    return in;
}

template <ExactField K>
Instance<K> nilpotent(const K& k) {
    Instance<K> in("nilpotent", k, "strictly upper triangular 3x3 matrices");
    in.add(share(Algebra<K>::matrix_units(k, 3, {{0, 1}, {0, 2}, {1, 2}}, "N3")));
    in.expect_all("pass");
    in.expect["firm"] = "fail";
    in.expect["all"] = "fail";
    return in;
}

/// Sigma = k^2 over the upper triangular subcoring of the 2x2 matrix coring: not Galois.
template <ExactField K>
Instance<K> upper_subcoring(const K& k) {
    Instance<K> in("upper_subcoring", k, "k^2 over the upper triangular part of the 2x2 matrix coring");
    auto g = share(Algebra<K>::ground(k));
    auto c = share(standard::matrix_coring(g, 2, {{0, 0}, {0, 1}, {1, 1}}, "Uc2"));
    auto s = share(Bimodule<K>::vector_space(g, 2, "k^2"));
    // rho(e1) = e1 (x) e11, rho(e2) = e1 (x) e12 + e2 (x) e22
    std::vector<Vec<K>> rho(2, Vec<K>(6, k.zero()));
    rho[0][0 * 3 + 0] = k.one();
    rho[1][0 * 3 + 1] = k.one();
    rho[1][1 * 3 + 2] = k.one();
    in.add_galois("k^2", share(Comodule<K>::from_ambient(c, s, rho, "k^2")));
    in.expect_all("pass");
    for (const char* s2 : {"galois", "comonadic", "equivalence", "all"}) in.expect[s2] = "fail";
    return in;
}

/// Several firm rings, unital and not, for the firm-module dictionary.
template <ExactField K>
Instance<K> firm_rings(const K& k) {
    Instance<K> in("firm_rings", k, "firm rings with and without unit");
    in.add(share(Algebra<K>::matrix_units(k, 2, {{0, 0}, {0, 1}}, "R_row")));
    in.add(share(Algebra<K>::matrix_units(k, 2, {{0, 0}, {1, 0}}, "R_col")));
    in.add(share(Algebra<K>::matrix_units(k, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}}, "R_3")));
    in.add(share(Algebra<K>::matrix_units(k, 2, {{0, 0}, {0, 1}, {1, 1}}, "U2")));
    in.add(renamed(Algebra<K>::truncated_polynomials(k, 3), "P3"));
    in.expect_all("pass");
    return in;
}

// ---- corrupted siblings: each breaks one axiom ----

template <ExactField K>
Instance<K> sweedler_bad_counit(const K& k) {
    auto base = sweedler(k);
    Instance<K> in("sweedler_bad_counit", k, "Sweedler coring with the counit doubled");
    const auto& c = base.corings[0];
    auto bad = share(Coring<K>(c->carrier_ptr(), c->comult(), scaled(c->counit(), 2), "AkA"));
    in.add(bad);
    in.suites = {"axioms"};
    in.expect["axioms"] = "fail";
    return in;
}

template <ExactField K>
Instance<K> matrix_coring_bad_comult(const K& k) {
    auto g = share(Algebra<K>::ground(k));
    auto mc = standard::matrix_coring(g, 2);
    Instance<K> in("matrix_coring_n2_bad_comult", k, "2x2 matrix coring with a term of Delta(e11) dropped");
    auto delta = mc.comult();
    auto col = delta.column(0);
    // Delta(e11) = e11 (x) e11 + e12 (x) e21: drop the second term
    col = mc.cc().pure_basis({0, 0});
    delta.set_column(0, col);
    in.add(share(Coring<K>(mc.carrier_ptr(), delta, mc.counit(), "Mc2")));
    in.suites = {"axioms"};
    in.expect["axioms"] = "fail";
    return in;
}

template <ExactField K>
Instance<K> matrix_coring_bad_coaction(const K& k) {
    auto g = share(Algebra<K>::ground(k));
    auto mc = share(standard::matrix_coring(g, 2));
    auto col = standard::column_comodule(mc, 2);
    Instance<K> in("matrix_coring_n2_bad_coaction", k, "column comodule of the 2x2 matrix coring with rho(e1) truncated");
    auto rho = col.coaction();
    rho.set_column(0, col.mc().pure_basis({0, 0}));
    in.add(share(Comodule<K>(mc, col.carrier_ptr(), rho, "col")));
    in.suites = {"axioms"};
    in.expect["axioms"] = "fail";
    return in;
}

template <ExactField K>
Instance<K> matrix_context_bad_eps(const K& k) {
    auto g = share(Algebra<K>::ground(k));
    auto mn = share(Algebra<K>::matrices(k, 2));
    Instance<K> in("matrix_context_n2_bad_eps", k, "2x2 matrix context with eps doubled");
    in.add_context(matrix_context(mn, g, 2, 2));
    in.suites = {"axioms"};
    in.expect["axioms"] = "fail";
    return in;
}

template <ExactField K>
Instance<K> matrix_context_bad_eta(const K& k) {
    auto g = share(Algebra<K>::ground(k));
    auto mn = share(Algebra<K>::matrices(k, 2));
    Instance<K> in("matrix_context_n2_bad_eta", k, "2x2 matrix context with eta(e12) and eta(e21) swapped");
    auto c = matrix_context(mn, g, 2);
    auto c1 = c.eta.column(1);
    c.eta.set_column(1, c.eta.column(2));
    c.eta.set_column(2, c1);
    in.add_context(std::move(c));
    in.suites = {"axioms"};
    in.expect["axioms"] = "fail";
    return in;
}

template <ExactField K>
Instance<K> bad_algebra(const K& k) {
    Instance<K> in("bad_algebra", k, "structure constants that are not associative");
    Matrix<K> m(k, 4, 2);
    m(0 * 2 + 0, 1) = k.one();  // e1 e1 = e2
    m(1 * 2 + 0, 0) = k.one();  // e2 e1 = e1
    in.add(share(Algebra<K>(k, 2, m, std::nullopt, "B")));
    in.suites = {"axioms"};
    in.expect["axioms"] = "fail";
    return in;
}

}  // namespace corpus

/// The built-in corpus, in a fixed order.
inline std::vector<AnyInstance> builtin_corpus() {
    const Rationals q;
    const PrimeField f7(7);
    std::vector<AnyInstance> out;
    out.emplace_back(corpus::trivial(q));
    out.emplace_back(corpus::sweedler(q));
    out.emplace_back(corpus::sweedler(f7, "sweedler_f7"));
    out.emplace_back(corpus::matrix_coring(q, 2, "matrix_coring_n2"));
    out.emplace_back(corpus::matrix_coring(q, 3, "matrix_coring_n3"));
    out.emplace_back(corpus::matrix_coring(f7, 2, "matrix_coring_n2_f7"));
    out.emplace_back(corpus::matrix_coring(f7, 3, "matrix_coring_n3_f7"));
    out.emplace_back(corpus::matrix_context_instance(q, 2, "matrix_context_n2"));
    out.emplace_back(corpus::matrix_context_instance(f7, 3, "matrix_context_n3_f7"));
    out.emplace_back(corpus::diagonal_subring(q));
    out.emplace_back(corpus::firm_nonunital(q));
    out.emplace_back(corpus::upper_subcoring(q));
    out.emplace_back(corpus::zero_mult(q));
    out.emplace_back(corpus::nilpotent(q));
    out.emplace_back(corpus::firm_rings(q));
    out.emplace_back(corpus::sweedler_bad_counit(q));
    out.emplace_back(corpus::matrix_coring_bad_comult(q));
    out.emplace_back(corpus::matrix_coring_bad_coaction(f7));
    out.emplace_back(corpus::matrix_context_bad_eps(q));
    out.emplace_back(corpus::matrix_context_bad_eta(q));
    out.emplace_back(corpus::bad_algebra(q));
    out.emplace_back(corpus::diagonal_subring(q, true));
    return out;
}

}  // namespace coring

#endif  // CORING_CORPUS_HPP
