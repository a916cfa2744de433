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

#ifndef CORING_GENERATE_HPP
#define CORING_GENERATE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "corpus.hpp"

namespace coring {

/**
 * Seeded random instances.  Kinds:
 *   matrix_coring   the n x n matrix coring and its column comodule, in a random basis
 *   firm_nonunital  the row (even seed) or column (odd seed) ideal of M_n at e11
 *   algebra         a random unital algebra in a random basis
 *   ring            a random span of matrix units of M_n closed under products, in a random
 *                   basis (dim <= 6); may or may not be firm
 *   context         the M_n context on k^n with random bases throughout
 * p = 0 selects the rationals, otherwise F_p.
 */
struct GenerateParams {
    std::string kind = "matrix_coring";
    std::size_t n = 2;
    std::uint32_t p = 0;
    std::uint64_t seed = 1;
};

inline const std::vector<std::string>& generator_kinds() {
    static const std::vector<std::string> k{"matrix_coring", "firm_nonunital", "algebra", "ring", "context"};
    return k;
}

namespace gen {

using Rng = std::mt19937_64;

// A permutation times a few transvections with entries +-1.  Dense random changes of basis
// make every downstream tensor quotient dense and the rationals blow up; this keeps the
// presentation scrambled but sparse.
template <ExactField K>
std::pair<Matrix<K>, Matrix<K>> random_invertible(const K& k, std::size_t n, Rng& rng) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix<K> m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = k.one();
    if (n > 1) {
        std::uniform_int_distribution<std::size_t> idx(0, n - 1);
        std::bernoulli_distribution sign(0.5);
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t i = idx(rng), j = idx(rng);
            if (i == j) continue;
            const typename K::value_type c = sign(rng) ? k.one() : k.neg(k.one());
            for (std::size_t col = 0; col < n; ++col)
                if (!k.is_zero(m(j, col))) m(i, col) = k.add(m(i, col), k.mul(c, m(j, col)));
        }
    }
    return {m, lin::inverse(m)};
}

/// The same algebra with coordinates x' = P x.
template <ExactField K>
AlgebraPtr<K> transport(const Algebra<K>& a, const Matrix<K>& p, const Matrix<K>& pinv, std::string name) {
    const K& k = a.field();
    const std::size_t d = a.dim();
    Matrix<K> mult(k, d * d, d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) mult.set_row(x * d + y, p.apply(a.product(pinv.column(x), pinv.column(y))));
    std::optional<Vec<K>> unit;
    if (a.unit()) unit = p.apply(*a.unit());
    return share(Algebra<K>(k, d, std::move(mult), std::move(unit), std::move(name)));
}

// Actions for the basis of the transported algebra, conjugated by the module basis change q.
template <ExactField K>
std::vector<Matrix<K>> transported_acts(const std::vector<Matrix<K>>& acts, const Matrix<K>& pinv, const Matrix<K>& q,
                                        const Matrix<K>& qinv) {
    const K& k = q.field();
    std::vector<Matrix<K>> out;
    for (std::size_t b = 0; b < acts.size(); ++b) {
        Matrix<K> m(k, q.rows(), q.rows());
        for (std::size_t a = 0; a < acts.size(); ++a)
            if (!k.is_zero(pinv(a, b))) m = m + acts[a].scaled(pinv(a, b));
        out.push_back(q * m * qinv);
    }
    return out;
}

/// A random set of matrix units of M_n closed under products, 0 < size <= max_dim.
template <ExactField K>
Algebra<K> random_unit_span(const K& k, std::size_t n, std::size_t max_dim, Rng& rng, std::string name) {
    std::bernoulli_distribution pick(0.35);
    for (;;) {
        std::set<std::pair<std::size_t, std::size_t>> s;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (pick(rng)) s.insert({i, j});
        for (bool grew = true; grew;) {
            grew = false;
            for (auto [i, j] : std::vector(s.begin(), s.end()))
                for (auto [j2, l] : std::vector(s.begin(), s.end()))
                    if (j == j2 && s.insert({i, l}).second) grew = true;
        }
        if (s.empty() || s.size() > max_dim) continue;
        return Algebra<K>::matrix_units(k, n, {s.begin(), s.end()}, std::move(name));
    }
}

template <ExactField K>
AlgebraPtr<K> random_ring(const K& k, std::size_t n, Rng& rng, std::size_t max_dim = 6, std::string name = "R") {
    auto a = random_unit_span(k, n, max_dim, rng, name);
    auto [p, pinv] = random_invertible(k, a.dim(), rng);
    return transport(a, p, pinv, std::move(name));
}

template <ExactField K>
Instance<K> matrix_coring(const K& k, std::size_t n, Rng& rng, std::string name) {
    Instance<K> in(std::move(name), k, std::to_string(n) + "x" + std::to_string(n) + " matrix coring in a random basis");
    auto g = share(Algebra<K>::ground(k));
    auto mc = share(standard::matrix_coring(g, n));
    auto col = standard::column_comodule(mc, n);
    const auto& c = mc->carrier();
    auto [p, pinv] = random_invertible(k, c.dim(), rng);
    auto [q, qinv] = random_invertible(k, col.dim(), rng);
    auto id_l = Matrix<K>::identity(k, c.left()->dim());
    auto carrier = share(Bimodule<K>(c.left(), c.right(), c.dim(), transported_acts(c.left_acts(), id_l, p, pinv),
                                     transported_acts(c.right_acts(), id_l, p, pinv), c.name()));
    auto cc = chain<K>({carrier, carrier});
    Matrix<K> delta = tensor_maps(mc->cc(), *cc, {p, p}) * mc->comult() * pinv;
    auto coring = share(Coring<K>(carrier, delta, mc->counit() * pinv, mc->name()));
    const auto& s = col.carrier();
    auto sid_l = Matrix<K>::identity(k, s.left()->dim());
    auto sid_r = Matrix<K>::identity(k, s.right()->dim());
    auto sigma = share(Bimodule<K>(s.left(), s.right(), s.dim(), transported_acts(s.left_acts(), sid_l, q, qinv),
                                   transported_acts(s.right_acts(), sid_r, q, qinv), s.name()));
    auto sc = chain<K>({sigma, carrier});
    Matrix<K> rho = tensor_maps(col.mc(), *sc, {q, p}) * col.coaction() * qinv;
    in.add_galois(col.name(), share(Comodule<K>(coring, sigma, rho, col.name())));
    in.expect_all("pass");
    return in;
}

template <ExactField K>
Instance<K> algebra(const K& k, std::size_t n, Rng& rng, std::string name) {
    std::uniform_int_distribution<int> kind(0, 3);
    Algebra<K> a;
    switch (kind(rng)) {
        case 0: a = Algebra<K>::matrices(k, std::min<std::size_t>(n, 2)); break;
        case 1: a = Algebra<K>::upper_triangular(k, std::min<std::size_t>(n, 3)); break;
        case 2: a = Algebra<K>::truncated_polynomials(k, n + 1); break;
        default: a = Algebra<K>::diagonal(k, n + 1); break;
    }
    auto [p, pinv] = random_invertible(k, a.dim(), rng);
    Instance<K> in(std::move(name), k, "random unital algebra in a random basis");
    in.add(transport(a, p, pinv, "A"));
    in.expect_all("pass");
    return in;
}

template <ExactField K>
Instance<K> context(const K& k, std::size_t n, Rng& rng, std::string name) {
    auto g = share(Algebra<K>::ground(k));
    auto mn = share(Algebra<K>::matrices(k, n));
    auto c0 = corpus::matrix_context(mn, g, n);
    auto [p, pinv] = random_invertible(k, mn->dim(), rng);
    auto [q, qinv] = random_invertible(k, n, rng);
    auto [q2, q2inv] = random_invertible(k, n, rng);
    auto r = transport(*mn, p, pinv, "M" + std::to_string(n));
    auto gid = Matrix<K>::identity(k, 1);
    auto sigma = share(Bimodule<K>(r, g, n, transported_acts(c0.sigma->left_acts(), pinv, q, qinv),
                                   transported_acts(c0.sigma->right_acts(), gid, q, qinv), c0.sigma->name()));
    auto dagger = share(Bimodule<K>(g, r, n, transported_acts(c0.dagger->left_acts(), gid, q2, q2inv),
                                    transported_acts(c0.dagger->right_acts(), pinv, q2, q2inv), c0.dagger->name()));
    auto z = chain<K>({sigma, dagger});
    auto pr = chain<K>({dagger, sigma});
    Matrix<K> eta = tensor_maps(*c0.z, *z, {q, q2}) * c0.eta * pinv;
    Matrix<K> eps = c0.eps * tensor_maps(*pr, *c0.pairing, {q2inv, qinv});
    Instance<K> in(std::move(name), k, "M_" + std::to_string(n) + " context on k^" + std::to_string(n) + " in random bases");
    in.add_context(make_context(c0.name, sigma, dagger, eta, eps));
    in.expect_all("pass");
    return in;
}

template <ExactField K>
Instance<K> ring(const K& k, std::size_t n, Rng& rng, std::string name) {
    Instance<K> in(std::move(name), k, "random span of matrix units of M_" + std::to_string(n) + " in a random basis");
    in.add(random_ring(k, n, rng));
    return in;
}

template <ExactField K>
Instance<K> firm_nonunital(const K& k, std::size_t n, std::uint64_t seed, std::string name) {
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t j = 0; j < n; ++j) units.push_back(seed % 2 == 0 ? std::pair{std::size_t{0}, j} : std::pair{j, std::size_t{0}});
    return corpus::firm_nonunital(k, share(Algebra<K>::matrix_units(k, n, units, "R")), std::move(name));
}

template <ExactField K>
Instance<K> dispatch(const K& k, const GenerateParams& gp) {
    Rng rng(gp.seed);
    const std::string name = gp.kind + "_n" + std::to_string(gp.n) + "_p" + std::to_string(gp.p) + "_s" + std::to_string(gp.seed);
    Instance<K> in;
    if (gp.kind == "matrix_coring") in = matrix_coring(k, gp.n, rng, name);
    else if (gp.kind == "firm_nonunital") in = firm_nonunital(k, gp.n, gp.seed, name);
    else if (gp.kind == "algebra") in = algebra(k, gp.n, rng, name);
    else if (gp.kind == "ring") in = ring(k, gp.n, rng, name);
    else in = context(k, gp.n, rng, name);
    in.params.seed = gp.seed;
    return in;
}

}  // namespace gen

inline AnyInstance generate(const GenerateParams& gp) {
    const auto& kinds = generator_kinds();
    if (std::find(kinds.begin(), kinds.end(), gp.kind) == kinds.end())
        throw Error(Errc::invalid_params, "unknown generator kind '" + gp.kind + "'");
    if (gp.n == 0 || gp.n > 4) throw Error(Errc::invalid_params, "n = " + std::to_string(gp.n) + " outside 1..4");
    if (gp.kind == "firm_nonunital" && gp.n < 2) throw Error(Errc::invalid_params, "firm_nonunital needs n >= 2 to lack a unit");
    if (gp.p == 0) return gen::dispatch(Rationals{}, gp);
    return gen::dispatch(PrimeField(gp.p), gp);
}

}  // namespace coring

#endif  // CORING_GENERATE_HPP
