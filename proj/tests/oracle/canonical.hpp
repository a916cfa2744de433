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

#ifndef CORING_TESTS_ORACLE_CANONICAL_HPP
#define CORING_TESTS_ORACLE_CANONICAL_HPP

// Canonical maps recomputed from raw action matrices, without the library's
// tensor quotients or hom spaces.  Everything lives in the ambient k-tensor
// product; a quotient dimension is ambient minus the rank of the balancing
// relations, and the rank of a map into a quotient is
// rank(images + relations) - rank(relations).

#include <gmpxx.h>

#include <cstdint>
#include <tuple>
#include <vector>

namespace oracle {

struct QOps {
    using T = mpq_class;
    T zero() const { return 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T div(const T& a, const T& b) const { return a / b; }
    bool is_zero(const T& a) const { return a == 0; }
};

struct POps {
    using T = std::int64_t;
    std::int64_t p;
    T zero() const { return 0; }
    T norm(T a) const { return ((a % p) + p) % p; }
    T add(T a, T b) const { return norm(a + b); }
    T sub(T a, T b) const { return norm(a - b); }
    T mul(T a, T b) const { return norm(a * b); }
    T div(T a, T b) const {
        T r = 1, e = p - 2;
        b = norm(b);
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return mul(a, r);
    }
    bool is_zero(T a) const { return norm(a) == 0; }
};

template <class F>
using Mat = std::vector<std::vector<typename F::T>>;  // row-major

template <class F>
Mat<F> zeros(const F& f, std::size_t r, std::size_t c) {
    return Mat<F>(r, std::vector<typename F::T>(c, f.zero()));
}

// Reduced row echelon form; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(const F& f, Mat<F>& a) {
    std::vector<std::size_t> piv;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && f.is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        auto lead = a[r][c];
        for (auto& x : a[r]) x = f.div(x, lead);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(a[i][c])) continue;
            auto m = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(m, a[r][j]));
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class F>
std::size_t rank(const F& f, Mat<F> a) {
    return rref(f, a).size();
}

// Basis of {x : a x = 0}, for a with `cols` columns.
template <class F>
std::vector<std::vector<typename F::T>> nullspace(const F& f, Mat<F> a, std::size_t cols) {
    auto piv = rref(f, a);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<typename F::T>> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_piv[free]) continue;
        std::vector<typename F::T> x(cols, f.zero());
        x[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = f.sub(f.zero(), a[i][free]);
        out.push_back(x);
    }
    return out;
}

/**
 * A module described by its basis size and action matrices.  left[b][i][j] is
 * the coefficient of basis i in (ring basis b) * (basis j); right[a][i][j] is
 * the coefficient of basis i in (basis j) * (ring basis a).
 */
template <class F>
struct RawModule {
    std::size_t dim = 0;
    std::vector<Mat<F>> left, right;
};

/**
 * Inputs for can_M : Hom_A(S, M) (x)_R S -> M (x)_A C, f (x) u -> f(u_0) (x) u_1.
 * coaction[u] lists ambient terms (s index, c index, coefficient) of rho(u).
 */
template <class F>
struct CanonicalInput {
    RawModule<F> sigma;  // left R, right A
    RawModule<F> c;      // left A, right A
    RawModule<F> m;      // right A
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, typename F::T>>> coaction;
};

struct CanonicalRanks {
    std::size_t hom_dim = 0;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t rank = 0;
    bool iso() const { return rank == source_dim && rank == target_dim; }
};

template <class F>
CanonicalRanks canonical_ranks(const F& f, const CanonicalInput<F>& in) {
    const std::size_t s = in.sigma.dim, dc = in.c.dim, dm = in.m.dim, na = in.sigma.right.size();
    // Hom_A(S, M): unknowns h[i][j] (i < dm, j < s), h * rS(a) = rM(a) * h.
    Mat<F> eq;
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                std::vector<typename F::T> row(dm * s, f.zero());
                for (std::size_t l = 0; l < s; ++l) row[i * s + l] = f.add(row[i * s + l], in.sigma.right[a][l][j]);
                for (std::size_t l = 0; l < dm; ++l) row[l * s + j] = f.sub(row[l * s + j], in.m.right[a][i][l]);
                eq.push_back(row);
            }
    auto homs = eq.empty() ? std::vector<std::vector<typename F::T>>{} : nullspace(f, eq, dm * s);
    if (eq.empty())
        for (std::size_t x = 0; x < dm * s; ++x) {
            std::vector<typename F::T> e(dm * s, f.zero());
            e[x] = 1;
            homs.push_back(e);
        }
    CanonicalRanks out;
    out.hom_dim = homs.size();
    auto h_at = [&](std::size_t b, std::size_t i, std::size_t j) { return homs[b][i * s + j]; };

    // Source: span of h_b (x) u inside Hom_k(S, M) (x) S, modulo (h o r) (x) u - h (x) r u.
    {
        const std::size_t amb = dm * s * s;
        Mat<F> rel;
        for (std::size_t r = 0; r < in.sigma.left.size(); ++r)
            for (std::size_t b = 0; b < homs.size(); ++b)
                for (std::size_t u = 0; u < s; ++u) {
                    std::vector<typename F::T> row(amb, f.zero());
                    // (h o L_r)(e_j) = sum_l L_r[l][j] h(e_l)
                    for (std::size_t i = 0; i < dm; ++i)
                        for (std::size_t j = 0; j < s; ++j) {
                            typename F::T v = f.zero();
                            for (std::size_t l = 0; l < s; ++l) v = f.add(v, f.mul(h_at(b, i, l), in.sigma.left[r][l][j]));
                            row[(i * s + j) * s + u] = f.add(row[(i * s + j) * s + u], v);
                        }
                    for (std::size_t i = 0; i < dm; ++i)
                        for (std::size_t j = 0; j < s; ++j)
                            for (std::size_t w = 0; w < s; ++w)
                                row[(i * s + j) * s + w] = f.sub(row[(i * s + j) * s + w], f.mul(h_at(b, i, j), in.sigma.left[r][w][u]));
                    rel.push_back(row);
                }
        out.source_dim = homs.size() * s - (rel.empty() ? 0 : rank(f, rel));
    }

    // Target M (x)_A C as ambient dm*dc modulo m a (x) c - m (x) a c.
    Mat<F> rel;
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t x = 0; x < dm; ++x)
            for (std::size_t y = 0; y < dc; ++y) {
                std::vector<typename F::T> row(dm * dc, f.zero());
                for (std::size_t i = 0; i < dm; ++i) row[i * dc + y] = f.add(row[i * dc + y], in.m.right[a][i][x]);
                for (std::size_t j = 0; j < dc; ++j) row[x * dc + j] = f.sub(row[x * dc + j], in.c.left[a][j][y]);
                rel.push_back(row);
            }
    const std::size_t rrel = rel.empty() ? 0 : rank(f, rel);
    out.target_dim = dm * dc - rrel;

    // Images h_b(u_0) (x) u_1, taken in the ambient space.
    Mat<F> all = rel;
    for (std::size_t b = 0; b < homs.size(); ++b)
        for (std::size_t u = 0; u < s; ++u) {
            std::vector<typename F::T> row(dm * dc, f.zero());
            for (const auto& [sx, cy, coef] : in.coaction[u])
                for (std::size_t i = 0; i < dm; ++i)
                    row[i * dc + cy] = f.add(row[i * dc + cy], f.mul(coef, h_at(b, i, sx)));
            all.push_back(row);
        }
    out.rank = (all.empty() ? 0 : rank(f, all)) - rrel;
    return out;
}

}  // namespace oracle

#endif  // CORING_TESTS_ORACLE_CANONICAL_HPP
