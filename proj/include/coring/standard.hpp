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

#ifndef CORING_STANDARD_HPP
#define CORING_STANDARD_HPP

#include <string>
#include <utility>
#include <vector>

#include "coring.hpp"

namespace coring::standard {

template <ExactField K>
Matrix<K> matrix_unit(const K& k, std::size_t n, std::size_t i, std::size_t j) {
    Matrix<K> e(k, n, n);
    e(i, j) = k.one();
    return e;
}

/// k^n as column vectors, a left module over the n x n matrices and right over k.
template <ExactField K>
BimodulePtr<K> column_module(const AlgebraPtr<K>& mn, const AlgebraPtr<K>& ground, std::size_t n) {
    std::vector<Matrix<K>> l;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) l.push_back(matrix_unit(ground->field(), n, i, j));
    return share(Bimodule<K>(mn, ground, n, l, Bimodule<K>::trivial_acts(ground, n), "k^" + std::to_string(n)));
}

/// k^n as row vectors, a right module over the n x n matrices.
template <ExactField K>
BimodulePtr<K> row_module(const AlgebraPtr<K>& mn, const AlgebraPtr<K>& ground, std::size_t n) {
    std::vector<Matrix<K>> r;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.push_back(matrix_unit(ground->field(), n, i, j).transpose());
    return share(Bimodule<K>(ground, mn, n, Bimodule<K>::trivial_acts(ground, n), r, "k_" + std::to_string(n)));
}

/**
 * The n x n matrix coring over the ground field on the given basis units
 * (i, j), with Delta(e_ij) = sum_l e_il (x) e_lj over units present and
 * epsilon(e_ij) = delta_ij.  The units must be closed under that formula.
 */
template <ExactField K>
Coring<K> matrix_coring(const AlgebraPtr<K>& ground, std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> units = {},
                        std::string name = {}) {
    const K& k = ground->field();
    if (units.empty())
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) units.push_back({i, j});
    if (name.empty()) name = "Mc" + std::to_string(n);
    const std::size_t d = units.size();
    auto index = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
        for (std::size_t b = 0; b < d; ++b)
            if (units[b] == std::pair{i, j}) return b;
        return std::nullopt;
    };
    auto carrier = share(Bimodule<K>::vector_space(ground, d, name));
    std::vector<Vec<K>> delta;
    Matrix<K> eps(k, 1, d);
    for (std::size_t b = 0; b < d; ++b) {
        auto [i, j] = units[b];
        Vec<K> v(d * d, k.zero());
        for (std::size_t l = 0; l < n; ++l) {
            auto x = index(i, l), y = index(l, j);
            if (x && y) v[*x * d + *y] = k.one();
        }
        delta.push_back(std::move(v));
        if (i == j) eps(0, b) = k.one();
    }
    return Coring<K>::from_ambient(carrier, delta, eps, name);
}

/// k^n as a right comodule over the n x n matrix coring: e_i -> sum_j e_j (x) e_ji.
template <ExactField K>
Comodule<K> column_comodule(const CoringPtr<K>& mc, std::size_t n) {
    const K& k = mc->field();
    const auto& ground = mc->base();
    auto sigma = share(Bimodule<K>::vector_space(ground, n, "k^" + std::to_string(n)));
    std::vector<Vec<K>> rho;
    for (std::size_t i = 0; i < n; ++i) {
        Vec<K> v(n * mc->dim(), k.zero());
        for (std::size_t j = 0; j < n; ++j) v[j * mc->dim() + (j * n + i)] = k.one();
        rho.push_back(std::move(v));
    }
    return Comodule<K>::from_ambient(mc, sigma, rho);
}

}  // namespace coring::standard

#endif  // CORING_STANDARD_HPP
