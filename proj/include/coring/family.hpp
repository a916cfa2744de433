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

#ifndef CORING_FAMILY_HPP
#define CORING_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coring.hpp"

namespace coring {

/// A^b --g--> A^m --pi--> M -> 0, exact.
template <ExactField K>
struct Presentation {
    BimodulePtr<K> relations;  // A^b
    BimodulePtr<K> free;       // A^m
    Matrix<K> g;
    Matrix<K> pi;
};

template <ExactField K>
struct FamilyMember {
    BimodulePtr<K> module;
    std::optional<Presentation<K>> presentation;
};

struct FamilyOptions {
    std::size_t size = 10;
    std::uint64_t seed = 1;
    std::size_t max_dim = 12;
};

namespace detail {

// The right A-linear map A^b -> A^m sending the j-th generator to gens[j].
template <ExactField K>
Matrix<K> map_from_generators(const Bimodule<K>& free_m, const AlgebraPtr<K>& a, const std::vector<Vec<K>>& gens) {
    Matrix<K> g(free_m.field(), free_m.dim(), gens.size() * a->dim());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t x = 0; x < a->dim(); ++x) g.set_column(j * a->dim() + x, free_m.act_right(gens[j], a->basis(x)));
    return g;
}

template <ExactField K>
FamilyMember<K> presented_quotient(const AlgebraPtr<K>& a, std::size_t m, const std::vector<Vec<K>>& gens, std::string name) {
    auto ground = share(Algebra<K>::ground(a->field()));
    auto free = share(Bimodule<K>::free_right(ground, a, m));
    auto rel = share(Bimodule<K>::free_right(ground, a, gens.size()));
    auto q = quotient_module(*free, gens, name);
    auto g = map_from_generators(*free, a, gens);
    return {share(std::move(q.module)), Presentation<K>{rel, free, std::move(g), std::move(q.projection)}};
}

}  // namespace detail

/**
 * Right A-modules for a unital A: A, A^2, A^3, the nonzero cyclic quotients
 * A/xA over basis elements x, then seeded random quotients of A^m.
 * Quotients carry their presentation.  Duplicates are allowed.
 */
template <ExactField K>
std::vector<FamilyMember<K>> module_family(const AlgebraPtr<K>& a, const FamilyOptions& opt = {}) {
    if (!a->is_unital()) throw Error(Errc::not_unital, "module family over non-unital '" + a->name() + "'");
    const K& k = a->field();
    auto ground = share(Algebra<K>::ground(k));
    std::vector<FamilyMember<K>> out;
    auto fits = [&](std::size_t d) { return d > 0 && d <= opt.max_dim && out.size() < opt.size; };
    for (std::size_t m = 1; m <= 3; ++m)
        if (fits(m * a->dim())) out.push_back({share(Bimodule<K>::free_right(ground, a, m)), std::nullopt});
    for (std::size_t x = 0; x < a->dim() && out.size() < opt.size; ++x) {
        auto mem = detail::presented_quotient(a, 1, {a->basis(x)}, a->name() + "/" + detail::basis_name(x) + a->name());
        if (fits(mem.module->dim())) out.push_back(std::move(mem));
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coef(-1, 2), rank(1, 2);
    for (std::size_t attempt = 0; attempt < 50 * opt.size && out.size() < opt.size; ++attempt) {
        std::size_t m = static_cast<std::size_t>(rank(rng));
        Vec<K> u(m * a->dim(), k.zero());
        for (auto& c : u) c = k.from_int(coef(rng));
        if (lin::is_zero_vec(k, u)) continue;
        auto mem = detail::presented_quotient(a, m, {u}, "Q" + std::to_string(out.size() + 1));
        if (fits(mem.module->dim())) out.push_back(std::move(mem));
    }
    return out;
}

/// C, Sigma, Sigma + Sigma and cofree M (x)_A C for the first module-family members.
template <ExactField K>
std::vector<ComodulePtr<K>> comodule_family(const ComodulePtr<K>& sigma, const std::vector<FamilyMember<K>>& modules,
                                            std::size_t cofree_count = 3) {
    std::vector<ComodulePtr<K>> out;
    out.push_back(share(Comodule<K>::regular(sigma->coring_ptr())));
    out.push_back(sigma);
    out.push_back(share(direct_sum(*sigma, *sigma)));
    for (std::size_t i = 0; i < modules.size() && i < cofree_count; ++i)
        out.push_back(share(cofree_comodule(modules[i].module, sigma->coring_ptr())));
    return out;
}

/**
 * Firm right R-modules for a firm R: R, R^2, R^3, then (R/xR) (x)_R R over
 * basis elements x and seeded random (R^m/uR) (x)_R R.  Tensoring with R
 * makes every quotient firm; for unital R it changes nothing.
 */
template <ExactField K>
std::vector<BimodulePtr<K>> firm_module_family(const AlgebraPtr<K>& r, const FamilyOptions& opt = {}) {
    const K& k = r->field();
    auto ground = share(Algebra<K>::ground(k));
    auto reg = share(Bimodule<K>::regular(r));
    std::vector<BimodulePtr<K>> out;
    auto push = [&](BimodulePtr<K> m) {
        if (m->dim() > 0 && m->dim() <= opt.max_dim && out.size() < opt.size) out.push_back(std::move(m));
    };
    auto tensored = [&](const BimodulePtr<K>& free, const Vec<K>& u, std::string name) -> BimodulePtr<K> {
        auto q = share(quotient_module(*free, {u}).module);
        if (q->dim() == 0) return q;
        auto t = *chain<K>({q, reg})->result_ptr();
        t.set_name(std::move(name));
        return share(std::move(t));
    };
    for (std::size_t m = 1; m <= 3; ++m) push(share(Bimodule<K>::free_right(ground, r, m)));
    auto free1 = share(Bimodule<K>::free_right(ground, r, 1));
    for (std::size_t x = 0; x < r->dim() && out.size() < opt.size; ++x)
        push(tensored(free1, r->basis(x), "(" + r->name() + "/" + detail::basis_name(x) + r->name() + ")(x)" + r->name()));
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coef(-1, 2), rank(1, 2);
    for (std::size_t attempt = 0; attempt < 50 * opt.size && out.size() < opt.size; ++attempt) {
        std::size_t m = static_cast<std::size_t>(rank(rng));
        auto free = share(Bimodule<K>::free_right(ground, r, m));
        Vec<K> u(free->dim(), k.zero());
        for (auto& c : u) c = k.from_int(coef(rng));
        if (lin::is_zero_vec(k, u)) continue;
        push(tensored(free, u, "F" + std::to_string(out.size() + 1)));
    }
    return out;
}

}  // namespace coring

#endif  // CORING_FAMILY_HPP
