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

#ifndef CORING_TESTS_TEST_UTIL_HPP
#define CORING_TESTS_TEST_UTIL_HPP

#include <coring/coring.hpp>
#include <coring/matrix.hpp>

#include <cstdint>
#include <random>
#include <vector>

#include "oracle/canonical.hpp"
#include "oracle/naive.hpp"

namespace testutil {

using coring::lin::Matrix;
using coring::lin::PrimeField;
using coring::lin::Rationals;

template <class K>
Matrix<K> random_matrix(const K& k, std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = -3, int hi = 3,
                        int zero_bias = 0) {
    Matrix<K> m(k, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            long span = hi - lo + 1 + zero_bias;
            long v = static_cast<long>(rng() % static_cast<std::uint64_t>(span)) + lo;
            m(i, j) = k.from_int(v > hi ? 0 : v);
        }
    return m;
}

inline oracle::QRows to_q(const Matrix<Rationals>& m) {
    oracle::QRows out(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

inline oracle::PRows to_p(const Matrix<PrimeField>& m) {
    oracle::PRows out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

inline std::size_t oracle_rank(const Matrix<Rationals>& m) { return oracle::rank_q(to_q(m)); }
inline std::size_t oracle_rank(const Matrix<PrimeField>& m) {
    return oracle::rank_p(to_p(m), m.field().modulus());
}


inline oracle::QOps ops(const Rationals&) { return {}; }
inline oracle::POps ops(const PrimeField& f) { return {static_cast<std::int64_t>(f.modulus())}; }

template <class K>
auto raw_mat(const Matrix<K>& m) {
    using T = typename decltype(ops(m.field()))::T;
    std::vector<std::vector<T>> out(m.rows(), std::vector<T>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = T(m(i, j));
    return out;
}

template <class K>
auto raw_module(const coring::Bimodule<K>& b) {
    oracle::RawModule<decltype(ops(b.field()))> out;
    out.dim = b.dim();
    for (const auto& m : b.left_acts()) out.left.push_back(raw_mat(m));
    for (const auto& m : b.right_acts()) out.right.push_back(raw_mat(m));
    return out;
}

/// can_M recomputed by the oracle; m = nullptr means M = A.
template <class K>
oracle::CanonicalRanks oracle_can(const coring::Comodule<K>& sigma, const coring::Bimodule<K>* m = nullptr) {
    using F = decltype(ops(sigma.field()));
    oracle::CanonicalInput<F> in;
    in.sigma = raw_module(sigma.carrier());
    in.c = raw_module(sigma.coring().carrier());
    in.m = m ? raw_module(*m) : raw_module(coring::Bimodule<K>::regular(sigma.coring().base()));
    for (std::size_t u = 0; u < sigma.dim(); ++u) {
        in.coaction.emplace_back();
        for (const auto& [t, c] : sigma.mc().lift(sigma.coaction().column(u)))
            in.coaction.back().emplace_back(t[0], t[1], typename F::T(c));
    }
    return oracle::canonical_ranks(ops(sigma.field()), in);
}

}  // namespace testutil

#endif  // CORING_TESTS_TEST_UTIL_HPP
