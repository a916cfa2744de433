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

#include <gtest/gtest.h>

#include <coring/linalg.hpp>

#include <random>

#include "test_util.hpp"

using namespace coring;
using namespace coring::lin;
using testutil::oracle_rank;
using testutil::random_matrix;

namespace {

const Rationals Q;
const PrimeField F7(7);
const PrimeField F2(2);

}  // namespace

TEST(Field, RationalParsing) {
    EXPECT_EQ(Q.parse("6/4"), mpq_class(3, 2));
    EXPECT_EQ(Q.parse("-5"), mpq_class(-5));
    EXPECT_THROW(Q.parse("1/0"), Error);
    EXPECT_THROW(Q.parse("x"), Error);
}

TEST(Field, PrimeParsing) {
    EXPECT_EQ(F7.parse("1/2"), 4u);
    EXPECT_EQ(F7.parse("-1"), 6u);
    try {
        F2.parse("1/2");
        FAIL() << "expected BadFieldElement";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::bad_field_element);
    }
    EXPECT_THROW(PrimeField(9), Error);
    EXPECT_THROW(PrimeField(1u << 31), Error);
}

TEST(Rref, IdentityOverF7) {
    auto id = Matrix<PrimeField>::identity(F7, 3);
    auto r = rref(id);
    EXPECT_EQ(r.reduced, id);
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(r.rank, 3u);
}

TEST(Rref, ZeroMatrix) {
    Matrix<Rationals> z(Q, 2, 4);
    auto r = rref(z);
    EXPECT_EQ(r.reduced, z);
    EXPECT_TRUE(r.pivots.empty());
    EXPECT_EQ(r.rank, 0u);
}

TEST(Rref, TwoByTwoAgainstHandElimination) {
    auto m = Matrix<Rationals>::from_ints(Q, {{2, 4}, {1, 2}});
    auto r = rref(m);
    auto expect = oracle::rref_q(testutil::to_q(m));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(r.reduced(i, j), expect[i][j]);
    EXPECT_EQ(r.reduced, Matrix<Rationals>::from_ints(Q, {{1, 2}, {0, 0}}));
    EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
    EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, FractionFreeMatchesTextbookOnRandomMatrices) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        auto m = random_matrix(Q, 1 + rng() % 6, 1 + rng() % 7, rng, -4, 4, 3);
        auto r = rref(m);
        auto expect = oracle::rref_q(testutil::to_q(m));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) ASSERT_EQ(r.reduced(i, j), expect[i][j]);
    }
}

TEST(Rref, TallMatricesUseSameCanonicalForm) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        auto m = random_matrix(Q, 8 + rng() % 6, 1 + rng() % 5, rng, -2, 2, 4);
        auto r = rref(m);
        auto expect = oracle::rref_q(testutil::to_q(m));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) ASSERT_EQ(r.reduced(i, j), expect[i][j]);
    }
}

TEST(Rref, Idempotent) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        auto m = random_matrix(F7, 1 + rng() % 7, 1 + rng() % 7, rng, 0, 6, 4);
        auto once = rref(m).reduced;
        EXPECT_EQ(rref(once).reduced, once);
        auto q = random_matrix(Q, 1 + rng() % 7, 1 + rng() % 7, rng);
        auto qonce = rref(q).reduced;
        EXPECT_EQ(rref(qonce).reduced, qonce);
    }
}

TEST(Kernel, Examples) {
    EXPECT_EQ(kernel(Matrix<Rationals>::identity(Q, 4)).rows(), 0u);
    EXPECT_EQ(kernel(Matrix<PrimeField>(F7, 3, 3)).rows(), 3u);
    auto k = kernel(Matrix<Rationals>::from_ints(Q, {{1, 1}}));
    ASSERT_EQ(k.rows(), 1u);
    // spans (1,-1): proportional and annihilated
    EXPECT_EQ(k(0, 0) + k(0, 1), 0);
    EXPECT_NE(k(0, 0), 0);
}

TEST(Kernel, RankNullityBothFields) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 40; ++t) {
        auto m = random_matrix(Q, 1 + rng() % 8, 1 + rng() % 8, rng, -3, 3, 5);
        auto k = kernel(m);
        EXPECT_EQ(rank(m) + k.rows(), m.cols());
        EXPECT_EQ(rank(m), oracle_rank(m));
        EXPECT_TRUE((m * k.transpose()).is_zero());
        auto p = random_matrix(F7, 1 + rng() % 8, 1 + rng() % 8, rng, 0, 6, 5);
        EXPECT_EQ(rank(p) + kernel(p).rows(), p.cols());
        EXPECT_EQ(rank(p), oracle_rank(p));
        EXPECT_TRUE((p * kernel(p).transpose()).is_zero());
    }
}

TEST(Quotient, Examples) {
    auto q1 = quotient(2, Matrix<Rationals>::from_ints(Q, {{1, 0}}));
    EXPECT_EQ(q1.basis_dim(), 1u);

    auto q2 = quotient(3, Matrix<PrimeField>(F7, 0, 3));
    EXPECT_EQ(q2.basis_dim(), 3u);
    EXPECT_TRUE(q2.project_matrix().is_identity());
    EXPECT_TRUE(q2.section_matrix().is_identity());

    auto rel = Matrix<Rationals>::from_ints(Q, {{1, 2, 0, 1}, {0, 1, 1, 0}, {1, 3, 1, 1}, {2, 0, 0, 1}});
    ASSERT_EQ(oracle_rank(rel), 3u);
    auto q3 = quotient(4, rel);
    EXPECT_EQ(q3.basis_dim(), 1u);
    EXPECT_TRUE((q3.project_matrix() * q3.section_matrix()).is_identity());
    EXPECT_TRUE((q3.project_matrix() * rel.transpose()).is_zero());
}

TEST(Quotient, InvariantsOnRandomRelations) {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng() % 9;
        auto rel = random_matrix(Q, rng() % 12, n, rng, -2, 2, 6);
        auto q = quotient(n, rel);
        auto p = q.project_matrix();
        auto s = q.section_matrix();
        EXPECT_EQ(q.basis_dim(), n - oracle_rank(rel));
        EXPECT_TRUE((p * s).is_identity());
        if (rel.rows()) {
            EXPECT_TRUE((p * rel.transpose()).is_zero());
        }
        EXPECT_EQ(rank(p), q.basis_dim());
        // section * project fixes the chosen complement
        EXPECT_EQ(s * p * s, s);
        // dense and sparse projection agree
        auto v = random_matrix(Q, n, 1, rng).column(0);
        EXPECT_EQ(q.project(v), p.apply(v));
    }
}

TEST(Isomorphism, Examples) {
    EXPECT_TRUE(is_isomorphism(Matrix<Rationals>::identity(Q, 3)));
    EXPECT_FALSE(is_isomorphism(Matrix<Rationals>::from_ints(Q, {{1, 0, 0}, {0, 1, 0}})));
    auto m = Matrix<PrimeField>::from_ints(F2, {{1, 1}, {0, 1}});
    EXPECT_EQ(oracle::det_p(testutil::to_p(m), 2), 1);
    EXPECT_TRUE(is_isomorphism(m));
    auto singular = Matrix<PrimeField>::from_ints(F2, {{1, 1}, {1, 1}});
    EXPECT_EQ(oracle::det_p(testutil::to_p(singular), 2), 0);
    EXPECT_FALSE(is_isomorphism(singular));
}

TEST(Isomorphism, InverseAndSolve) {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 20; ++t) {
        auto m = random_matrix(Q, 4, 4, rng);
        if (!is_isomorphism(m)) {
            EXPECT_THROW(inverse(m), Error);
            continue;
        }
        auto inv = inverse(m);
        EXPECT_TRUE((m * inv).is_identity());
        EXPECT_TRUE((inv * m).is_identity());
    }
    auto a = Matrix<Rationals>::from_ints(Q, {{1, 1}, {2, 2}});
    auto b = Matrix<Rationals>::from_ints(Q, {{1}, {3}});
    EXPECT_FALSE(solve(a, b).has_value());
    auto c = Matrix<Rationals>::from_ints(Q, {{2}, {4}});
    auto x = solve(a, c);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a * *x, c);
}

TEST(Arithmetic, ProductIsAssociativeAndExact) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        auto a = random_matrix(Q, 3, 4, rng), b = random_matrix(Q, 4, 2, rng), c = random_matrix(Q, 2, 5, rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        auto x = random_matrix(F7, 3, 4, rng, 0, 6), y = random_matrix(F7, 4, 2, rng, 0, 6),
             z = random_matrix(F7, 2, 5, rng, 0, 6);
        EXPECT_EQ((x * y) * z, x * (y * z));
    }
    mpq_class third(1, 3);
    Matrix<Rationals> m(Q, 1, 1);
    m(0, 0) = third;
    EXPECT_EQ((m * m.scaled(3))(0, 0), third);
}

TEST(Subspace, Coordinates) {
    auto rows = Matrix<Rationals>::from_ints(Q, {{1, 1, 0}, {0, 1, 1}});
    auto s = Subspace<Rationals>::span_of_rows(rows);
    EXPECT_EQ(s.dim(), 2u);
    auto c = s.coordinates({Q.from_int(1), Q.from_int(2), Q.from_int(1)});
    ASSERT_TRUE(c.has_value());
    EXPECT_FALSE(s.contains(Vec<Rationals>{Q.from_int(1), Q.from_int(0), Q.from_int(0)}));
}
