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

#include <coring/context.hpp>
#include <coring/standard.hpp>

#include "test_util.hpp"

using namespace coring;
using namespace coring::standard;

namespace {

using Q = Rationals;
const Q k;

AlgebraPtr<Q> ground() { return share(Algebra<Q>::ground(k)); }

// (M_n, k, columns, rows, e_ij -> e_i (x) e_j*, row (x) col -> scale * (row . col))
ComatrixContext<Q> matrix_context(std::size_t n, long scale) {
    auto g = ground();
    auto mn = share(Algebra<Q>::matrices(k, n));
    auto col = column_module(mn, g, n);
    auto row = row_module(mn, g, n);
    auto z = chain<Q>({col, row});
    Matrix<Q> eta(k, z->dim(), n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) eta.set_column(i * n + j, z->pure_basis({i, j}));
    auto p = chain<Q>({row, col});
    auto eps = map_on_tuples(*p, 1, [&](const auto& t) { return Vec<Q>{k.from_int(t[0] == t[1] ? scale : 0)}; });
    return make_context("M" + std::to_string(n), col, row, eta, eps);
}

ComatrixContext<Q> trivial_context() {
    auto g = ground();
    auto one = share(Bimodule<Q>::vector_space(g, 1, "k"));
    return make_context("trivial", one, one, Matrix<Q>::identity(k, 1), Matrix<Q>::identity(k, 1));
}

}  // namespace

TEST(Context, TrivialContextGivesTrivialCoring) {
    auto c = trivial_context();
    EXPECT_TRUE(validate_context(c).passed());
    auto d = comatrix_coring(c);
    EXPECT_EQ(d.coring->dim(), 1u);
    EXPECT_TRUE(validate_coring(*d.coring).passed());
    EXPECT_TRUE(validate_comodule(*d.sigma).passed());
    EXPECT_TRUE(validate_left_coaction(d, "dagger").passed());
}

TEST(Context, MatrixContextWithEvaluation) {
    for (std::size_t n : {2u, 3u}) {
        auto c = matrix_context(n, 1);
        auto rep = validate_context(c);
        EXPECT_TRUE(rep.passed()) << rep.first_failure()->name;
        auto d = comatrix_coring(c);
        // rows (x)_{M_n} columns is one-dimensional
        EXPECT_EQ(d.coring->dim(), 1u);
        EXPECT_TRUE(validate_coring(*d.coring).passed());
        EXPECT_TRUE(validate_comodule(*d.sigma).passed());
        EXPECT_TRUE(validate_left_coaction(d, "dagger").passed());
    }
}

TEST(Context, ScaledEvaluationFailsTriangles) {
    auto c = matrix_context(2, 2);
    auto rep = validate_context(c);
    EXPECT_FALSE(rep.passed());
    ASSERT_NE(rep.find("M2.left_triangle"), nullptr);
    EXPECT_EQ(rep.find("M2.left_triangle")->verdict, Verdict::fail);
    EXPECT_EQ(rep.find("M2.right_triangle")->verdict, Verdict::fail);
    EXPECT_EQ(rep.find("M2.eps_bilinear")->verdict, Verdict::pass);
    try {
        comatrix_coring(c);
        FAIL() << "expected InvalidContext";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_context);
    }
}

TEST(Context, AdjunctionTriangles) {
    auto c = matrix_context(2, 1);
    auto g = ground();
    std::vector<BimodulePtr<Q>> ns{share(Bimodule<Q>::regular(c.r)), c.dagger,
                                   share(Bimodule<Q>::free_right(g, c.r, 2))};
    std::vector<BimodulePtr<Q>> ms{share(Bimodule<Q>::vector_space(g, 1, "k1")), share(Bimodule<Q>::vector_space(g, 3, "k3"))};
    auto rep = adjunction_check(c, ns, ms);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.checks().size(), 5u);

    // eta(e12) and eta(e21) swapped
    auto bad = c;
    auto c1 = bad.eta.column(1);
    bad.eta.set_column(1, bad.eta.column(2));
    bad.eta.set_column(2, c1);
    EXPECT_FALSE(validate_context(bad).passed());
    EXPECT_FALSE(adjunction_check(bad, ns, ms).passed());
}

TEST(Context, NonFirmModuleIsSkipped) {
    // zero-multiplication ring: the regular module is not firm
    auto r = share(Algebra<Q>::zero_multiplication(k, 1));
    auto one = share(Bimodule<Q>(r, r, 1, {Matrix<Q>(k, 1, 1)}, {Matrix<Q>(k, 1, 1)}, "S"));
    auto reg = share(Bimodule<Q>::regular(r));
    auto c = make_context("zero", one, one, Matrix<Q>(k, chain<Q>({one, one})->dim(), 1),
                          Matrix<Q>(k, 1, chain<Q>({one, one})->dim()));
    auto rep = adjunction_check(c, {reg}, {});
    ASSERT_EQ(rep.checks().size(), 1u);
    EXPECT_EQ(rep.checks()[0].verdict, Verdict::skipped);
}
