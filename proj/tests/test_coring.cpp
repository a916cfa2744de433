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

#include <coring/standard.hpp>

#include "test_util.hpp"

using namespace coring;
using namespace coring::standard;

namespace {

using Q = Rationals;
const Q k;

AlgebraPtr<Q> ground() { return share(Algebra<Q>::ground(k)); }

CoringPtr<Q> mc2() { return share(matrix_coring(ground(), 2)); }

// Coassociativity and counit laws of a coring over the ground field, checked in
// the ambient tensor powers with plain index loops.
bool naive_coring_over_field(const Coring<Q>& c) {
    const std::size_t d = c.dim();
    // over k the quotient [C,C] is the full ambient with tuple (x,y) -> x*d+y
    auto delta = [&](std::size_t b) {
        std::vector<mpq_class> v(d * d);
        auto col = c.comult().column(b);
        for (std::size_t q = 0; q < col.size(); ++q) {
            auto t = c.cc().basis_tuple(q);
            v[t[0] * d + t[1]] += col[q];
        }
        return v;
    };
    for (std::size_t b = 0; b < d; ++b) {
        auto v = delta(b);
        std::vector<mpq_class> lhs(d * d * d), rhs(d * d * d);
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) {
                if (v[x * d + y] == 0) continue;
                auto dx = delta(x), dy = delta(y);
                for (std::size_t i = 0; i < d * d; ++i) {
                    lhs[i * d + y] += v[x * d + y] * dx[i];
                    rhs[x * d * d + i] += v[x * d + y] * dy[i];
                }
            }
        if (lhs != rhs) return false;
        std::vector<mpq_class> l1(d), r1(d);
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) {
                l1[y] += v[x * d + y] * c.counit()(0, x);
                r1[x] += v[x * d + y] * c.counit()(0, y);
            }
        for (std::size_t i = 0; i < d; ++i)
            if (l1[i] != (i == b ? 1 : 0) || r1[i] != (i == b ? 1 : 0)) return false;
    }
    return true;
}

}  // namespace

TEST(ValidateCoring, TrivialCorings) {
    for (auto a : {share(Algebra<Q>::matrices(k, 2)), share(Algebra<Q>::upper_triangular(k, 2)),
                   share(Algebra<Q>::truncated_polynomials(k, 3))}) {
        auto rep = validate_coring(Coring<Q>::trivial(a));
        EXPECT_TRUE(rep.passed()) << rep.first_failure()->name;
    }
}

TEST(ValidateCoring, MatrixCoring) {
    for (std::size_t n = 1; n <= 3; ++n) {
        auto c = matrix_coring(ground(), n);
        EXPECT_TRUE(naive_coring_over_field(c));
        EXPECT_TRUE(validate_coring(c).passed());
    }
    auto up = matrix_coring(ground(), 2, {{0, 0}, {0, 1}, {1, 1}}, "Uc2");
    EXPECT_TRUE(naive_coring_over_field(up));
    EXPECT_TRUE(validate_coring(up).passed());
}

TEST(ValidateCoring, AllOnesCounitFails) {
    auto good = mc2();
    Matrix<Q> ones(k, 1, 4);
    for (std::size_t j = 0; j < 4; ++j) ones(0, j) = 1;
    Coring<Q> bad(good->carrier_ptr(), good->comult(), ones, "bad");
    EXPECT_FALSE(naive_coring_over_field(bad));
    auto rep = validate_coring(bad);
    EXPECT_FALSE(rep.passed());
    EXPECT_TRUE(rep.find("bad.coassociative")->verdict == Verdict::pass);
    auto* c = rep.find("bad.left_counit");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->verdict, Verdict::fail);
    // e12 is basis element 2; (eps (x) C) Delta(e12) = e12 + e22
    EXPECT_NE(c->detail.find("e2 -> (0,1,0,1)"), std::string::npos) << c->detail;
}

TEST(ValidateCoring, ShapeErrors) {
    auto good = mc2();
    try {
        Coring<Q>(good->carrier_ptr(), Matrix<Q>(k, 3, 4), good->counit());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::dimension_mismatch);
    }
    auto nonunital = share(Algebra<Q>::zero_multiplication(k, 1));
    auto c = share(Bimodule<Q>::regular(nonunital));
    try {
        Coring<Q>(c, Matrix<Q>(k, 1, 1), Matrix<Q>(k, 1, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_unital);
    }
}

TEST(ValidateComodule, SpecExamples) {
    auto c = mc2();
    EXPECT_TRUE(validate_comodule(Comodule<Q>::regular(c)).passed());
    auto sigma = column_comodule(c, 2);
    EXPECT_TRUE(validate_comodule(sigma).passed());

    // e_i -> e_i (x) e11
    std::vector<Vec<Q>> rho;
    for (std::size_t i = 0; i < 2; ++i) {
        Vec<Q> v(8, k.zero());
        v[i * 4 + 0] = 1;
        rho.push_back(v);
    }
    auto bad = Comodule<Q>::from_ambient(c, sigma.carrier_ptr(), rho, "bad");
    auto rep = validate_comodule(bad);
    auto* co = rep.find("bad.coassociative");
    ASSERT_NE(co, nullptr);
    EXPECT_EQ(co->verdict, Verdict::fail);
    EXPECT_NE(co->detail.find("e2 ->"), std::string::npos) << co->detail;
}

TEST(ValidateComodule, CofreeAndSumsPass) {
    auto c = mc2();
    auto kk = c->base();
    auto sigma = column_comodule(c, 2);
    auto k3 = share(Bimodule<Q>::vector_space(kk, 3, "k3"));
    EXPECT_TRUE(validate_comodule(cofree_comodule(k3, c)).passed());
    EXPECT_TRUE(validate_comodule(direct_sum(sigma, sigma)).passed());
    EXPECT_TRUE(validate_comodule(direct_sum(sigma, Comodule<Q>::regular(c))).passed());

    auto a = share(Algebra<Q>::upper_triangular(k, 2));
    auto triv = share(Coring<Q>::trivial(a));
    auto m = share(Bimodule<Q>::free_right(kk, a, 2));
    EXPECT_TRUE(validate_comodule(cofree_comodule(m, triv)).passed());
}

TEST(HomColinear, TrivialCoringRecoversAlgebra) {
    for (auto a : {share(Algebra<Q>::upper_triangular(k, 2)), share(Algebra<Q>::truncated_polynomials(k, 3))}) {
        auto c = share(Coring<Q>::trivial(a));
        auto reg = Comodule<Q>::regular(c);
        EXPECT_EQ(hom_colinear(reg, reg)->dim(), a->dim());
    }
}

TEST(HomColinear, ColumnsIntoMatrixCoring) {
    auto c = mc2();
    auto sigma = column_comodule(c, 2);
    auto reg = Comodule<Q>::regular(c);
    auto h = hom_colinear(sigma, reg);
    // independent count: f : k^2 -> k^4 with rho_C f = (f (x) C) rho_Sigma, in ambient coordinates
    oracle::QRows sys;
    const std::size_t n = 2, d = 4;
    // unknown f(r, s): row r of C, column s of Sigma; index s*d + r
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) {
                std::vector<mpq_class> row(n * d, 0);
                // (Delta f(e_s))_{x,y} = sum_r f(r,s) Delta(e_r)_{x,y}
                for (std::size_t r = 0; r < d; ++r) {
                    auto [i, j] = std::pair{r / n, r % n};
                    auto [xi, xj] = std::pair{x / n, x % n};
                    auto [yi, yj] = std::pair{y / n, y % n};
                    if (xi == i && yj == j && xj == yi) row[s * d + r] += 1;
                }
                // ((f (x) C) rho(e_s))_{x,y} = sum_t f(x, t) [y = e_ts]
                for (std::size_t t = 0; t < n; ++t)
                    if (y == t * n + s) row[t * d + x] -= 1;
                sys.push_back(row);
            }
    EXPECT_EQ(h->dim(), n * d - oracle::rank_q(sys));
    EXPECT_EQ(h->dim(), 2u);
}

TEST(HomColinear, InclusionAndVarpi) {
    auto c = mc2();
    auto kk = c->base();
    auto sigma = column_comodule(c, 2);
    for (std::size_t dm : {1u, 2u, 3u}) {
        auto m = share(Bimodule<Q>::vector_space(kk, dm, "k" + std::to_string(dm)));
        auto cof = cofree_comodule(m, c);
        auto ha = hom_right_linear(sigma.carrier_ptr(), m);
        auto hc = hom_colinear(sigma, cof);
        auto big = hom_right_linear(sigma.carrier_ptr(), cof.carrier_ptr());
        EXPECT_EQ(lin::rank(hc->inclusion_into(*big)), hc->dim());
        EXPECT_EQ(ha->dim(), hc->dim());
        auto w = varpi(sigma, m, *ha, *hc);
        EXPECT_TRUE(lin::is_isomorphism(w));
    }
}

TEST(HomColinear, DifferentCoringsRejected) {
    auto c = mc2();
    auto other = share(matrix_coring(ground(), 3));
    try {
        hom_colinear(column_comodule(c, 2), column_comodule(other, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::coring_mismatch);
    }
}

TEST(RelativeInjectivity, CofreeAndRegular) {
    auto c = mc2();
    auto kk = c->base();
    auto sigma = column_comodule(c, 2);
    auto reg = Comodule<Q>::regular(c);
    auto cof = cofree_comodule(share(Bimodule<Q>::vector_space(kk, 2, "k2")), c);
    for (const auto* n : {&reg, &cof, &sigma}) {
        auto w = relative_injectivity(*n);
        ASSERT_TRUE(w.has_value()) << n->name();
        EXPECT_TRUE(Matrix<Q>(w->gamma * n->coaction()).is_identity());
        for (const auto* l : {&sigma, &reg}) {
            auto rep = contractible_equalizer_check(*l, *n, *w);
            EXPECT_TRUE(rep.passed()) << rep.first_failure()->name << ": " << rep.first_failure()->detail;
        }
    }
}

TEST(RelativeInjectivity, TrivialCoringOverNonSemisimpleBase) {
    auto a = share(Algebra<Q>::upper_triangular(k, 2));
    auto c = share(Coring<Q>::trivial(a));
    auto kk = ground();
    auto m = share(quotient_module(Bimodule<Q>::free_right(kk, a, 1), {lin::unit_vec(k, 3, 1)}).module);
    auto cof = cofree_comodule(m, c);
    auto w = relative_injectivity(cof);
    ASSERT_TRUE(w.has_value());
    auto rep = contractible_equalizer_check(Comodule<Q>::regular(c), cof, *w);
    EXPECT_TRUE(rep.passed());
}

TEST(RelativeInjectivity, NonSplitSubcomoduleHasNoWitness) {
    auto up = share(matrix_coring(ground(), 2, {{0, 0}, {0, 1}, {1, 1}}, "Uc2"));
    auto line = Comodule<Q>::from_ambient(up, share(Bimodule<Q>::vector_space(up->base(), 1, "ke1")),
                                          {Vec<Q>{k.one(), k.zero(), k.zero()}});
    ASSERT_TRUE(validate_comodule(line).passed());
    EXPECT_FALSE(relative_injectivity(line).has_value());
    auto top = Comodule<Q>::from_ambient(up, share(Bimodule<Q>::vector_space(up->base(), 1, "ke2")),
                                         {Vec<Q>{k.zero(), k.zero(), k.one()}});
    EXPECT_TRUE(validate_comodule(top).passed());
}
