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

#include <coring/firm.hpp>
#include <coring/standard.hpp>

#include "test_util.hpp"

using namespace coring;
using namespace coring::standard;

namespace {

using Q = Rationals;
const Q k;

AlgebraPtr<Q> ground() { return share(Algebra<Q>::ground(k)); }

// span{e11, e12}: left unital by e11, no right unit
AlgebraPtr<Q> left_unital() { return share(Algebra<Q>::matrix_units(k, 2, {{0, 0}, {0, 1}}, "R")); }

// strictly upper triangular 3x3: R^2 = span{e13} != R
AlgebraPtr<Q> nilpotent() { return share(Algebra<Q>::matrix_units(k, 3, {{0, 1}, {0, 2}, {1, 2}}, "N3")); }

std::size_t naive_tensor_dim(const Bimodule<Q>& m, const Bimodule<Q>& n) {
    std::vector<oracle::QRows> r, l;
    for (const auto& a : m.right_acts()) r.push_back(testutil::to_q(a));
    for (const auto& a : n.left_acts()) l.push_back(testutil::to_q(a));
    return oracle::tensor_dim<mpq_class>(m.dim(), n.dim(), r, l, oracle::rank_q);
}

}  // namespace

TEST(Firmness, SpecExamples) {
    for (auto r : {share(Algebra<Q>::upper_triangular(k, 2)), share(Algebra<Q>::truncated_polynomials(k, 2))}) {
        auto reg = share(Bimodule<Q>::regular(r));
        EXPECT_TRUE(firmness(reg, r));
        auto m = share(Bimodule<Q>::free_right(ground(), r, 2));
        auto f = firmness(m, r);
        ASSERT_TRUE(f);
        EXPECT_TRUE(witness_valid(*f.witness));
    }

    auto r = left_unital();
    ASSERT_FALSE(r->is_unital());
    auto reg = share(Bimodule<Q>::regular(r));
    EXPECT_EQ(naive_tensor_dim(*reg, *reg), 2u);
    auto f = firmness(reg, r);
    ASSERT_TRUE(f);
    EXPECT_EQ(f.certificate.tensor_dim, 2u);

    auto z = share(Algebra<Q>::zero_multiplication(k, 1));
    auto zr = share(Bimodule<Q>::regular(z));
    EXPECT_EQ(naive_tensor_dim(*zr, *zr), 1u);
    auto g = firmness(zr, z);
    EXPECT_FALSE(g);
    EXPECT_EQ(g.certificate.tensor_dim, 1u);
    EXPECT_EQ(g.certificate.rank, 0u);
}

TEST(Firmness, Rings) {
    EXPECT_TRUE(is_firm_ring(share(Algebra<Q>::matrices(k, 2))));
    EXPECT_TRUE(is_firm_ring(left_unital()));
    EXPECT_FALSE(is_firm_ring(share(Algebra<Q>::zero_multiplication(k, 1))));
    EXPECT_FALSE(is_firm_ring(nilpotent()));
    // right-unital mirror image is firm too
    EXPECT_TRUE(is_firm_ring(share(Algebra<Q>::matrix_units(k, 2, {{0, 0}, {1, 0}}, "Rop"))));
    // an idempotent-generated non-unital ring: span{e11, e12, e13} in M3
    EXPECT_TRUE(is_firm_ring(share(Algebra<Q>::matrix_units(k, 3, {{0, 0}, {0, 1}, {0, 2}}, "row3"))));
}

TEST(Firmness, QuotientOfFirmRingNeedNotBeFirm) {
    auto r = left_unital();
    auto reg = share(Bimodule<Q>::regular(r));
    auto qm = share(quotient_module(*reg, {r->basis(1)}).module);
    ASSERT_EQ(qm->dim(), 1u);
    EXPECT_FALSE(firmness(qm, r));
    auto qr = chain<Q>({qm, reg})->result_ptr();
    EXPECT_EQ(qr->dim(), 2u);
    EXPECT_TRUE(firmness(qr, r));
}

TEST(Dorroh, SpecExamples) {
    PrimeField f5(5);
    auto z = share(Algebra<PrimeField>::zero_multiplication(f5, 1));
    auto e = dorroh(z);
    ASSERT_EQ(e.rhat->dim(), 2u);
    EXPECT_TRUE(e.rhat->is_unital());
    EXPECT_TRUE(validate_algebra(*e.rhat).passed());
    EXPECT_EQ(e.rhat->basis_product(0, 0), (Vec<PrimeField>{0, 0}));
    EXPECT_EQ(e.rhat->basis_product(1, 0), (Vec<PrimeField>{1, 0}));

    for (auto r : {share(Algebra<Q>::matrices(k, 2)), left_unital(), nilpotent()}) {
        auto d = dorroh(r);
        EXPECT_EQ(d.rhat->dim(), r->dim() + 1);
        EXPECT_TRUE(validate_algebra(*d.rhat).passed());
        EXPECT_TRUE(is_algebra_morphism(d.inclusion, *r, *d.rhat));
        // unit of R-hat is the adjoined one, not R's
        EXPECT_EQ(*d.rhat->unit(), lin::unit_vec(k, r->dim() + 1, r->dim()));
        // image is a two-sided ideal: last coordinate of every product with R stays zero
        for (std::size_t i = 0; i < r->dim(); ++i)
            for (std::size_t j = 0; j <= r->dim(); ++j) {
                EXPECT_EQ(d.rhat->basis_product(i, j)[r->dim()], 0);
                EXPECT_EQ(d.rhat->basis_product(j, i)[r->dim()], 0);
            }
    }
}

TEST(FirmCoringTest, FromFirmRings) {
    for (auto r : {share(Algebra<Q>::upper_triangular(k, 2)), left_unital()}) {
        auto fc = coring_from_firm_ring(r);
        EXPECT_EQ(fc.coring->dim(), r->dim());
        EXPECT_EQ(fc.coring->base()->dim(), r->dim() + 1);
        auto rep = validate_coring(*fc.coring);
        EXPECT_TRUE(rep.passed()) << rep.first_failure()->name << " " << rep.first_failure()->detail;
        // the candidate search also finds a coring
        EXPECT_TRUE(validate_coring(*coring_candidate(r).coring).passed());
    }
    try {
        coring_from_firm_ring(share(Algebra<Q>::zero_multiplication(k, 1)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_firm);
    }
}

TEST(FirmCoringTest, NonFirmCandidatesFail) {
    for (auto r : {share(Algebra<Q>::zero_multiplication(k, 1)), share(Algebra<Q>::zero_multiplication(k, 2)), nilpotent()}) {
        auto fc = coring_candidate(r);
        EXPECT_FALSE(validate_coring(*fc.coring).passed()) << r->name();
    }
}

TEST(FirmCoringTest, ModulesAndComodulesRoundTrip) {
    auto r = left_unital();
    auto fc = coring_from_firm_ring(r);
    auto reg = share(Bimodule<Q>::regular(r));
    auto qr = chain<Q>({share(quotient_module(*reg, {r->basis(1)}).module), reg})->result_ptr();
    std::vector<BimodulePtr<Q>> mods{reg, share(Bimodule<Q>::free_right(ground(), r, 2)),
                                     share(Bimodule<Q>::free_right(ground(), r, 3)), qr};
    for (std::size_t i = 0; i < mods.size(); ++i) {
        auto f = firmness(mods[i], r);
        ASSERT_TRUE(f) << i;
        auto c = firm_module_to_comodule(*f.witness, fc);
        EXPECT_TRUE(validate_comodule(c).passed()) << i;
        if (i == 0) {
            EXPECT_EQ(c.coaction(), fc.coring->comult());
        }
        auto back = comodule_to_firm_module(c, fc);
        EXPECT_TRUE(back.module->same_structure(*mods[i]));
        EXPECT_EQ(back.d, f.witness->d);
        auto again = firm_module_to_comodule(back, fc);
        EXPECT_EQ(again.coaction(), c.coaction());
    }
}

TEST(Elementary, MatricesFromColumns) {
    auto kk = ground();
    for (std::size_t n = 1; n <= 3; ++n) {
        auto sigma = share(Bimodule<Q>::vector_space(kk, n, "k^n"));
        auto z = elementary_ring(evaluation_pair(sigma));
        ASSERT_EQ(z.ring->dim(), n * n);
        EXPECT_TRUE(z.ring->is_unital());
        EXPECT_TRUE(validate_algebra(*z.ring).passed());
        // the action on Sigma is an algebra isomorphism onto M_n
        auto mn = Algebra<Q>::matrices(k, n);
        Matrix<Q> phi(k, n * n, n * n);
        for (std::size_t q = 0; q < n * n; ++q)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) phi(i * n + j, q) = z.sigma->left_act(q)(i, j);
        EXPECT_TRUE(lin::is_isomorphism(phi));
        EXPECT_TRUE(is_algebra_morphism(phi, *z.ring, mn));
    }
}

TEST(Elementary, RegularAndZero) {
    auto a = share(Algebra<Q>::upper_triangular(k, 2));
    auto reg = share(Bimodule<Q>::regular(a));
    auto p = make_dual_pair(reg, reg, right_multiplication_map(*chain<Q>({reg, reg})));
    EXPECT_TRUE(validate_dual_pair(p).passed());
    auto z = elementary_ring(p);
    EXPECT_EQ(z.ring->dim(), a->dim());
    EXPECT_TRUE(z.ring->is_unital());

    auto kk = ground();
    auto zero = share(Bimodule<Q>::vector_space(kk, 0, "0"));
    auto z0 = elementary_ring(evaluation_pair(zero));
    EXPECT_EQ(z0.ring->dim(), 0u);
    EXPECT_TRUE(validate_algebra(*z0.ring).passed());
}

TEST(FirmProjective, ColumnsOverMatrices) {
    auto kk = ground();
    for (std::size_t n = 1; n <= 3; ++n) {
        auto sigma = share(Bimodule<Q>::vector_space(kk, n, "k^n"));
        auto mn = share(Algebra<Q>::matrices(k, n));
        std::vector<Matrix<Q>> acts;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) acts.push_back(matrix_unit(k, n, i, j));
        auto iota = iota_from_actions(sigma, acts);
        ASSERT_TRUE(iota.has_value());
        auto f = is_firmly_projective(sigma, mn, *iota);
        ASSERT_TRUE(f) << f.reason;
        EXPECT_EQ(f.pair->pair.dagger->dim(), n);
        EXPECT_TRUE(validate_dual_pair(f.pair->pair).passed());
        auto r1 = firm_over_elementary_check(*f.pair);
        EXPECT_TRUE(r1.passed()) << r1.first_failure()->name;
        auto r3 = dagger_iso_check(*f.pair);
        EXPECT_TRUE(r3.passed()) << r3.first_failure()->name;
    }
}

TEST(FirmProjective, UnitalRegular) {
    auto kk = ground();
    auto a = share(Algebra<Q>::upper_triangular(k, 2));
    auto sigma = share(forget_left(Bimodule<Q>::regular(a), kk));
    std::vector<Matrix<Q>> acts;
    for (std::size_t i = 0; i < a->dim(); ++i) acts.push_back(a->left_mult(a->basis(i)));
    auto iota = iota_from_actions(sigma, acts);
    ASSERT_TRUE(iota.has_value());
    auto f = is_firmly_projective(sigma, a, *iota);
    ASSERT_TRUE(f) << f.reason;
    EXPECT_TRUE(firm_over_elementary_check(*f.pair).passed());
    EXPECT_TRUE(dagger_iso_check(*f.pair).passed());
}

TEST(FirmProjective, LeftUnitalRingOnColumnsIsNotFirm) {
    auto kk = ground();
    auto r = left_unital();
    auto sigma = share(Bimodule<Q>::vector_space(kk, 2, "k^2"));
    auto iota = iota_from_actions(sigma, {matrix_unit(k, 2, 0, 0), matrix_unit(k, 2, 0, 1)});
    ASSERT_TRUE(iota.has_value());
    auto f = is_firmly_projective(sigma, r, *iota);
    EXPECT_FALSE(f);
    EXPECT_NE(f.reason.find("rank 1"), std::string::npos) << f.reason;
}

TEST(FirmProjective, NonMultiplicativeIotaRejected) {
    auto kk = ground();
    auto sigma = share(Bimodule<Q>::vector_space(kk, 2, "k^2"));
    std::vector<Matrix<Q>> acts;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) acts.push_back(matrix_unit(k, 2, i, j).scaled(k.from_int(2)));
    auto iota = iota_from_actions(sigma, acts);
    ASSERT_TRUE(iota.has_value());
    try {
        is_firmly_projective(sigma, share(Algebra<Q>::matrices(k, 2)), *iota);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_algebra_morphism);
    }
}
