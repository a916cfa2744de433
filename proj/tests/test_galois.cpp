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

#include <coring/corpus.hpp>
#include <coring/family.hpp>
#include <coring/galois.hpp>

#include "test_util.hpp"

using namespace coring;

namespace {

template <class K>
GaloisInstance<K> first_galois(const Instance<K>& in) {
    return make_galois(in.galois.at(0).name, in.galois.at(0).sigma);
}

template <class K>
void expect_oracle_agrees(const GaloisInstance<K>& g) {
    auto o = testutil::oracle_can(*g.sigma);
    EXPECT_EQ(o.rank, g.rank) << g.name;
    EXPECT_EQ(o.source_dim, g.source->dim()) << g.name;
    EXPECT_EQ(o.target_dim, g.coring().dim()) << g.name;
    EXPECT_EQ(o.iso(), g.is_galois()) << g.name;
}

template <class K>
void expect_flagship(const Instance<K>& in) {
    auto g = first_galois(in);
    EXPECT_TRUE(g.is_galois()) << in.name << ": " << g.rank_str();
    expect_oracle_agrees(g);
    auto fam = module_family(g.coring().base(), {6, 1, 12});
    auto cr = is_comonadic_galois(g, fam);
    EXPECT_TRUE(cr.comonadic) << in.name << " " << cr.counterexample.value_or("");
    EXPECT_TRUE(cr.checks.passed()) << cr.checks.first_failure()->name;
    for (const auto& m : fam) {
        auto lib = canonical_map_for(*g.sigma, m.module);
        auto o = testutil::oracle_can(*g.sigma, m.module.get());
        EXPECT_EQ(lib.rank, o.rank) << m.module->name();
        EXPECT_EQ(lib.source->dim(), o.source_dim) << m.module->name();
        EXPECT_EQ(lib.target->dim(), o.target_dim) << m.module->name();
    }
}

}  // namespace

TEST(Galois, SweedlerOverBothFields) {
    expect_flagship(corpus::sweedler(Rationals{}));
    expect_flagship(corpus::sweedler(PrimeField(7), "sweedler_f7"));
}

TEST(Galois, MatrixCoringsOverBothFields) {
    for (std::size_t n : {2u, 3u}) {
        expect_flagship(corpus::matrix_coring(Rationals{}, n, "mq"));
        expect_flagship(corpus::matrix_coring(PrimeField(7), n, "mf"));
    }
}

TEST(Galois, SweedlerLeftDualIsEndomorphisms) {
    auto g = first_galois(corpus::sweedler(Rationals{}));
    auto ld = left_dual_ring(g.coring());
    // Hom_A(A (x) A, A) = End_k(A)
    EXPECT_EQ(ld.ring->dim(), 4u);
    EXPECT_TRUE(ld.ring->is_unital());
    auto rep = dual_ring_iso_check(g);
    EXPECT_TRUE(rep.passed()) << rep.first_failure()->name;
    EXPECT_TRUE(counit_factorization_check(g).passed());
}

TEST(Galois, SweedlerRebuiltContext) {
    auto g = first_galois(corpus::sweedler(Rationals{}));
    auto rc = comonadic_context(g);
    EXPECT_TRUE(rc.report.passed()) << rc.report.first_failure()->name << " " << rc.report.first_failure()->detail;
    ASSERT_TRUE(rc.context.has_value());
    ASSERT_TRUE(rc.over_r.has_value());
    EXPECT_EQ(rc.theta.rows(), g.coring().dim());
    EXPECT_EQ(lin::rank(rc.theta), g.coring().dim());
}

TEST(Galois, UnitalCaseDualBasisAndJ) {
    for (std::size_t n : {2u, 3u}) {
        auto g = first_galois(corpus::matrix_coring(Rationals{}, n, "m"));
        auto fam = module_family(g.coring().base(), {4, 1, 12});
        auto rep = unital_corollary_check(g, fam, comodule_family(g.sigma, fam, 2));
        EXPECT_TRUE(rep.passed()) << rep.first_failure()->name << " " << rep.first_failure()->detail;
        auto e = colinear_endomorphisms(g);
        EXPECT_EQ(e.ring->dim(), g.r()->dim());
    }
}

TEST(Galois, EquivalenceOnMatrixCoring) {
    auto g = first_galois(corpus::matrix_coring(PrimeField(7), 2, "m"));
    auto fam = module_family(g.coring().base(), {4, 1, 12});
    auto rep = equivalence_check(g, firm_module_family(g.r(), {4, 1, 12}), comodule_family(g.sigma, fam, 2));
    EXPECT_TRUE(rep.passed()) << rep.first_failure()->name;
}

TEST(Galois, DiagonalSubringIsNotGalois) {
    auto g = first_galois(corpus::diagonal_subring(Rationals{}));
    EXPECT_FALSE(g.is_galois());
    expect_oracle_agrees(g);
    auto cr = is_comonadic_galois(g, module_family(g.coring().base(), {5, 1, 12}));
    EXPECT_FALSE(cr.comonadic);
    ASSERT_TRUE(cr.counterexample.has_value());
    EXPECT_THROW(comonadic_context(g), Error);
}

TEST(Galois, UpperSubcoringHasRankThree) {
    auto g = first_galois(corpus::upper_subcoring(Rationals{}));
    EXPECT_EQ(g.rank, 3u);
    EXPECT_EQ(g.source->dim(), 4u);
    EXPECT_EQ(g.coring().dim(), 3u);
    expect_oracle_agrees(g);
}

TEST(Galois, NonUnitalRingSkipsUnitalCase) {
    auto g = first_galois(corpus::firm_nonunital(Rationals{}));
    EXPECT_TRUE(g.is_galois()) << g.rank_str();
    expect_oracle_agrees(g);
    try {
        unital_corollary_check(g, {}, {});
        FAIL() << "expected NotUnital";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_unital);
    }
    auto rep = local_units_check(g);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.checks().at(0).verdict, Verdict::skipped);
}

TEST(Galois, NuRejectsNonColinearRing) {
    const Rationals k;
    auto g = first_galois(corpus::matrix_coring(k, 2, "m"));
    Matrix<Rationals> e11(k, 2, 2);
    e11(0, 0) = k.one();
    try {
        galois_implies_comonadic(g, {e11}, {});
        FAIL() << "expected PreconditionFailed";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::precondition_failed);
    }
}

TEST(Galois, NuOnSweedler) {
    auto g = first_galois(corpus::sweedler(Rationals{}));
    auto fam = module_family(g.coring().base(), {4, 1, 12});
    auto rep = galois_implies_comonadic(g, g.carrier().left_acts(), fam, "jR");
    EXPECT_TRUE(rep.passed()) << rep.first_failure()->name;
}
