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

#include <coring/generate.hpp>
#include <coring/io.hpp>
#include <coring/suite.hpp>

using namespace coring;

TEST(Generate, RejectsBadParameters) {
    for (GenerateParams gp : {GenerateParams{"matrix_coring", 0, 0, 1}, GenerateParams{"matrix_coring", 5, 0, 1},
                              GenerateParams{"nope", 2, 0, 1}, GenerateParams{"firm_nonunital", 1, 0, 1}}) {
        try {
            generate(gp);
            FAIL() << gp.kind << " n=" << gp.n;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::invalid_params);
        }
    }
    EXPECT_THROW(generate({"matrix_coring", 2, 4, 1}), Error);  // 4 is not prime
}

TEST(Generate, Deterministic) {
    for (const auto& kind : generator_kinds())
        for (std::uint32_t p : {0u, 7u}) {
            auto a = io::emit(generate({kind, 2, p, 9})).dump();
            auto b = io::emit(generate({kind, 2, p, 9})).dump();
            EXPECT_EQ(a, b) << kind;
        }
    EXPECT_NE(io::emit(generate({"matrix_coring", 2, 0, 1})).dump(), io::emit(generate({"matrix_coring", 2, 0, 2})).dump());
}

TEST(Generate, FirmNonunitalSeed42IsTheRowIdeal) {
    auto in = std::get<Instance<Rationals>>(generate({"firm_nonunital", 2, 0, 42}));
    auto want = Algebra<Rationals>::matrix_units(Rationals{}, 2, {{0, 0}, {0, 1}}, "R");
    bool found = false;
    for (const auto& a : in.algebras) found = found || (a->name() == "R" && a->same_structure(want));
    EXPECT_TRUE(found);
}

TEST(Generate, MatrixCoringIsValid) {
    for (std::uint32_t p : {0u, 5u}) {
        auto in = generate({"matrix_coring", 3, p, 1});
        auto r = run_suite(in, "axioms");
        EXPECT_TRUE(r.passed()) << r.checks.first_failure()->name;
        auto g = run_suite(in, "galois");
        EXPECT_TRUE(g.passed());
    }
}

TEST(Generate, GeneratedInstancesRoundTrip) {
    for (const auto& kind : generator_kinds()) {
        auto in = generate({kind, 2, 7, 3});
        std::string why;
        EXPECT_TRUE(io::structurally_equal(in, io::load_json(io::emit(in)), &why)) << kind << ": " << why;
    }
}
