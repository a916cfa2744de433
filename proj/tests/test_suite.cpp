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

#include <coring/io.hpp>
#include <coring/suite.hpp>

#include <filesystem>

using namespace coring;

namespace {

AnyInstance builtin(const std::string& name) {
    for (auto& in : builtin_corpus())
        if (instance_name(in) == name) return in;
    throw std::runtime_error("no corpus instance " + name);
}

const Check* find(const Report& r, const std::string& name) {
    for (const auto& c : r.checks.checks())
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST(Suite, SweedlerPassesEverything) {
    auto r = run_suite(builtin("sweedler"), "all");
    EXPECT_TRUE(r.passed()) << r.checks.first_failure()->name;
    ASSERT_NE(r.find_fact("A.is_galois"), nullptr);
    EXPECT_EQ(*r.find_fact("A.is_galois"), "true");
    ASSERT_NE(r.find_fact("A.comonadic"), nullptr);
    EXPECT_EQ(*r.find_fact("A.comonadic"), "true");
}

TEST(Suite, ZeroMultiplicationIsNotFirm) {
    auto r = run_suite(builtin("zero_mult"), "firm");
    EXPECT_FALSE(r.passed());
    const auto* c = find(r, "firm.Z");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->verdict, Verdict::fail);
    EXPECT_NE(c->detail.find("rank 0"), std::string::npos) << c->detail;
}

TEST(Suite, DiagonalSubringNamesACounterexample) {
    auto r = run_suite(builtin("diagonal_subring"), "comonadic");
    EXPECT_FALSE(r.passed());
    ASSERT_NE(r.find_fact("S.counterexample"), nullptr);
    EXPECT_FALSE(r.find_fact("S.counterexample")->empty());
    EXPECT_EQ(*r.find_fact("S.comonadic"), "false");
}

TEST(Suite, NonUnitalRingSkipsWithReason) {
    auto r = run_suite(builtin("firm_nonunital"), "equivalence");
    EXPECT_TRUE(r.passed());
    std::size_t skipped = 0;
    for (const auto& c : r.checks.checks())
        if (c.verdict == Verdict::skipped) {
            ++skipped;
            EXPECT_FALSE(c.detail.empty()) << c.name;
        }
    EXPECT_GE(skipped, 2u);
}

TEST(Suite, UnknownSuiteRejected) {
    try {
        run_suite(builtin("trivial"), "everything");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_params);
    }
}

TEST(Suite, GoldenVerdictsBuiltin) {
    for (const auto& in : builtin_corpus()) {
        auto out = run_expectations(in);
        EXPECT_FALSE(out.empty()) << instance_name(in) << " has no expected verdicts";
        for (const auto& g : out)
            EXPECT_TRUE(g.matches()) << instance_name(in) << " " << g.suite << ": expected " << g.expected << ", got " << g.got << " "
                                     << g.first_failure;
    }
}

TEST(Suite, GoldenVerdictsFromFiles) {
    std::size_t files = 0;
    for (const auto& e : std::filesystem::directory_iterator(CORING_CORPUS_DIR)) {
        if (e.path().extension() != ".json") continue;
        ++files;
        auto in = io::load(e.path().string());
        for (const auto& g : run_expectations(in))
            EXPECT_TRUE(g.matches()) << e.path() << " " << g.suite << ": expected " << g.expected << ", got " << g.got;
    }
    EXPECT_GE(files, 12u);
}

TEST(Suite, ReportsAreDeterministic) {
    for (const char* name : {"sweedler", "diagonal_subring", "firm_nonunital"}) {
        auto a = io::pretty(io::report_json(run_suite(builtin(name), "all")));
        auto b = io::pretty(io::report_json(run_suite(builtin(name), "all")));
        EXPECT_EQ(a, b) << name;
    }
}
