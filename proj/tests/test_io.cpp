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

#include <string>

using namespace coring;

namespace {

std::string corpus_file(const std::string& name) { return std::string(CORING_CORPUS_DIR) + "/" + name + ".json"; }

Errc load_error(const std::string& text) {
    try {
        io::load_string(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "document loaded: " << text;
    return Errc::invalid_params;
}

const char* one_algebra = R"({"format_version": 1, "name": "x", "field": {"characteristic": %P%},
  "algebras": [{"name": "A", "dim": 1, "structure_constants": [[%C%]]}]%REST%})";

std::string doc(const std::string& p, const std::string& c, const std::string& rest = "") {
    std::string s = one_algebra;
    s.replace(s.find("%P%"), 3, p);
    s.replace(s.find("%C%"), 3, c);
    s.replace(s.find("%REST%"), 6, rest);
    return s;
}

}  // namespace

TEST(Io, MatrixCoringFileHasOneCoringAndOneComodule) {
    auto in = io::load(corpus_file("matrix_coring_n2"));
    const auto& q = std::get<Instance<Rationals>>(in);
    EXPECT_EQ(q.corings.size(), 1u);
    EXPECT_EQ(q.comodules.size(), 1u);
    EXPECT_EQ(q.corings[0]->dim(), 4u);
}

TEST(Io, BuiltinCorpusRoundTrips) {
    for (const auto& in : builtin_corpus()) {
        auto j = io::emit(in);
        auto back = io::load_json(j);
        std::string why;
        EXPECT_TRUE(io::structurally_equal(in, back, &why)) << instance_name(in) << ": " << why;
        EXPECT_EQ(io::emit(back).dump(), j.dump()) << instance_name(in);
    }
}

TEST(Io, CommittedCorpusMatchesBuiltin) {
    for (const auto& in : builtin_corpus()) {
        auto file = io::load(corpus_file(instance_name(in)));
        std::string why;
        EXPECT_TRUE(io::structurally_equal(in, file, &why)) << instance_name(in) << ": " << why;
    }
}

TEST(Io, PrettyOutputParsesBack) {
    auto j = io::emit(builtin_corpus().at(1));
    EXPECT_EQ(io::json::parse(io::pretty(j)), j);
}

TEST(Io, Errors) {
    EXPECT_NO_THROW(io::load_string(doc("0", "1")));
    EXPECT_EQ(load_error(doc("2", "\"1/2\"")), Errc::bad_field_element);
    EXPECT_EQ(load_error(doc("0", "\"1/0\"")), Errc::bad_field_element);
    EXPECT_EQ(load_error(doc("0", "1", R"(, "bimodules": [{"name": "M", "left": "B", "right": "A", "dim": 1,
        "left_action": [[[1]]], "right_action": [[[1]]]}])")),
              Errc::unknown_reference);
    EXPECT_EQ(load_error(doc("0", "1, 2")), Errc::dimension_mismatch);
    EXPECT_EQ(load_error("{not json"), Errc::parse_error);
    EXPECT_EQ(load_error(R"({"format_version": 7})"), Errc::parse_error);
    EXPECT_EQ(load_error(doc("0", "true")), Errc::parse_error);
}

TEST(Io, UnknownReferenceNamesTheMissingAlgebra) {
    try {
        io::load_string(doc("0", "1", R"(, "bimodules": [{"name": "M", "left": "B", "right": "A", "dim": 1,
        "left_action": [[[1]]], "right_action": [[[1]]]}])"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("'B'"), std::string::npos) << e.what();
    }
}

TEST(Io, FractionsSurviveRoundTrip) {
    auto in = io::load_string(doc("0", "\"3/7\""));
    auto j = io::emit(in);
    EXPECT_EQ(j["algebras"][0]["structure_constants"][0][0], "3/7");
}

TEST(Io, UnitAbsentMeansDetected) {
    auto q = std::get<Instance<Rationals>>(io::load_string(doc("0", "1")));
    EXPECT_TRUE(q.algebras[0]->is_unital());
    auto z = std::get<Instance<Rationals>>(io::load_string(doc("0", "0")));
    EXPECT_FALSE(z.algebras[0]->is_unital());
}
