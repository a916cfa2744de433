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


// coring-cli: load instance files, run check suites, print reports.
//
// Exit status: 0 when every check passed, 1 when a check failed (or a
// golden expectation was missed), 2 on a load or configuration error.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <coring/generate.hpp>
#include <coring/io.hpp>
#include <coring/suite.hpp>

namespace {

using namespace coring;

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> family_size;
    std::optional<std::size_t> max_dim;

    void add_to(CLI::App* app) {
        app->add_option("--seed", seed, "seed for family sampling");
        app->add_option("--family-size", family_size, "number of test modules per family");
        app->add_option("--max-dim", max_dim, "largest module dimension in a family");
    }
    void apply(AnyInstance& in) const {
        std::visit(
            [&](auto& i) {
                if (seed) i.params.seed = *seed;
                if (family_size) i.params.family_size = *family_size;
                if (max_dim) i.params.max_dim = *max_dim;
            },
            in);
    }
};

AnyInstance load_with_overrides(const std::string& path, const Overrides& o) {
    auto in = io::load(path);
    std::visit([](const auto& i) { io::check_unique_names(i); }, in);
    o.apply(in);
    return in;
}

struct Timed {
    Report report;
    double ms;
};

Timed timed_run(const AnyInstance& in, const std::string& suite) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = run_suite(in, suite);
    std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    return {std::move(r), dt.count()};
}

void print(const Timed& t, const std::string& format, bool verbose, bool timing) {
    if (format == "json")
        std::cout << io::pretty(io::report_json(t.report, timing ? std::optional<double>(t.ms) : std::nullopt));
    else {
        std::cout << io::report_text(t.report, verbose);
        if (timing) std::cout << "  time " << t.ms << " ms\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coring-cli: exact checks for corings, comodules, firm rings and Galois comodules"};
    app.require_subcommand(1);

    Overrides ov;
    std::string file, suite = "all", format = "text", out_dir;
    bool verbose = false, timing = false, list = false;
    GenerateParams gp;

    auto* validate = app.add_subcommand("validate", "load an instance and check every structure's axioms");
    validate->add_option("file", file, "instance file")->required();
    validate->add_flag("-v,--verbose", verbose, "list passing checks too");

    auto* check = app.add_subcommand("check", "run one suite on an instance");
    check->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    check->add_option("file", file, "instance file")->required();
    check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    check->add_flag("-v,--verbose", verbose, "list passing checks too");
    check->add_flag("--timing", timing, "include wall time (output is then not reproducible)");
    ov.add_to(check);

    auto* report = app.add_subcommand("report", "run the suites listed in an instance and print full reports");
    report->add_option("file", file, "instance file")->required();
    report->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    report->add_option("--suite", suite, "run this suite instead of the listed ones")->check(CLI::IsMember(suite_names()));
    report->add_flag("--timing", timing, "include wall time (output is then not reproducible)");
    ov.add_to(report);

    auto* golden = app.add_subcommand("golden", "compare suite verdicts with an instance's expected tags");
    std::vector<std::string> files;
    golden->add_option("files", files, "instance files")->required();

    auto* generate_cmd = app.add_subcommand("generate", "write a seeded random instance as JSON");
    generate_cmd->add_option("--kind", gp.kind, "generator kind")->check(CLI::IsMember(generator_kinds()));
    generate_cmd->add_option("--n", gp.n, "size parameter (1..4)");
    generate_cmd->add_option("--p", gp.p, "0 for the rationals, otherwise a prime");
    generate_cmd->add_option("--seed", gp.seed, "random seed");

    auto* corpus_cmd = app.add_subcommand("corpus", "write the built-in corpus as JSON files");
    corpus_cmd->add_option("--out", out_dir, "output directory");
    corpus_cmd->add_flag("--list", list, "only list instance names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*validate) {
            auto in = load_with_overrides(file, ov);
            auto t = timed_run(in, "axioms");
            print(t, "text", verbose, false);
            return t.report.passed() ? 0 : 1;
        }
        if (*check) {
            auto in = load_with_overrides(file, ov);
            auto t = timed_run(in, suite);
            print(t, format, verbose, timing);
            return t.report.passed() ? 0 : 1;
        }
        if (*report) {
            auto in = load_with_overrides(file, ov);
            std::vector<std::string> suites = std::visit([](const auto& i) { return i.suites; }, in);
            if (report->count("--suite")) suites = {suite};
            bool ok = true;
            std::vector<Timed> runs;
            for (const auto& s : suites) {
                runs.push_back(timed_run(in, s));
                ok = ok && runs.back().report.passed();
            }
            if (format == "json") {
                io::json arr = io::json::array();
                for (const auto& t : runs) arr.push_back(io::report_json(t.report, timing ? std::optional<double>(t.ms) : std::nullopt));
                std::cout << io::pretty(arr);
            } else {
                for (const auto& t : runs) print(t, "text", true, timing);
            }
            return ok ? 0 : 1;
        }
        if (*golden) {
            bool ok = true;
            for (const auto& f : files) {
                auto in = io::load(f);
                for (const auto& g : run_expectations(in)) {
                    ok = ok && g.matches();
                    std::cout << (g.matches() ? "ok    " : "MISS  ") << instance_name(in) << " " << g.suite << ": expected " << g.expected
                              << ", got " << g.got;
                    if (!g.first_failure.empty()) std::cout << " (first failure " << g.first_failure << ")";
                    std::cout << "\n";
                }
            }
            return ok ? 0 : 1;
        }
        if (*generate_cmd) {
            std::cout << io::pretty(io::emit(generate(gp)));
            return 0;
        }
        if (*corpus_cmd) {
            for (const auto& in : builtin_corpus()) {
                if (list || out_dir.empty()) {
                    std::cout << instance_name(in) << "\n";
                    continue;
                }
                std::filesystem::create_directories(out_dir);
                auto path = std::filesystem::path(out_dir) / (instance_name(in) + ".json");
                std::ofstream f(path);
                f << io::pretty(io::emit(in));
                if (!f) throw Error(Errc::invalid_params, "cannot write '" + path.string() + "'");
                std::cout << path.string() << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "coring-cli: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
