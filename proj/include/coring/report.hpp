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

#ifndef CORING_REPORT_HPP
#define CORING_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace coring {

enum class Verdict { pass, fail, skipped };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

struct Check {
    std::string name;
    Verdict verdict = Verdict::pass;
    std::string detail;  // witness, rank certificate or skip reason
};

/// Ordered list of named verdicts.  Failures are content, never exceptions.
class ValidationReport {
public:
    void add(std::string name, bool ok, std::string detail = {}) {
        checks_.push_back({std::move(name), ok ? Verdict::pass : Verdict::fail, std::move(detail)});
    }
    void skip(std::string name, std::string reason) {
        checks_.push_back({std::move(name), Verdict::skipped, std::move(reason)});
    }
    void append(const ValidationReport& other, const std::string& prefix = {}) {
        for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.verdict, c.detail});
    }

    bool passed() const {
        for (const auto& c : checks_)
            if (c.verdict == Verdict::fail) return false;
        return true;
    }
    std::size_t count(Verdict v) const {
        std::size_t n = 0;
        for (const auto& c : checks_) n += c.verdict == v;
        return n;
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks_)
            if (c.name == name) return &c;
        return nullptr;
    }
    const Check* first_failure() const {
        for (const auto& c : checks_)
            if (c.verdict == Verdict::fail) return &c;
        return nullptr;
    }
    const std::vector<Check>& checks() const { return checks_; }
    bool empty() const { return checks_.empty(); }

private:
    std::vector<Check> checks_;
};

}  // namespace coring

#endif  // CORING_REPORT_HPP
