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

#ifndef CORING_SUITE_HPP
#define CORING_SUITE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "corpus.hpp"
#include "galois.hpp"

namespace coring {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"axioms", "firm",        "dorroh",  "context", "galois",
                                                "comonadic", "equivalence", "compare", "all"};
    return names;
}

inline bool is_suite(const std::string& s) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), s) != n.end();
}

/// Verdicts of one suite run, plus a few named facts (is_galois, comonadic).
struct Report {
    std::string instance;
    std::string suite;
    std::string field;
    Parameters params;
    ValidationReport checks;
    std::vector<std::pair<std::string, std::string>> facts;

    bool passed() const { return checks.passed(); }
    void fact(std::string k, std::string v) {
        for (auto& [name, value] : facts)
            if (name == k) {
                value = std::move(v);
                return;
            }
        facts.emplace_back(std::move(k), std::move(v));
    }
    const std::string* find_fact(const std::string& k) const {
        for (const auto& [name, value] : facts)
            if (name == k) return &value;
        return nullptr;
    }
};

namespace detail {

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

// Runs fn, turning a library error into a failed check.
template <class F>
void guarded(ValidationReport& rep, const std::string& name, F&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        rep.add(name, false, std::string("error: ") + e.what());
    }
}

template <ExactField K>
class SuiteRunner {
public:
    SuiteRunner(const Instance<K>& in, Report& out) : in_(in), out_(out), rep_(out.checks) {
        fam_.size = in.params.family_size;
        fam_.seed = in.params.seed;
        fam_.max_dim = in.params.max_dim;
        opt_.seed = in.params.seed;
    }

    void run(const std::string& suite) {
        if (suite == "axioms" || suite == "all") axioms();
        if (suite == "firm" || suite == "all") firm();
        if (suite == "dorroh" || suite == "all") dorroh_suite();
        if (suite == "context" || suite == "all") context();
        if (suite == "galois" || suite == "all") galois();
        if (suite == "comonadic" || suite == "all") comonadic();
        if (suite == "equivalence" || suite == "all") equivalence();
        if (suite == "compare" || suite == "all") compare();
    }

private:
    void axioms() {
        for (const auto& a : in_.algebras) rep_.append(validate_algebra(*a), "algebra.");
        for (const auto& m : in_.bimodules) rep_.append(validate_bimodule(*m), "bimodule.");
        for (const auto& c : in_.corings) rep_.append(validate_coring(*c), "coring.");
        for (const auto& m : in_.comodules) rep_.append(validate_comodule(*m), "comodule.");
        for (const auto& f : in_.morphisms) {
            std::string why;
            guarded(rep_, "morphism." + f.name, [&] {
                rep_.add("morphism." + f.name, is_algebra_morphism(f.map, *f.source, *f.target, &why), why);
            });
        }
        for (const auto& c : in_.contexts) rep_.append(validate_context(c), "context.");
    }

    void firm() {
        for (const auto& r : in_.algebras) {
            const std::string n = "firm." + r->name();
            guarded(rep_, n, [&] {
                auto fr = is_firm_ring(r);
                rep_.add(n, static_cast<bool>(fr), fr.certificate.str());
                if (!fr) {
                    auto cand = coring_candidate(r);
                    auto v = validate_coring(*cand.coring);
                    auto f = v.first_failure();
                    rep_.add(n + ".candidate_fails", !v.passed(), f ? f->name : "candidate satisfies every axiom");
                    return;
                }
                auto fc = coring_from_firm_ring(r, *fr.witness);
                rep_.append(validate_coring(*fc.coring), n + ".");
                for (const auto& m : firm_module_family(r, fam_)) dictionary(n, r, m, fc);
            });
        }
        for (const auto& g : in_.galois) {
            const std::string n = "firmly_projective." + g.name;
            guarded(rep_, n, [&] {
                auto gi = make_galois(g.name, g.sigma);
                auto iota = iota_for(gi);
                if (!iota) {
                    rep_.skip(n, "R does not act through Sigma (x)_A Sigma*");
                    return;
                }
                auto fp = is_firmly_projective(g.sigma->carrier_ptr(), gi.r(), *iota);
                if (!fp) {
                    rep_.skip(n, fp.reason);
                    return;
                }
                rep_.append(firm_over_elementary_check(*fp.pair), n + ".");
                rep_.append(dagger_iso_check(*fp.pair), n + ".");
            });
        }
    }

    void dictionary(const std::string& n, const AlgebraPtr<K>& r, const BimodulePtr<K>& m, const FirmCoring<K>& fc) {
        const std::string name = n + ".dictionary." + m->name();
        auto fw = firmness(m, r);
        if (!fw) {
            rep_.add(name, false, "family member is not firm: " + fw.certificate.str());
            return;
        }
        auto c = firm_module_to_comodule(*fw.witness, fc);
        auto v = validate_comodule(c);
        if (!v.passed()) {
            rep_.add(name, false, "comodule axiom " + v.first_failure()->name);
            return;
        }
        auto back = comodule_to_firm_module(c, fc);
        bool same = back.module->same_structure(*m) && back.d == fw.witness->d && back.mu == fw.witness->mu;
        auto again = firm_module_to_comodule(back, fc);
        bool same_c = again.carrier().same_structure(c.carrier()) && again.coaction() == c.coaction();
        rep_.add(name, same && same_c, same ? (same_c ? "" : "comodule changed on the round trip") : "module changed on the round trip");
    }

    void dorroh_suite() {
        for (const auto& r : in_.algebras) {
            const std::string n = "dorroh." + r->name();
            guarded(rep_, n, [&] {
                auto e = dorroh(r);
                rep_.append(validate_algebra(*e.rhat), "dorroh.");
                rep_.add(n + ".unital", e.rhat->is_unital());
                std::string why;
                rep_.add(n + ".inclusion", is_algebra_morphism(e.inclusion, *r, *e.rhat, &why), why);
                std::string bad;
                for (std::size_t x = 0; x < e.rhat->dim() && bad.empty(); ++x)
                    for (std::size_t i = 0; i < r->dim() && bad.empty(); ++i) {
                        auto ri = e.inclusion.column(i);
                        for (const auto& p : {e.rhat->product(e.rhat->basis(x), ri), e.rhat->product(ri, e.rhat->basis(x))})
                            if (!lin::solve_vec(e.inclusion, p)) bad = "(" + detail::basis_name(x) + "," + detail::basis_name(i) + ")";
                    }
                rep_.add(n + ".ideal", bad.empty(), bad);
            });
        }
    }

    void context_checks(const ComatrixContext<K>& c) {
        const std::string n = "context." + c.name;
        auto v = validate_context(c);
        rep_.append(v, "context.");
        if (!v.passed()) return;
        guarded(rep_, n + ".comatrix", [&] {
            auto d = comatrix_coring(c);
            rep_.append(validate_coring(*d.coring), "context.");
            rep_.append(validate_comodule(*d.sigma), "context." + c.name + ".");
            rep_.append(validate_left_coaction(d, c.name + ".dagger"), "context.");
        });
        guarded(rep_, n + ".adjunction", [&] {
            auto ns = firm_module_family(c.r, fam_);
            std::vector<BimodulePtr<K>> ms;
            if (c.a->is_unital())
                for (const auto& m : module_family(c.a, fam_)) ms.push_back(m.module);
            else
                ms = firm_module_family(c.a, fam_);
            rep_.append(adjunction_check(c, ns, ms), "context.");
            rep_.add(n + ".family_sizes", true, std::to_string(ns.size()) + " right R-modules, " + std::to_string(ms.size()) + " right A-modules");
        });
    }

    void context() {
        for (const auto& c : in_.contexts) context_checks(c);
        for (const auto& g : in_.galois) {
            guarded(rep_, "context." + g.name + ".comatrix", [&] {
                auto gi = make_galois(g.name, g.sigma);
                std::string why;
                auto cmp = comatrix_comparison(gi, &why);
                if (!cmp)
                    rep_.skip("context." + g.name + ".comatrix", why);
                else
                    context_checks(cmp->context);
            });
        }
    }

    void galois() {
        for (const auto& g : in_.galois) {
            guarded(rep_, "galois." + g.name, [&] {
                auto gi = make_galois(g.name, g.sigma);
                rep_.add("galois." + g.name + ".can", gi.is_galois(), gi.rank_str());
                out_.fact(g.name + ".is_galois", yes_no(gi.is_galois()));
                std::string why;
                auto cmp = comatrix_comparison(gi, &why);
                if (cmp) {
                    ValidationReport r;
                    add_coring_morphism_check(r, g.name + ".can_coring_morphism", cmp->theta, *cmp->comatrix.coring, gi.coring());
                    rep_.append(r, "galois.");
                } else {
                    rep_.skip("galois." + g.name + ".can_coring_morphism", why);
                }
                rep_.append(counit_factorization_check(gi), "galois.");
            });
        }
    }

    ComonadicReport<K> comonadic_for(const GaloisInstance<K>& gi, const std::vector<FamilyMember<K>>& fam) {
        return is_comonadic_galois(gi, fam, opt_);
    }

    void comonadic() {
        for (const auto& g : in_.galois) {
            guarded(rep_, "comonadic." + g.name, [&] {
                auto gi = make_galois(g.name, g.sigma);
                auto fam = module_family(gi.coring().base(), fam_);
                auto cr = comonadic_for(gi, fam);
                rep_.append(cr.checks, "comonadic.");
                out_.fact(g.name + ".comonadic", yes_no(cr.comonadic));
                if (cr.counterexample) out_.fact(g.name + ".counterexample", *cr.counterexample);
                std::vector<BimodulePtr<K>> inj{share(Bimodule<K>::regular(gi.coring().base()))};
                for (std::size_t i = 0; i < fam.size() && i < 3; ++i) inj.push_back(fam[i].module);
                if (cr.counterexample_index && *cr.counterexample_index >= 3) inj.push_back(fam[*cr.counterexample_index].module);
                rep_.append(evaluation_check(gi, inj, cr.comonadic), "comonadic.");
            });
        }
    }

    void equivalence() {
        for (const auto& g : in_.galois) {
            const std::string n = "equivalence." + g.name;
            guarded(rep_, n, [&] {
                auto gi = make_galois(g.name, g.sigma);
                auto fam = module_family(gi.coring().base(), fam_);
                auto cofree = fam_.size > 3 ? fam_.size - 3 : 0;
                auto comods = comodule_family(g.sigma, fam, cofree);
                try {
                    auto rmods = firm_module_family(gi.r(), fam_);
                    rep_.append(equivalence_check(gi, rmods, comods), "equivalence.");
                    rep_.add(n + ".family_sizes", true,
                             std::to_string(rmods.size()) + " firm R-modules, " + std::to_string(comods.size()) + " comodules");
                } catch (const Error& e) {
                    if (e.code() != Errc::not_firm) throw;
                    rep_.skip(n, e.what());
                }
                rep_.append(local_units_check(gi), "equivalence.");
                try {
                    rep_.append(unital_corollary_check(gi, fam, comods), "equivalence.");
                } catch (const Error& e) {
                    if (e.code() != Errc::not_unital) throw;
                    rep_.skip(n + ".unital", std::string("not unital: ") + e.what());
                }
            });
        }
    }

    void compare() {
        for (const auto& g : in_.galois) {
            const std::string n = "compare." + g.name;
            guarded(rep_, n, [&] {
                auto gi = make_galois(g.name, g.sigma);
                auto fam = module_family(gi.coring().base(), fam_);
                auto cr = comonadic_for(gi, fam);
                out_.fact(g.name + ".is_galois", yes_no(gi.is_galois()));
                out_.fact(g.name + ".comonadic", yes_no(cr.comonadic));
                rep_.append(firmly_projective_comparison(gi, cr.comonadic), "compare.");
                if (!gi.is_galois()) {
                    rep_.skip(n + ".nu", "can is not invertible");
                    rep_.skip(n + ".rebuilt", "can is not invertible");
                } else {
                    nu_checks(gi, fam);
                    auto rc = comonadic_context(gi);
                    rep_.append(rc.report, "compare.");
                }
                rep_.append(endomorphism_ring_check(gi, cr.comonadic, fam, opt_), "compare.");
                rep_.append(counit_factorization_check(gi), "compare.");
            });
        }
    }

    void nu_checks(const GaloisInstance<K>& gi, const std::vector<FamilyMember<K>>& fam) {
        const std::string n = "compare." + gi.name + ".nu";
        std::vector<std::pair<std::string, std::vector<Matrix<K>>>> rings;
        rings.emplace_back("jR", gi.carrier().left_acts());
        auto e = colinear_endomorphisms(gi);
        rings.emplace_back("T", e.basis);
        for (const auto& [sname, mats] : rings) {
            try {
                rep_.append(galois_implies_comonadic(gi, mats, fam, sname), "compare.");
            } catch (const Error& err) {
                if (err.code() != Errc::precondition_failed) throw;
                rep_.skip(n + "." + sname, err.what());
            }
        }
    }

    const Instance<K>& in_;
    Report& out_;
    ValidationReport& rep_;
    FamilyOptions fam_;
    ComonadicOptions opt_;
};

}  // namespace detail

template <ExactField K>
Report run_suite(const Instance<K>& in, const std::string& suite) {
    if (!is_suite(suite)) throw Error(Errc::invalid_params, "unknown suite '" + suite + "'");
    Report out;
    out.instance = in.name;
    out.suite = suite;
    out.field = in.field.name();
    out.params = in.params;
    detail::SuiteRunner<K>(in, out).run(suite);
    return out;
}

inline Report run_suite(const AnyInstance& in, const std::string& suite) {
    return std::visit([&](const auto& i) { return run_suite(i, suite); }, in);
}


/// One expected verdict compared with the verdict actually reached.
struct GoldenOutcome {
    std::string suite;
    std::string expected;
    std::string got;
    std::string first_failure;
    bool matches() const { return expected == got; }
};

/// Runs every suite the instance carries an expected verdict for, in suite order.
inline std::vector<GoldenOutcome> run_expectations(const AnyInstance& in) {
    std::map<std::string, std::string> expect = std::visit([](const auto& i) { return i.expect; }, in);
    std::vector<GoldenOutcome> out;
    for (const auto& s : suite_names()) {
        auto it = expect.find(s);
        if (it == expect.end()) continue;
        auto r = run_suite(in, s);
        const auto* f = r.checks.first_failure();
        out.push_back({s, it->second, r.passed() ? "pass" : "fail", f ? f->name : std::string{}});
    }
    return out;
}

}  // namespace coring

#endif  // CORING_SUITE_HPP
