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

#ifndef CORING_IO_HPP
#define CORING_IO_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "suite.hpp"

namespace coring::io {

using json = nlohmann::ordered_json;

inline constexpr int format_version = 1;

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
    throw Error(Errc::parse_error, where + ": " + what);
}

template <ExactField K>
json element_json(const K& k, const typename K::value_type& v) {
    if constexpr (std::is_same_v<K, Rationals>) {
        if (v.get_den() == 1 && v.get_num().fits_slong_p()) return json(v.get_num().get_si());
        return json(k.to_string(v));
    } else {
        return json(static_cast<std::int64_t>(v));
    }
}

template <ExactField K>
json vec_json(const K& k, const Vec<K>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(element_json(k, x));
    return out;
}

template <ExactField K>
json matrix_json(const Matrix<K>& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_json(m.field(), m.row(i)));
    return out;
}

// Columns of m as rows, each lifted to ambient tensor coordinates.
template <ExactField K>
json ambient_columns_json(const Matrix<K>& m, const TensorChain<K>& ch) {
    json out = json::array();
    const auto& q = ch.quotient();
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(vec_json(m.field(), q.section(m.column(j))));
    return out;
}

template <ExactField K>
typename K::value_type element(const K& k, const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) {
            if (j.is_number_unsigned()) return k.parse(std::to_string(j.get<std::uint64_t>()));
            return k.parse(std::to_string(j.get<std::int64_t>()));
        }
        if (j.is_string()) return k.parse(j.get<std::string>());
    } catch (const Error& e) {
        if (e.code() == Errc::bad_field_element) {
            std::string msg = e.what();
            const std::string prefix = std::string(errc_name(Errc::bad_field_element)) + ": ";
            if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
            throw Error(Errc::bad_field_element, where + ": " + msg);
        }
        throw;
    }
    parse_fail(where, "expected an integer or a fraction string, got " + std::string(j.type_name()));
}

template <ExactField K>
Vec<K> vec(const K& k, const json& j, std::size_t len, const std::string& where) {
    if (!j.is_array()) parse_fail(where, "expected an array");
    if (j.size() != len)
        throw Error(Errc::dimension_mismatch, where + ": length " + std::to_string(j.size()) + ", expected " + std::to_string(len));
    Vec<K> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back(element(k, j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

template <ExactField K>
Matrix<K> matrix(const K& k, const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array()) parse_fail(where, "expected an array of rows");
    if (j.size() != rows)
        throw Error(Errc::dimension_mismatch, where + ": " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    Matrix<K> m(k, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) m.set_row(i, vec(k, j[i], cols, where + "[" + std::to_string(i) + "]"));
    return m;
}

inline const json& field_of(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) parse_fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) parse_fail(where, std::string("missing field '") + key + "'");
    return *it;
}

inline std::string string_of(const json& obj, const char* key, const std::string& where) {
    const auto& j = field_of(obj, key, where);
    if (!j.is_string()) parse_fail(where + "." + key, "expected a string");
    return j.get<std::string>();
}

inline std::size_t size_of(const json& obj, const char* key, const std::string& where) {
    const auto& j = field_of(obj, key, where);
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        parse_fail(where + "." + key, "expected a non-negative integer");
    return j.get<std::size_t>();
}

inline const json& array_of(const json& obj, const char* key, const std::string& where) {
    static const json empty = json::array();
    if (!obj.contains(key)) return empty;
    const auto& j = obj[key];
    if (!j.is_array()) parse_fail(where + "." + key, "expected an array");
    return j;
}

template <class Ptr>
const Ptr& lookup(const std::map<std::string, Ptr>& m, const std::string& name, const std::string& kind,
                  const std::string& where) {
    auto it = m.find(name);
    if (it == m.end()) throw Error(Errc::unknown_reference, where + ": no " + kind + " named '" + name + "'");
    return it->second;
}

template <class Ptr>
void define(std::map<std::string, Ptr>& m, const std::string& name, Ptr p, const std::string& kind, const std::string& where) {
    if (!m.emplace(name, std::move(p)).second) parse_fail(where, "duplicate " + kind + " name '" + name + "'");
}

template <ExactField K>
Instance<K> load_with(const K& k, const json& root) {
    Instance<K> in(string_of(root, "name", "instance"), k);
    if (root.contains("description")) {
        if (!root["description"].is_string()) parse_fail("description", "expected a string");
        in.description = root["description"].get<std::string>();
    }
    std::map<std::string, AlgebraPtr<K>> algebras;
    std::map<std::string, BimodulePtr<K>> bimodules;
    std::map<std::string, CoringPtr<K>> corings;
    std::map<std::string, ComodulePtr<K>> comodules;

    const auto& algs = array_of(root, "algebras", "instance");
    for (std::size_t i = 0; i < algs.size(); ++i) {
        const std::string w = "algebras[" + std::to_string(i) + "]";
        const auto& j = algs[i];
        auto name = string_of(j, "name", w);
        auto d = size_of(j, "dim", w);
        auto mult = matrix(k, field_of(j, "structure_constants", w), d * d, d, w + ".structure_constants");
        std::optional<Vec<K>> unit;
        bool detect = !j.contains("unit");
        if (!detect && !j["unit"].is_null()) unit = vec(k, j["unit"], d, w + ".unit");
        Algebra<K> a(k, d, std::move(mult), std::move(unit), name);
        if (detect) a = a.with_detected_unit();
        auto p = share(std::move(a));
        define(algebras, name, p, "algebra", w);
        in.algebras.push_back(p);
    }

    const auto& bims = array_of(root, "bimodules", "instance");
    for (std::size_t i = 0; i < bims.size(); ++i) {
        const std::string w = "bimodules[" + std::to_string(i) + "]";
        const auto& j = bims[i];
        auto name = string_of(j, "name", w);
        auto l = lookup(algebras, string_of(j, "left", w), "algebra", w + ".left");
        auto r = lookup(algebras, string_of(j, "right", w), "algebra", w + ".right");
        auto d = size_of(j, "dim", w);
        auto acts = [&](const char* key, const AlgebraPtr<K>& a) {
            const auto& arr = field_of(j, key, w);
            if (!arr.is_array()) parse_fail(w + "." + key, "expected an array of matrices");
            if (arr.size() != a->dim())
                throw Error(Errc::dimension_mismatch, w + "." + key + ": " + std::to_string(arr.size()) +
                                                          " matrices, expected one per basis element of '" + a->name() + "'");
            std::vector<Matrix<K>> out;
            for (std::size_t x = 0; x < arr.size(); ++x)
                out.push_back(matrix(k, arr[x], d, d, w + "." + key + "[" + std::to_string(x) + "]"));
            return out;
        };
        auto p = share(Bimodule<K>(l, r, d, acts("left_action", l), acts("right_action", r), name));
        define(bimodules, name, p, "bimodule", w);
        in.bimodules.push_back(p);
    }

    const auto& cors = array_of(root, "corings", "instance");
    for (std::size_t i = 0; i < cors.size(); ++i) {
        const std::string w = "corings[" + std::to_string(i) + "]";
        const auto& j = cors[i];
        auto name = string_of(j, "name", w);
        auto carrier = lookup(bimodules, string_of(j, "carrier", w), "bimodule", w + ".carrier");
        if (!same_algebra(carrier->left(), carrier->right()))
            throw Error(Errc::algebra_mismatch, w + ": carrier '" + carrier->name() + "' is not a bimodule over one algebra");
        const std::size_t d = carrier->dim();
        auto delta = matrix(k, field_of(j, "comultiplication", w), d, d * d, w + ".comultiplication");
        std::vector<Vec<K>> cols;
        for (std::size_t x = 0; x < d; ++x) cols.push_back(delta.row(x));
        auto eps = matrix(k, field_of(j, "counit", w), carrier->left()->dim(), d, w + ".counit");
        auto p = share(Coring<K>::from_ambient(carrier, cols, std::move(eps), name));
        define(corings, name, p, "coring", w);
        in.corings.push_back(p);
    }

    const auto& coms = array_of(root, "comodules", "instance");
    for (std::size_t i = 0; i < coms.size(); ++i) {
        const std::string w = "comodules[" + std::to_string(i) + "]";
        const auto& j = coms[i];
        auto name = string_of(j, "name", w);
        auto c = lookup(corings, string_of(j, "coring", w), "coring", w + ".coring");
        auto carrier = lookup(bimodules, string_of(j, "carrier", w), "bimodule", w + ".carrier");
        const std::size_t d = carrier->dim();
        auto rho = matrix(k, field_of(j, "coaction", w), d, d * c->dim(), w + ".coaction");
        std::vector<Vec<K>> cols;
        for (std::size_t x = 0; x < d; ++x) cols.push_back(rho.row(x));
        auto p = share(Comodule<K>::from_ambient(c, carrier, cols, name));
        define(comodules, name, p, "comodule", w);
        in.comodules.push_back(p);
    }

    const auto& mors = array_of(root, "morphisms", "instance");
    for (std::size_t i = 0; i < mors.size(); ++i) {
        const std::string w = "morphisms[" + std::to_string(i) + "]";
        const auto& j = mors[i];
        auto s = lookup(algebras, string_of(j, "source", w), "algebra", w + ".source");
        auto t = lookup(algebras, string_of(j, "target", w), "algebra", w + ".target");
        in.morphisms.push_back({string_of(j, "name", w), s, t, matrix(k, field_of(j, "matrix", w), t->dim(), s->dim(), w + ".matrix")});
    }

    const auto& ctxs = array_of(root, "contexts", "instance");
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
        const std::string w = "contexts[" + std::to_string(i) + "]";
        const auto& j = ctxs[i];
        auto sigma = lookup(bimodules, string_of(j, "sigma", w), "bimodule", w + ".sigma");
        auto dagger = lookup(bimodules, string_of(j, "dagger", w), "bimodule", w + ".dagger");
        auto z = chain<K>({sigma, dagger});
        auto p = chain<K>({dagger, sigma});
        const std::size_t rd = sigma->left()->dim();
        auto eta_rows = matrix(k, field_of(j, "eta", w), rd, z->ambient_dim(), w + ".eta");
        Matrix<K> eta(k, z->dim(), rd);
        for (std::size_t x = 0; x < rd; ++x) eta.set_column(x, z->quotient().project(eta_rows.row(x)));
        auto eps_amb = matrix(k, field_of(j, "eps", w), sigma->right()->dim(), p->ambient_dim(), w + ".eps");
        Matrix<K> eps = eps_amb * p->quotient().section_matrix();
        if (!(eps * p->quotient().project_matrix() == eps_amb))
            parse_fail(w + ".eps", "not balanced over '" + sigma->left()->name() + "'");
        in.contexts.push_back(make_context(string_of(j, "name", w), sigma, dagger, std::move(eta), std::move(eps)));
    }

    const auto& gal = array_of(root, "galois", "instance");
    for (std::size_t i = 0; i < gal.size(); ++i) {
        const std::string w = "galois[" + std::to_string(i) + "]";
        const auto& j = gal[i];
        in.galois.push_back({string_of(j, "name", w), lookup(comodules, string_of(j, "comodule", w), "comodule", w + ".comodule")});
    }

    if (root.contains("suites")) {
        const auto& s = root["suites"];
        if (!s.is_array()) parse_fail("suites", "expected an array");
        in.suites.clear();
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (!s[i].is_string() || !is_suite(s[i].get<std::string>()))
                parse_fail("suites[" + std::to_string(i) + "]", "unknown suite " + s[i].dump());
            in.suites.push_back(s[i].get<std::string>());
        }
    }
    if (root.contains("parameters")) {
        const auto& p = root["parameters"];
        if (p.contains("family_size")) in.params.family_size = size_of(p, "family_size", "parameters");
        if (p.contains("seed")) in.params.seed = size_of(p, "seed", "parameters");
        if (p.contains("max_dim")) in.params.max_dim = size_of(p, "max_dim", "parameters");
    }
    if (root.contains("expect")) {
        const auto& e = root["expect"];
        if (!e.is_object()) parse_fail("expect", "expected an object");
        for (auto it = e.begin(); it != e.end(); ++it) {
            const std::string suite = it.key();
            if (!is_suite(suite)) parse_fail("expect." + suite, "unknown suite");
            const json& v = it.value();
            if (!v.is_string() || (v != "pass" && v != "fail")) parse_fail("expect." + suite, "expected \"pass\" or \"fail\"");
            in.expect[suite] = v.template get<std::string>();
        }
    }
    return in;
}

}  // namespace detail

/// Parses an instance document.  Errors name the offending field.
inline AnyInstance load_json(const json& root) {
    if (!root.is_object()) detail::parse_fail("instance", "expected a JSON object");
    if (!root.contains("format_version") || root["format_version"] != format_version)
        detail::parse_fail("format_version", "expected " + std::to_string(format_version));
    const auto& f = detail::field_of(root, "field", "instance");
    auto p = detail::size_of(f, "characteristic", "field");
    if (p == 0) return detail::load_with(Rationals{}, root);
    if (p >= (std::size_t{1} << 31)) throw Error(Errc::invalid_params, "field: characteristic " + std::to_string(p) + " too large");
    return detail::load_with(PrimeField(static_cast<std::uint32_t>(p)), root);
}

inline AnyInstance load_string(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::parse_error, std::string("malformed JSON: ") + e.what());
    }
    return load_json(root);
}

inline AnyInstance load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::parse_error, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return load_string(ss.str());
}

template <ExactField K>
json emit(const Instance<K>& in) {
    const K& k = in.field;
    json out;
    out["format_version"] = format_version;
    out["name"] = in.name;
    out["description"] = in.description;
    out["field"] = {{"characteristic", k.characteristic()}};
    out["algebras"] = json::array();
    for (const auto& a : in.algebras)
        out["algebras"].push_back({{"name", a->name()},
                                   {"dim", a->dim()},
                                   {"structure_constants", detail::matrix_json(a->mult())},
                                   {"unit", a->unit() ? detail::vec_json(k, *a->unit()) : json(nullptr)}});
    out["bimodules"] = json::array();
    for (const auto& m : in.bimodules) {
        json l = json::array(), r = json::array();
        for (const auto& x : m->left_acts()) l.push_back(detail::matrix_json(x));
        for (const auto& x : m->right_acts()) r.push_back(detail::matrix_json(x));
        out["bimodules"].push_back({{"name", m->name()},
                                    {"left", m->left()->name()},
                                    {"right", m->right()->name()},
                                    {"dim", m->dim()},
                                    {"left_action", l},
                                    {"right_action", r}});
    }
    out["corings"] = json::array();
    for (const auto& c : in.corings)
        out["corings"].push_back({{"name", c->name()},
                                  {"carrier", c->carrier().name()},
                                  {"comultiplication", detail::ambient_columns_json(c->comult(), c->cc())},
                                  {"counit", detail::matrix_json(c->counit())}});
    out["comodules"] = json::array();
    for (const auto& m : in.comodules)
        out["comodules"].push_back({{"name", m->name()},
                                    {"coring", m->coring().name()},
                                    {"carrier", m->carrier().name()},
                                    {"coaction", detail::ambient_columns_json(m->coaction(), m->mc())}});
    out["morphisms"] = json::array();
    for (const auto& f : in.morphisms)
        out["morphisms"].push_back(
            {{"name", f.name}, {"source", f.source->name()}, {"target", f.target->name()}, {"matrix", detail::matrix_json(f.map)}});
    out["contexts"] = json::array();
    for (const auto& c : in.contexts)
        out["contexts"].push_back({{"name", c.name},
                                   {"sigma", c.sigma->name()},
                                   {"dagger", c.dagger->name()},
                                   {"eta", detail::ambient_columns_json(c.eta, *c.z)},
                                   {"eps", detail::matrix_json(Matrix<K>(c.eps * c.pairing->quotient().project_matrix()))}});
    out["galois"] = json::array();
    for (const auto& g : in.galois) out["galois"].push_back({{"name", g.name}, {"comodule", g.sigma->name()}});
    out["suites"] = in.suites;
    out["parameters"] = {{"family_size", in.params.family_size}, {"seed", in.params.seed}, {"max_dim", in.params.max_dim}};
    out["expect"] = json::object();
    for (const auto& [s, v] : in.expect) out["expect"][s] = v;
    return out;
}

inline json emit(const AnyInstance& in) {
    return std::visit([](const auto& i) { return emit(i); }, in);
}

/// Names unique within each kind, as the file format requires.
template <ExactField K>
void check_unique_names(const Instance<K>& in) {
    auto run = [&](const auto& xs, const char* kind, auto name_of) {
        std::map<std::string, int> seen;
        for (const auto& x : xs)
            if (++seen[name_of(x)] == 2)
                throw Error(Errc::invalid_params, "instance '" + in.name + "': two " + kind + "s named '" + name_of(x) + "'");
    };
    run(in.algebras, "algebra", [](const auto& x) { return x->name(); });
    run(in.bimodules, "bimodule", [](const auto& x) { return x->name(); });
    run(in.corings, "coring", [](const auto& x) { return x->name(); });
    run(in.comodules, "comodule", [](const auto& x) { return x->name(); });
}

/**
 * Field-by-field comparison of two instances: names, dimensions and every
 * structure matrix.  On mismatch, `why` names the first difference.
 */
template <ExactField K>
bool structurally_equal(const Instance<K>& a, const Instance<K>& b, std::string* why = nullptr) {
    auto fail = [&](std::string w) {
        if (why) *why = std::move(w);
        return false;
    };
    if (a.name != b.name || a.description != b.description) return fail("name or description");
    if (!(a.field == b.field)) return fail("field");
    if (a.algebras.size() != b.algebras.size()) return fail("algebra count");
    for (std::size_t i = 0; i < a.algebras.size(); ++i) {
        const auto &x = *a.algebras[i], &y = *b.algebras[i];
        if (x.name() != y.name() || x.dim() != y.dim() || !(x.mult() == y.mult()) || x.unit() != y.unit())
            return fail("algebra " + x.name());
    }
    if (a.bimodules.size() != b.bimodules.size()) return fail("bimodule count");
    for (std::size_t i = 0; i < a.bimodules.size(); ++i) {
        const auto &x = *a.bimodules[i], &y = *b.bimodules[i];
        if (x.name() != y.name() || x.left()->name() != y.left()->name() || x.right()->name() != y.right()->name() ||
            !x.same_structure(y))
            return fail("bimodule " + x.name());
    }
    if (a.corings.size() != b.corings.size()) return fail("coring count");
    for (std::size_t i = 0; i < a.corings.size(); ++i) {
        const auto &x = *a.corings[i], &y = *b.corings[i];
        if (x.name() != y.name() || x.carrier().name() != y.carrier().name() || !(x.comult() == y.comult()) ||
            !(x.counit() == y.counit()))
            return fail("coring " + x.name());
    }
    if (a.comodules.size() != b.comodules.size()) return fail("comodule count");
    for (std::size_t i = 0; i < a.comodules.size(); ++i) {
        const auto &x = *a.comodules[i], &y = *b.comodules[i];
        if (x.name() != y.name() || x.coring().name() != y.coring().name() || x.carrier().name() != y.carrier().name() ||
            !(x.coaction() == y.coaction()))
            return fail("comodule " + x.name());
    }
    if (a.morphisms.size() != b.morphisms.size()) return fail("morphism count");
    for (std::size_t i = 0; i < a.morphisms.size(); ++i) {
        const auto &x = a.morphisms[i], &y = b.morphisms[i];
        if (x.name != y.name || x.source->name() != y.source->name() || x.target->name() != y.target->name() || !(x.map == y.map))
            return fail("morphism " + x.name);
    }
    if (a.contexts.size() != b.contexts.size()) return fail("context count");
    for (std::size_t i = 0; i < a.contexts.size(); ++i) {
        const auto &x = a.contexts[i], &y = b.contexts[i];
        if (x.name != y.name || x.sigma->name() != y.sigma->name() || x.dagger->name() != y.dagger->name() || !(x.eta == y.eta) ||
            !(x.eps == y.eps))
            return fail("context " + x.name);
    }
    if (a.galois.size() != b.galois.size()) return fail("galois count");
    for (std::size_t i = 0; i < a.galois.size(); ++i)
        if (a.galois[i].name != b.galois[i].name || a.galois[i].sigma->name() != b.galois[i].sigma->name())
            return fail("galois entry " + a.galois[i].name);
    if (a.suites != b.suites || !(a.params == b.params) || a.expect != b.expect) return fail("suites, parameters or expectations");
    return true;
}

inline bool structurally_equal(const AnyInstance& a, const AnyInstance& b, std::string* why = nullptr) {
    if (a.index() != b.index()) {
        if (why) *why = "field kind";
        return false;
    }
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            return structurally_equal(x, std::get<T>(b), why);
        },
        a);
}

/// Indented JSON with arrays of scalars kept on one line, so matrices read as rows.
inline std::string pretty(const json& j, int indent = 2) {
    std::string out;
    auto scalar_array = [](const json& a) {
        for (const auto& x : a)
            if (x.is_structured()) return false;
        return true;
    };
    auto rec = [&](auto&& self, const json& v, int depth) -> void {
        const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
        const std::string close(static_cast<std::size_t>(indent * depth), ' ');
        if (v.is_object() && !v.empty()) {
            out += "{\n";
            std::size_t i = 0;
            for (auto it = v.begin(); it != v.end(); ++it, ++i) {
                out += pad + json(it.key()).dump() + ": ";
                self(self, it.value(), depth + 1);
                out += i + 1 < v.size() ? ",\n" : "\n";
            }
            out += close + "}";
        } else if (v.is_array() && !v.empty() && !scalar_array(v)) {
            out += "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                out += pad;
                self(self, v[i], depth + 1);
                out += i + 1 < v.size() ? ",\n" : "\n";
            }
            out += close + "]";
        } else if (v.is_array()) {
            out += "[";
            for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].dump();
            out += "]";
        } else {
            out += v.dump();
        }
    };
    rec(rec, j, 0);
    return out + "\n";
}

// Reports

inline json report_json(const Report& r, std::optional<double> elapsed_ms = std::nullopt) {
    json out;
    out["format_version"] = format_version;
    out["instance"] = r.instance;
    out["suite"] = r.suite;
    out["field"] = r.field;
    out["parameters"] = {{"family_size", r.params.family_size}, {"seed", r.params.seed}, {"max_dim", r.params.max_dim}};
    out["verdict"] = r.passed() ? "pass" : "fail";
    out["summary"] = {{"pass", r.checks.count(Verdict::pass)},
                      {"fail", r.checks.count(Verdict::fail)},
                      {"skipped", r.checks.count(Verdict::skipped)}};
    out["facts"] = json::object();
    for (const auto& [k, v] : r.facts) out["facts"][k] = v;
    out["checks"] = json::array();
    for (const auto& c : r.checks.checks()) {
        json e{{"name", c.name}, {"verdict", verdict_name(c.verdict)}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        out["checks"].push_back(std::move(e));
    }
    if (elapsed_ms) out["timing_ms"] = *elapsed_ms;
    return out;
}

inline std::string report_text(const Report& r, bool verbose = false) {
    std::ostringstream os;
    os << "instance " << r.instance << " (" << r.field << "), suite " << r.suite << ", seed " << r.params.seed << ", family "
       << r.params.family_size << "\n";
    for (const auto& c : r.checks.checks()) {
        if (!verbose && c.verdict == Verdict::pass) continue;
        os << "  " << (c.verdict == Verdict::pass ? "PASS " : c.verdict == Verdict::fail ? "FAIL " : "SKIP ") << c.name;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
    }
    for (const auto& [k, v] : r.facts) os << "  " << k << " = " << v << "\n";
    os << "  " << r.checks.count(Verdict::pass) << " passed, " << r.checks.count(Verdict::fail) << " failed, "
       << r.checks.count(Verdict::skipped) << " skipped: " << (r.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace coring::io

#endif  // CORING_IO_HPP
