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

#ifndef CORING_FIELD_HPP
#define CORING_FIELD_HPP

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace coring::lin {

/**
 * The rational numbers, backed by GMP.  Values are kept canonical (reduced
 * fraction, positive denominator) by mpq_class after every operation.
 */
class Rationals {
public:
    using value_type = mpq_class;

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_int(long v) const { return value_type(v); }

    void add_to(value_type& acc, const value_type& x) const { acc += x; }
    // acc += x * y
    void add_mul(value_type& acc, const value_type& x, const value_type& y) const {
        mpq_class t;
        mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        acc += t;
    }
    // acc -= x * y
    void sub_mul(value_type& acc, const value_type& x, const value_type& y) const {
        mpq_class t;
        mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        acc -= t;
    }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const {
        if (sgn(a) == 0) throw Error(Errc::singular_matrix, "inverse of zero");
        return 1 / a;
    }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool is_one(const value_type& a) const { return a == 1; }

    value_type parse(std::string_view text) const {
        std::string s(text);
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return value_type(mpz_class(s, 10));
            mpz_class num(s.substr(0, slash), 10);
            mpz_class den(s.substr(slash + 1), 10);
            if (den == 0) throw Error(Errc::bad_field_element, "zero denominator in '" + s + "'");
            value_type q(num, den);
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw Error(Errc::bad_field_element, "not a rational number: '" + s + "'");
        }
    }

    std::string to_string(const value_type& a) const { return a.get_str(10); }
    std::string name() const { return "Q"; }
    std::uint32_t characteristic() const { return 0; }

    bool operator==(const Rationals&) const = default;
};

/// Residues modulo a prime p < 2^31, stored in [0, p).
class PrimeField {
public:
    using value_type = std::uint32_t;

    PrimeField() : p_(2) {}
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 31) || !is_prime(p))
            throw Error(Errc::invalid_params, "field modulus " + std::to_string(p) + " is not a prime below 2^31");
    }

    std::uint32_t modulus() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const {
        long r = v % static_cast<long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }

    void add_to(value_type& acc, value_type x) const { acc = add(acc, x); }
    void add_mul(value_type& acc, value_type x, value_type y) const { acc = add(acc, mul(x, y)); }
    void sub_mul(value_type& acc, value_type x, value_type y) const { acc = sub(acc, mul(x, y)); }
    value_type add(value_type a, value_type b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((std::uint64_t(a) * b) % p_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const {
        if (a == 0) throw Error(Errc::singular_matrix, "inverse of zero");
        return pow(a, p_ - 2);
    }
    bool is_zero(value_type a) const { return a == 0; }
    bool is_one(value_type a) const { return a == 1; }

    value_type parse(std::string_view text) const {
        std::string s(text);
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return reduce(mpz_class(s, 10));
            value_type num = reduce(mpz_class(s.substr(0, slash), 10));
            value_type den = reduce(mpz_class(s.substr(slash + 1), 10));
            if (den == 0)
                throw Error(Errc::bad_field_element,
                            "'" + s + "' has a denominator divisible by " + std::to_string(p_));
            return mul(num, inv(den));
        } catch (const std::invalid_argument&) {
            throw Error(Errc::bad_field_element, "not a rational number: '" + s + "'");
        }
    }

    std::string to_string(value_type a) const { return std::to_string(a); }
    std::string name() const { return "F_" + std::to_string(p_); }
    std::uint32_t characteristic() const { return p_; }

    bool operator==(const PrimeField&) const = default;

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    value_type pow(value_type b, std::uint32_t e) const {
        value_type r = 1;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    value_type reduce(const mpz_class& z) const {
        mpz_class r = z % p_;
        if (r < 0) r += p_;
        return static_cast<value_type>(r.get_ui());
    }

    std::uint32_t p_;
};

template <class K>
concept ExactField = requires(const K& k, typename K::value_type& acc, const typename K::value_type& a) {
    { k.zero() } -> std::convertible_to<typename K::value_type>;
    { k.one() } -> std::convertible_to<typename K::value_type>;
    { k.add(a, a) } -> std::convertible_to<typename K::value_type>;
    { k.mul(a, a) } -> std::convertible_to<typename K::value_type>;
    { k.inv(a) } -> std::convertible_to<typename K::value_type>;
    { k.is_zero(a) } -> std::convertible_to<bool>;
    k.add_mul(acc, a, a);
    k.sub_mul(acc, a, a);
};

template <ExactField K>
using Vec = std::vector<typename K::value_type>;

template <ExactField K>
Vec<K> zero_vec(const K& k, std::size_t n) {
    return Vec<K>(n, k.zero());
}

template <ExactField K>
Vec<K> unit_vec(const K& k, std::size_t n, std::size_t i) {
    Vec<K> v(n, k.zero());
    v[i] = k.one();
    return v;
}

template <ExactField K>
bool is_zero_vec(const K& k, const Vec<K>& v) {
    for (const auto& x : v)
        if (!k.is_zero(x)) return false;
    return true;
}

// y += c * x
template <ExactField K>
void axpy(const K& k, Vec<K>& y, const typename K::value_type& c, const Vec<K>& x) {
    if (k.is_zero(c)) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!k.is_zero(x[i])) k.add_mul(y[i], c, x[i]);
}

}  // namespace coring::lin

#endif  // CORING_FIELD_HPP
