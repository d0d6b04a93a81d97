#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace hyperdim {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Vector = std::vector<Rational>;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Accepts "p", "-p", "+p", "p/q". Anything else, including decimals and a
// zero denominator, is an InputError.
inline Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                                 : body.substr(slash + 1);
    if (!digits(num) || !digits(den))
        throw InputError("not an exact rational: \"" + std::string(text) +
                         "\" (expected an integer or \"p/q\")");
    Integer p{std::string(num)};
    Integer q{std::string(den)};
    if (q == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
    if (negative) p = -p;
    return Rational(p, q);
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("dot: lengths " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

// Scales a nonzero vector to the primitive integer representative of its
// projective class: integer entries, gcd 1, first nonzero entry positive.
// The zero vector is returned unchanged.
inline Vector primitive_integer(const Vector& v) {
    Integer common_den = 1;
    for (const auto& x : v)
        if (x != 0) common_den = lcm(common_den, Integer(denominator(x)));
    std::vector<Integer> ints;
    ints.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        Integer k = numerator(x) * (common_den / denominator(x));
        g = gcd(g, k);
        ints.push_back(std::move(k));
    }
    if (g == 0) return v;
    for (const auto& k : ints) {
        if (k != 0) {
            if (k < 0) g = -g;
            break;
        }
    }
    Vector out;
    out.reserve(v.size());
    for (const auto& k : ints) out.emplace_back(k / g);
    return out;
}

// Lexicographic three-way comparison of equal-length vectors.
inline int compare_lex(const Vector& a, const Vector& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (b[i] < a[i]) return 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

}  // namespace hyperdim
