#pragma once

/**
 * @file numerics.hpp
 * @brief Exact integer and rational scalars
 *
 * Integer and Rational are GMP's mpz_class / mpq_class. Every Rational that
 * leaves this library is canonical: reduced, positive denominator, zero as 0/1.
 * GMP arithmetic keeps results canonical; the only entry points that can
 * produce a non-canonical value are explicit numerator/denominator
 * constructors, which go through make_rational().
 *
 * Note: gmpxx builds expression templates, so never bind an arithmetic
 * expression to `auto`. Spell out Integer or Rational.
 */

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Invalid input to an operation (negative isqrt argument, degenerate
/// parameters, non-constructible quadrilateral, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal invariant failed. Always a bug, never a user error.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
inline Integer abs(const Integer& n) { return n < 0 ? Integer(-n) : n; }

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow(const Rational& base, unsigned e) {
    Rational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
    return r;  // already canonical: coprime powers of coprime values
}

inline std::size_t bit_length(const Integer& n) {
    if (n == 0)
        return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

/// floor(sqrt(n)) by Newton iteration from an overestimate, with the
/// bracketing postcondition r^2 <= n < (r+1)^2 checked before returning.
inline Integer isqrt_floor(const Integer& n) {
    if (n < 0)
        throw domain_error("isqrt_floor of a negative integer");
    if (n == 0)
        return 0;
    Integer x = Integer(1) << static_cast<mp_bitcnt_t>((bit_length(n) + 1) / 2);
    for (;;) {
        Integer y = (x + n / x) >> 1;
        if (y >= x)
            break;
        x = y;
    }
    Integer next = x + 1;
    if (x * x > n || next * next <= n)
        throw consistency_error("isqrt_floor bracketing failed");
    return x;
}

namespace detail {

// Quadratic residues mod 256 as a bitmask; rejects ~80% of non-squares
// before any big-number work.
inline bool maybe_square_mod256(const Integer& n) {
    static const std::array<bool, 256> residues = [] {
        std::array<bool, 256> r{};
        for (unsigned i = 0; i < 256; ++i)
            r[(i * i) & 0xff] = true;
        return r;
    }();
    unsigned long low = mpz_getlimbn(n.get_mpz_t(), 0) & 0xff;
    return residues[low];
}

}  // namespace detail

inline std::optional<Integer> perfect_square_root(const Integer& n) {
    if (n < 0)
        return std::nullopt;
    if (!detail::maybe_square_mod256(n))
        return std::nullopt;
    Integer r = isqrt_floor(n);
    if (r * r != n)
        return std::nullopt;
    return r;
}

inline bool is_perfect_square(const Integer& n) { return perfect_square_root(n).has_value(); }

inline std::optional<Rational> rational_square_root(const Rational& q) {
    std::optional<Integer> num = perfect_square_root(q.get_num());
    if (!num)
        return std::nullopt;
    std::optional<Integer> den = perfect_square_root(q.get_den());
    if (!den)
        return std::nullopt;
    return Rational(*num, *den);
}

inline bool is_rational_square(const Rational& q) { return rational_square_root(q).has_value(); }

/// Divides by the (positive) gcd of the entries. Signs and order are kept.
template <std::size_t N>
std::array<Integer, N> normalize_integers(const std::array<Integer, N>& v) {
    Integer g = 0;
    for (const Integer& e : v)
        g = gcd(g, e);
    if (g == 0)
        throw domain_error("cannot normalize an all-zero vector");
    std::array<Integer, N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = v[i] / g;
    return out;
}

inline std::array<Integer, 4> normalize_quadruple(const std::array<Integer, 4>& v) {
    return normalize_integers(v);
}

/// The unique positive rational c such that c*v is a primitive integer vector.
inline Rational primitive_scale(std::span<const Rational> v) {
    Integer den_lcm = 1;
    Integer num_gcd = 0;
    for (const Rational& q : v) {
        den_lcm = lcm(den_lcm, q.get_den());
        num_gcd = gcd(num_gcd, q.get_num());
    }
    if (num_gcd == 0)
        throw domain_error("cannot normalize an all-zero vector");
    return make_rational(den_lcm, num_gcd);
}

// ---------------------------------------------------------------------------
// Text form: "p/q", or "p" when q == 1.

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

namespace detail {

inline bool is_digit_run(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace detail

/// Parses an optionally signed integer. No whitespace, no decimals.
inline Integer parse_integer(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    if (!detail::is_digit_run(body))
        throw domain_error("not an integer: '" + std::string(text) + "'");
    std::string s(text.front() == '+' ? text.substr(1) : text);
    return Integer(s, 10);
}

/// Parses "p", "-p", "p/q" or "-p/q". Decimal notation is rejected.
inline Rational parse_rational(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    std::string_view den_text = text.substr(slash + 1);
    if (!detail::is_digit_run(den_text))
        throw domain_error("not a rational: '" + std::string(text) + "'");
    return make_rational(parse_integer(text.substr(0, slash)), Integer(std::string(den_text), 10));
}

/// Comma-separated list of rationals, e.g. "4,-16,25,-16,4".
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        out.push_back(parse_rational(item));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

}  // namespace bq
