#pragma once

// Exact geometry of cyclic quadrilaterals given by their consecutive sides.
//
// Everything is computed on squares (area^2, diagonal^2, circumradius^2),
// which are rational for rational sides; the roots are filled in only when
// they happen to be rational.

#include "bq/numerics.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

namespace bq {

using Quadruple = std::array<Rational, 4>;

/// Four strictly positive consecutive sides.
class QuadSides {
public:
    explicit QuadSides(const Quadruple& sides) : a_(sides) {
        for (const Rational& s : a_)
            if (s <= 0)
                throw domain_error("quadrilateral side must be positive, got " + to_string(s));
    }
    QuadSides(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4)
        : QuadSides(Quadruple{a1, a2, a3, a4}) {}

    const Quadruple& sides() const { return a_; }
    const Rational& operator[](std::size_t i) const { return a_[i]; }
    Rational perimeter() const { return a_[0] + a_[1] + a_[2] + a_[3]; }

    QuadSides scaled(const Rational& lambda) const {
        return QuadSides(lambda * a_[0], lambda * a_[1], lambda * a_[2], lambda * a_[3]);
    }
    /// Sides in non-decreasing order (the multiset).
    Quadruple sorted() const {
        Quadruple s = a_;
        std::sort(s.begin(), s.end());
        return s;
    }

    friend bool operator==(const QuadSides&, const QuadSides&) = default;

private:
    Quadruple a_;
};

/// Thrown by metrics() and equal_pair_check() when one side is not shorter
/// than the other three together.
class non_constructible_error : public domain_error {
public:
    non_constructible_error(std::size_t side, const std::string& what) : domain_error(what), side_(side) {}
    /// Index (0-based) of the offending side.
    std::size_t side() const { return side_; }

private:
    std::size_t side_;
};

struct QuadMetrics {
    Rational semiperimeter;
    Rational perimeter;
    Rational area_sq;
    std::optional<Rational> area;
    Rational d1_sq;
    Rational d2_sq;
    std::optional<Rational> d1;
    std::optional<Rational> d2;
    Rational circumradius_sq;
    std::optional<Rational> circumradius;
};

struct BrahmaguptaCertificate {
    Rational scale;
    std::array<Integer, 4> sides;
    std::array<Integer, 2> diagonals;
    Integer area;
    std::optional<Rational> circumradius;
};

namespace detail {

/// Index of the first side that is >= the sum of the other three, or 4.
inline std::size_t violated_side(const Quadruple& a) {
    Rational total = a[0] + a[1] + a[2] + a[3];
    for (std::size_t i = 0; i < 4; ++i)
        if (2 * a[i] >= total)
            return i;
    return 4;
}

inline void require_constructible(const QuadSides& q) {
    std::size_t i = violated_side(q.sides());
    if (i == 4)
        return;
    const Quadruple& a = q.sides();
    std::string others;
    for (std::size_t j = 0; j < 4; ++j) {
        if (j == i)
            continue;
        others += (others.empty() ? "" : " + ") + to_string(a[j]);
    }
    throw non_constructible_error(
        i, "not constructible: side a" + std::to_string(i + 1) + " = " + to_string(a[i]) + " is not less than " + others);
}

}  // namespace detail

/// Strict polygon inequality: every side shorter than the other three together.
inline bool constructible(const Quadruple& a) {
    for (const Rational& s : a)
        if (s <= 0)
            return false;
    return detail::violated_side(a) == 4;
}
inline bool constructible(const QuadSides& q) { return constructible(q.sides()); }

// The formulas below are generic in the scalar so that they also run on
// polynomials for symbolic identity checks.

/// The three pairwise products (a1a2+a3a4, a1a3+a2a4, a1a4+a2a3).
template <class T>
std::array<T, 3> pair_products(const std::array<T, 4>& a) {
    return {T(a[0] * a[1] + a[2] * a[3]), T(a[0] * a[2] + a[1] * a[3]), T(a[0] * a[3] + a[1] * a[2])};
}

/// (a1a2+a3a4)(a1a3+a2a4)(a1a4+a2a3). Rational diagonals exist in every
/// side order exactly when this is a square.
template <class T>
T triple_product(const std::array<T, 4>& a) {
    std::array<T, 3> p = pair_products(a);
    return T(p[0] * p[1]) * p[2];
}

/// (-a1+a2+a3+a4)(a1-a2+a3+a4)(a1+a2-a3+a4)(a1+a2+a3-a4) = 16 K^2.
template <class T>
T sixteen_area_sq(const std::array<T, 4>& a) {
    T total = a[0] + a[1] + a[2] + a[3];
    T prod = T(1);
    for (const T& s : a)
        prod = prod * T(total - T(2) * s);
    return prod;
}

inline QuadMetrics metrics(const QuadSides& q) {
    detail::require_constructible(q);
    const Quadruple& a = q.sides();
    QuadMetrics m;
    m.perimeter = q.perimeter();
    m.semiperimeter = m.perimeter / 2;
    m.area_sq = sixteen_area_sq(a) / 16;
    m.area = rational_square_root(m.area_sq);

    std::array<Rational, 3> p = pair_products(a);
    m.d1_sq = p[0] * p[1] / p[2];
    m.d2_sq = p[1] * p[2] / p[0];
    m.d1 = rational_square_root(m.d1_sq);
    m.d2 = rational_square_root(m.d2_sq);
    m.circumradius_sq = p[0] * p[1] * p[2] / (16 * m.area_sq);
    m.circumradius = rational_square_root(m.circumradius_sq);
    return m;
}

/// The three distinct cyclic orders up to rotation and reflection:
/// (a1,a2,a3,a4), (a1,a3,a2,a4), (a1,a2,a4,a3). Repeated sides make some
/// of them coincide; no deduplication is done.
inline std::array<QuadSides, 3> sibling_orders(const QuadSides& q) {
    const Quadruple& a = q.sides();
    return {q, QuadSides(a[0], a[2], a[1], a[3]), QuadSides(a[0], a[1], a[3], a[2])};
}

/// Number of distinct side orders among sibling_orders(q).
inline std::size_t distinct_order_count(const QuadSides& q) {
    std::array<QuadSides, 3> s = sibling_orders(q);
    std::size_t n = 1;
    // Two orders are the same quadrilateral if one is a rotation or reflection of the other.
    auto same = [](const Quadruple& x, const Quadruple& y) {
        for (std::size_t r = 0; r < 4; ++r) {
            bool fwd = true;
            bool rev = true;
            for (std::size_t i = 0; i < 4; ++i) {
                fwd = fwd && x[i] == y[(i + r) % 4];
                rev = rev && x[i] == y[(r + 4 - i) % 4];
            }
            if (fwd || rev)
                return true;
        }
        return false;
    };
    if (!same(s[1].sides(), s[0].sides()))
        ++n;
    if (!same(s[2].sides(), s[0].sides()) && !same(s[2].sides(), s[1].sides()))
        ++n;
    return n;
}

/// Smallest positive scale turning sides, diagonals and area into integers.
/// Absent when a diagonal or the area is irrational.
inline std::optional<BrahmaguptaCertificate> scale_to_brahmagupta(const QuadSides& q) {
    QuadMetrics m = metrics(q);
    if (!m.d1 || !m.d2 || !m.area)
        return std::nullopt;
    std::array<Rational, 6> lengths{q[0], q[1], q[2], q[3], *m.d1, *m.d2};
    // Least lambda0 with lambda0 * lengths integral; multiples of it are exactly
    // the scales that keep the lengths integral.
    Rational lambda = primitive_scale(lengths);
    // 16 (lambda^2 K)^2 is the product of the four integers lambda*(P - 2 a_i),
    // so 4 lambda^2 K is an integer and the least extra factor is 1 or 2.
    Rational scaled_area = lambda * lambda * *m.area;
    Integer den = scaled_area.get_den();
    if (den != 1 && den != 2 && den != 4)
        throw consistency_error("scaled area denominator does not divide 4");
    Integer k = den == 1 ? 1 : 2;
    lambda *= k;

    BrahmaguptaCertificate c;
    c.scale = lambda;
    for (std::size_t i = 0; i < 4; ++i) {
        Rational s = lambda * q[i];
        if (!is_integer(s))
            throw consistency_error("scaled side is not an integer");
        c.sides[i] = s.get_num();
    }
    Rational e1 = lambda * *m.d1;
    Rational e2 = lambda * *m.d2;
    Rational ka = lambda * lambda * *m.area;
    if (!is_integer(e1) || !is_integer(e2) || !is_integer(ka))
        throw consistency_error("scaled diagonal or area is not an integer");
    c.diagonals = {e1.get_num(), e2.get_num()};
    c.area = ka.get_num();
    if (m.circumradius)
        c.circumradius = lambda * *m.circumradius;
    return c;
}

struct EqualPairReport {
    bool perimeter_equal = false;
    bool area_equal = false;      // equal 16 K^2
    bool a_triple_square = false;
    bool b_triple_square = false;
    bool multisets_distinct = false;

    /// Equal perimeter and area with genuinely different side multisets.
    bool equal_perimeter_and_area() const { return perimeter_equal && area_equal && multisets_distinct; }
    /// Additionally every diagonal of both quadrilaterals is rational.
    bool brahmagupta_pair() const { return equal_perimeter_and_area() && a_triple_square && b_triple_square; }
};

inline EqualPairReport equal_pair_check(const QuadSides& p, const QuadSides& q) {
    detail::require_constructible(p);
    detail::require_constructible(q);
    EqualPairReport r;
    r.perimeter_equal = p.perimeter() == q.perimeter();
    r.area_equal = sixteen_area_sq(p.sides()) == sixteen_area_sq(q.sides());
    r.a_triple_square = is_rational_square(triple_product(p.sides()));
    r.b_triple_square = is_rational_square(triple_product(q.sides()));
    r.multisets_distinct = p.sorted() != q.sorted();
    return r;
}

// x <-> a change of variables under which equal perimeters and equal areas
// become equal sums and equal products.

/// a_i = (sum(x) - 2 x_i) / 2
template <class T>
std::array<T, 4> sides_from_transformed(const std::array<T, 4>& x) {
    T total = x[0] + x[1] + x[2] + x[3];
    T half = T(Rational(1, 2));
    std::array<T, 4> a;
    for (std::size_t i = 0; i < 4; ++i)
        a[i] = half * T(total - T(2) * x[i]);
    return a;
}

/// x_i = s - a_i with s the semiperimeter.
inline Quadruple transformed_from_sides(const Quadruple& a) {
    Rational s = (a[0] + a[1] + a[2] + a[3]) / 2;
    Quadruple x;
    for (std::size_t i = 0; i < 4; ++i)
        x[i] = s - a[i];
    return x;
}

}  // namespace bq
