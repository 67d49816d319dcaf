#pragma once

// Pairs of cyclic quadrilaterals with equal perimeter and area in which each
// quadrilateral has two equal sides, parameterized by coprime (r1, r2).
//
// Two independent routes produce the sides:
//   * closed forms: homogeneous polynomials in (r1, r2), evaluated directly;
//   * the seed pipeline: q1, q2 making phi a square, then p1, p2, then the
//     equal-sum / equal-product quadruples x, y, then the inverse change of
//     variables back to sides.
// build_pair() runs both and requires them to agree up to one positive factor.

#include "bq/fermat.hpp"
#include "bq/numerics.hpp"
#include "bq/pair_record.hpp"
#include "bq/poly.hpp"
#include "bq/quad.hpp"

#include <array>
#include <string>
#include <vector>

namespace bq::isosceles {

/// Coprime positive integers with r1 != r2.
class Params {
public:
    Params(const Integer& r1, const Integer& r2) {
        if (r1 <= 0 || r2 <= 0)
            throw domain_error("r1 and r2 must be positive");
        Integer g = gcd(r1, r2);
        r1_ = r1 / g;
        r2_ = r2 / g;
        if (r1_ == r2_)
            throw domain_error("r1 = r2 is degenerate");
    }
    /// The construction is homogeneous, so rational parameters reduce to the
    /// coprime integer pair with the same ratio.
    static Params from_ratio(const Rational& r1, const Rational& r2) {
        if (r1 <= 0 || r2 <= 0)
            throw domain_error("r1 and r2 must be positive");
        Rational ratio = r1 / r2;
        return Params(ratio.get_num(), ratio.get_den());
    }

    const Integer& r1() const { return r1_; }
    const Integer& r2() const { return r2_; }
    Rational ratio() const { return make_rational(r1_, r2_); }

private:
    Integer r1_;
    Integer r2_;
};

struct Seed {
    Rational q1, q2, p1, p2;
    Quadruple x;
    Quadruple y;
};

/// num / den with both sides polynomials in (r1, r2).
struct RationalForm {
    BiPoly num;
    BiPoly den = BiPoly(1);

    Rational eval(const Rational& r1, const Rational& r2) const {
        Rational d = den.eval(r1, r2);
        if (d == 0)
            throw domain_error("closed form has a vanishing denominator");
        return num.eval(r1, r2) / d;
    }
};

/// Printed closed forms for the family, as polynomials in x = r1, y = r2.
struct ClosedForms {
    std::array<BiPoly, 4> a;
    std::array<BiPoly, 4> b;
    BiPoly perimeter;
    BiPoly area;
    BiPoly diagonal_shared;  // first diagonal of both quadrilaterals
    RationalForm diagonal_a;
    RationalForm diagonal_b;
    RationalForm circumradius_a;
    RationalForm circumradius_b;
    BiPoly q1;
    BiPoly q2;
};

inline BiPoly rp(std::string_view text) { return parse_bipoly(text, "r1", "r2"); }

inline const ClosedForms& closed_forms() {
    static const ClosedForms forms = [] {
        const BiPoly r1 = BiPoly::x();
        const BiPoly r2 = BiPoly::y();
        const BiPoly sum_sq = rp("r1^2 + r2^2");
        const BiPoly quad4 = rp("r1^2 - 4*r1*r2 + r2^2");
        const BiPoly diff = r1 - r2;
        const BiPoly oct36 = rp("r1^8 - 8*r1^7*r2 + 36*r1^6*r2^2 - 88*r1^5*r2^3 + 198*r1^4*r2^4"
                                " - 88*r1^3*r2^5 + 36*r1^2*r2^6 - 8*r1*r2^7 + r2^8");
        const BiPoly oct52 = rp("r1^8 - 8*r1^7*r2 + 52*r1^6*r2^2 - 152*r1^5*r2^3 + 230*r1^4*r2^4"
                                " - 152*r1^3*r2^5 + 52*r1^2*r2^6 - 8*r1*r2^7 + r2^8");
        const BiPoly q2 = rp("r1^4 - 4*r1^3*r2 + 10*r1^2*r2^2 - 4*r1*r2^3 + r2^4");

        ClosedForms f;
        f.a[0] = sum_sq * quad4 *
                 rp("r1^6 - 4*r1^5*r2 + 19*r1^4*r2^2 - 40*r1^3*r2^3 + 19*r1^2*r2^4 - 4*r1*r2^5 + r2^6");
        f.a[1] = -(sum_sq * quad4 *
                   rp("r1^6 - 8*r1^5*r2 + 35*r1^4*r2^2 - 48*r1^3*r2^3 + 35*r1^2*r2^4 - 8*r1*r2^5 + r2^6"));
        f.a[2] = pow(diff, 2) * oct36;
        f.a[3] = f.a[2];
        f.b[0] = -(diff * rp("r1^4 - 8*r1^3*r2 + 10*r1^2*r2^2 + r2^4") *
                   rp("r1^5 + r1^4*r2 - 6*r1^3*r2^2 + 18*r1^2*r2^3 - 7*r1*r2^4 + r2^5"));
        f.b[1] = diff * rp("r1^4 + 10*r1^2*r2^2 - 8*r1*r2^3 + r2^4") *
                 rp("r1^5 - 7*r1^4*r2 + 18*r1^3*r2^2 - 6*r1^2*r2^3 + r1*r2^4 + r2^5");
        f.b[2] = pow(quad4, 2) * pow(sum_sq, 3);
        f.b[3] = f.b[2];

        f.perimeter = rp("2*r1^10 - 16*r1^9*r2 + 74*r1^8*r2^2 - 256*r1^7*r2^3 + 724*r1^6*r2^4 - 992*r1^5*r2^5"
                         " + 724*r1^4*r2^6 - 256*r1^3*r2^7 + 74*r1^2*r2^8 - 16*r1*r2^9 + 2*r2^10");
        f.area = rp("32*r1^3*r2^3") * pow(diff, 2) * pow(sum_sq, 2) * pow(quad4, 2) * q2;
        f.diagonal_shared = rp("2*r1*r2") * oct52;
        f.diagonal_a = {BiPoly(2) * oct36 * pow(diff, 2) * pow(sum_sq, 2) * pow(quad4, 2), oct52};
        f.diagonal_b = {rp("16*r1*r2") * q2 * pow(diff, 2) * pow(quad4, 2) * pow(sum_sq, 3), oct52};
        f.circumradius_a = {oct36 * oct52, rp("16*r1*r2") * q2};
        f.circumradius_b = {sum_sq * oct52, BiPoly(2)};
        f.q1 = rp("8*r1^2*r2^2");
        f.q2 = q2;
        return f;
    }();
    return forms;
}

inline Rational phi(const Rational& q1, const Rational& q2, const Rational& r1, const Rational& r2) {
    Rational rr = r1 * r1 * r2 * r2;
    Rational mid = pow(r1, 4) - 4 * pow(r1, 3) * r2 + 12 * rr - 4 * r1 * pow(r2, 3) + pow(r2, 4);
    return rr * pow(q1, 4) - 4 * rr * pow(q1, 3) * q2 + mid * q1 * q1 * q2 * q2 - 4 * rr * q1 * pow(q2, 3) +
           rr * pow(q2, 4);
}

/// phi(z, 1, r1, r2) as a quartic in z.
inline Quartic phi_quartic(const Params& p) {
    Rational r1 = p.r1();
    Rational r2 = p.r2();
    Rational rr = r1 * r1 * r2 * r2;
    Rational mid = pow(r1, 4) - 4 * pow(r1, 3) * r2 + 12 * rr - 4 * r1 * pow(r2, 3) + pow(r2, 4);
    return Quartic(std::array<Rational, 5>{rr, Rational(-4 * rr), mid, Rational(-4 * rr), rr});
}

inline void verify_seed(const Seed& s) {
    auto fail = [](const std::string& what) { throw consistency_error("isosceles seed: " + what); };
    if (s.x[3] != s.x[2] || s.y[3] != s.y[2])
        fail("equal-side condition x4 = x3, y4 = y3 violated");
    if (!is_rational_square(s.x[0] * s.x[1]) || !is_rational_square(s.y[0] * s.y[1]))
        fail("x1 x2 or y1 y2 is not a square");
    if (s.x[0] + s.x[1] + s.x[2] + s.x[3] != s.y[0] + s.y[1] + s.y[2] + s.y[3])
        fail("sum(x) != sum(y)");
    Rational px = s.x[0] * s.x[1] * s.x[2] * s.x[3];
    Rational py = s.y[0] * s.y[1] * s.y[2] * s.y[3];
    if (px != py)
        fail("prod(x) != prod(y)");
    if (!is_rational_square(px))
        fail("prod(x) is not a square");
}

/// Seed for a given (q1, q2); phi(q1, q2, r1, r2) need not be a square here.
inline Seed seed_from_q(const Params& p, const Rational& q1, const Rational& q2) {
    Rational r1 = p.r1();
    Rational r2 = p.r2();
    Seed s;
    s.q1 = q1;
    s.q2 = q2;
    s.p1 = (r1 - r2) * (r1 - r2);
    s.p2 = (q1 - q2) * (q1 - q2);
    Rational x3 = s.p2 * r1 * r2;
    Rational y3 = s.p1 * q1 * q2;
    s.x = {s.p1 * q1 * q1, s.p1 * q2 * q2, x3, x3};
    s.y = {s.p2 * r1 * r1, s.p2 * r2 * r2, y3, y3};
    verify_seed(s);
    return s;
}

inline Seed default_seed(const Params& p) {
    const ClosedForms& f = closed_forms();
    return seed_from_q(p, f.q1.eval(p.r1(), p.r2()), f.q2.eval(p.r1(), p.r2()));
}

inline std::array<Quadruple, 2> closed_form_sides(const Params& p) {
    const ClosedForms& f = closed_forms();
    Rational r1 = p.r1();
    Rational r2 = p.r2();
    std::array<Quadruple, 2> out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[0][i] = f.a[i].eval(r1, r2);
        out[1][i] = f.b[i].eval(r1, r2);
    }
    return out;
}

namespace detail {

inline void expect_equal(const Rational& got, const Rational& want, const std::string& what) {
    if (got != want)
        throw consistency_error("isosceles " + what + ": metrics give " + to_string(got) + ", closed form gives " +
                                to_string(want));
}

inline void expect_equal(const std::optional<Rational>& got, const Rational& want, const std::string& what) {
    if (!got)
        throw consistency_error("isosceles " + what + " is irrational, closed form gives " + to_string(want));
    expect_equal(*got, want, what);
}

}  // namespace detail

inline PairRecord build_pair(const Params& p) {
    auto [a, b] = closed_form_sides(p);
    Seed seed = default_seed(p);
    Quadruple pa = sides_from_transformed(seed.x);
    Quadruple pb = sides_from_transformed(seed.y);
    std::optional<Rational> fa = common_factor(a, pa);
    std::optional<Rational> fb = common_factor(b, pb);
    if (!fa || !fb || *fa != *fb || *fa <= 0)
        throw consistency_error("isosceles closed forms disagree with the seed pipeline");

    PairRecord rec;
    rec.family = "isosceles";
    rec.params = {{"r1", to_string(p.r1())}, {"r2", to_string(p.r2())}};
    rec.quad_a = a;
    rec.quad_b = b;
    rec.pipeline_factor = *fa;
    rec.constructible = constructible(a) && constructible(b);
    if (!rec.constructible) {
        rec.flags.push_back(all_positive(a) && all_positive(b) ? "polygon inequality fails"
                                                               : "nonpositive side");
        return rec;
    }

    QuadSides qa(a);
    QuadSides qb(b);
    EqualPairReport report = equal_pair_check(qa, qb);
    if (!report.perimeter_equal || !report.area_equal || !report.a_triple_square || !report.b_triple_square)
        throw consistency_error("isosceles pair fails the equal perimeter/area/diagonal conditions");
    if (!report.multisets_distinct)
        rec.flags.push_back("side multisets coincide");

    const ClosedForms& f = closed_forms();
    Rational r1 = p.r1();
    Rational r2 = p.r2();
    QuadMetrics ma = metrics(qa);
    QuadMetrics mb = metrics(qb);
    detail::expect_equal(ma.perimeter, f.perimeter.eval(r1, r2), "perimeter");
    detail::expect_equal(ma.area, f.area.eval(r1, r2), "area of a");
    detail::expect_equal(mb.area, f.area.eval(r1, r2), "area of b");
    detail::expect_equal(ma.d1, f.diagonal_shared.eval(r1, r2), "first diagonal of a");
    detail::expect_equal(mb.d1, f.diagonal_shared.eval(r1, r2), "first diagonal of b");
    detail::expect_equal(ma.d2, f.diagonal_a.eval(r1, r2), "second diagonal of a");
    detail::expect_equal(mb.d2, f.diagonal_b.eval(r1, r2), "second diagonal of b");
    detail::expect_equal(ma.circumradius, f.circumradius_a.eval(r1, r2), "circumradius of a");
    detail::expect_equal(mb.circumradius, f.circumradius_b.eval(r1, r2), "circumradius of b");
    return rec;
}

/// Same pair with sides in the order (1,3,2,4): two isosceles trapezia whose
/// four diagonals all equal the shared diagonal of build_pair().
inline PairRecord trapezium_variant(const Params& p) {
    PairRecord rec = build_pair(p);
    rec.params.emplace_back("order", "trapezium");
    rec.quad_a = {rec.quad_a[0], rec.quad_a[2], rec.quad_a[1], rec.quad_a[3]};
    rec.quad_b = {rec.quad_b[0], rec.quad_b[2], rec.quad_b[1], rec.quad_b[3]};
    if (!rec.constructible)
        return rec;
    Rational diag = closed_forms().diagonal_shared.eval(p.r1(), p.r2());
    for (const Quadruple& q : {rec.quad_a, rec.quad_b}) {
        QuadMetrics m = metrics(QuadSides(q));
        detail::expect_equal(m.d1, diag, "trapezium diagonal");
        detail::expect_equal(m.d2, diag, "trapezium diagonal");
    }
    return rec;
}

struct ExtendedSeeds {
    std::vector<Seed> seeds;
    bool stalled = false;
};

/// Up to k further (q1, q2) beyond the default seed with phi a square, found
/// by iterating Fermat's method on phi(z, 1, r1, r2).
inline ExtendedSeeds extended_seeds(const Params& p, std::size_t k) {
    ExtendedSeeds out;
    if (k == 0)
        return out;
    const ClosedForms& f = closed_forms();
    Rational default_ratio = f.q1.eval(p.r1(), p.r2()) / f.q2.eval(p.r1(), p.r2());
    FermatRun run = fermat_iterate(phi_quartic(p), k + 1);
    for (const Rational& z : run.solutions) {
        if (z == default_ratio || out.seeds.size() == k)
            continue;
        Seed s = seed_from_q(p, z.get_num(), z.get_den());
        if (!is_rational_square(phi(s.q1, s.q2, p.r1(), p.r2())))
            throw consistency_error("extended seed does not make phi a square");
        out.seeds.push_back(std::move(s));
    }
    out.stalled = out.seeds.size() < k;
    return out;
}

}  // namespace bq::isosceles
