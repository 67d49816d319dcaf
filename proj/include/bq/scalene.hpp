#pragma once

// Pairs of cyclic quadrilaterals with equal perimeter and area and four
// unequal sides each, parameterized by a rational t.
//
// Pipeline: two quadruples with equal sums and equal products, in terms of
// (g, h, m, n, r1, r2). The rational-diagonal conditions collapse to the
// quartic curve Y^2 = (Xu-v)(Xu+v)(Xv-u)(Xv+u); a known point on it for
// u, v depending on t fixes g, h, m, n, and Fermat's method on the residual
// quartic phi2 in (r1, r2) fixes r1, r2.

#include "bq/fermat.hpp"
#include "bq/numerics.hpp"
#include "bq/pair_record.hpp"
#include "bq/poly.hpp"
#include "bq/quad.hpp"

#include <array>
#include <string>
#include <utility>

namespace bq::scalene {

class Params {
public:
    explicit Params(const Rational& t) : t_(t) {
        if (t == 0 || t == 1 || t == -1)
            throw domain_error("t = " + to_string(t) + " is degenerate");
        if (t * (pow(t, 4) + 6 * t * t - 3) == 0)
            throw domain_error("t(t^4 + 6t^2 - 3) vanishes");
    }
    const Rational& t() const { return t_; }

private:
    Rational t_;
};

inline UniPoly tp(std::string_view text) { return parse_unipoly(text, "t"); }

/// Every printed polynomial of the construction, in t.
struct Forms {
    UniPoly g, h, m, n, u, v;
    UniPoly r1, r2;
    UniPoly x_num, x_den;  // X = x_num / x_den
    UniPoly y_num, y_den;  // Y = y_num / y_den
    std::array<UniPoly, 5> phi2;  // coefficient of r1^(4-k) r2^k
    UniPoly phi1_t;               // t-only factor of phi1
    std::array<UniPoly, 2> phi1_r;  // phi1 bracket: r1 * phi1_r[0] + r2 * phi1_r[1]
    std::array<UniPoly, 4> a;
    std::array<UniPoly, 4> b;
};

inline const Forms& forms() {
    static const Forms f = [] {
        const UniPoly t = UniPoly::x();
        const UniPoly P = tp("t^4 - 4*t^3 + 10*t^2 - 4*t + 1");
        const UniPoly Q = tp("t^4 + 4*t^3 + 10*t^2 + 4*t + 1");
        const UniPoly A = tp("t^2 + 2*t - 1");
        const UniPoly B = tp("t^2 - 2*t - 1");
        const UniPoly S = tp("t^2 + 1");
        const UniPoly N4 = tp("t^4 + 6*t^2 - 3");

        Forms f;
        f.g = A * B;
        f.h = tp("-4*t") * S;
        f.m = tp("t^5 - 3*t^4 + 6*t^3 + 6*t^2 - 3*t + 1");
        f.n = N4 * t;
        f.u = t * tp("t^4 - 2*t^2 + 5");
        f.v = tp("5*t^4 - 2*t^2 + 1");
        f.r1 = tp("32*t^2") * P * Q * pow(S, 2);
        f.r2 = tp("t^8 + 4*t^7 + 4*t^6 - 20*t^5 + 70*t^4 - 20*t^3 + 4*t^2 + 4*t + 1") *
               tp("t^8 - 4*t^7 + 4*t^6 + 20*t^5 + 70*t^4 + 20*t^3 + 4*t^2 - 4*t + 1");
        f.x_num = tp("3*t^4 - 6*t^2 - 1");
        f.x_den = t * N4;
        f.y_num = tp("4*t^2 - 4") * pow(S, 2) * A * B * tp("t^8 + 20*t^6 - 26*t^4 + 20*t^2 + 1");
        f.y_den = t * pow(N4, 2);

        const UniPoly tt = t * t;
        f.phi2[0] = pow(P, 2) * pow(Q, 2) * pow(A, 4) * pow(B, 4);
        f.phi2[1] = UniPoly(-64) * tt * pow(S, 2) * pow(A, 4) * P * Q * pow(B, 4);
        f.phi2[2] = UniPoly(32) * tt * pow(S, 2) * pow(A, 2) * pow(P, 2) * pow(Q, 2) * pow(B, 2);
        f.phi2[3] = UniPoly(-1024) * pow(t, 4) * pow(A, 2) * pow(B, 2) * P * Q * pow(S, 4);
        f.phi2[4] = UniPoly(256) * pow(t, 4) * pow(P, 2) * pow(Q, 2) * pow(S, 4);
        f.phi1_t = t * tp("3*t^4 - 6*t^2 - 1") * N4;
        f.phi1_r = {pow(A, 2) * pow(B, 2), UniPoly(-16) * tt * pow(S, 2)};

        f.a[0] = Q *
                 tp("t^16 - 24*t^14 + 48*t^13 - 100*t^12 - 672*t^11 - 1128*t^10 + 2960*t^9 - 3002*t^8"
                    " - 4032*t^7 + 1240*t^6 + 592*t^5 - 868*t^4 + 96*t^3 + 40*t^2 - 16*t + 1") *
                 tp("3*t^17 - 15*t^16 + 8*t^15 + 136*t^14 - 140*t^13 - 276*t^12 + 2488*t^11 - 2792*t^10"
                    " + 1170*t^9 - 42*t^8 + 2488*t^7 - 1800*t^6 - 140*t^5 - 52*t^4 + 8*t^3 - 24*t^2 + 3*t + 1");
        f.a[1] = -(P *
                   tp("t^17 + t^16 - 72*t^15 - 264*t^14 - 580*t^13 - 964*t^12 - 2680*t^11 - 2232*t^10"
                      " - 250*t^9 + 1542*t^8 - 2680*t^7 - 952*t^6 - 580*t^5 + 60*t^4 - 72*t^3 - 8*t^2 + t + 1") *
                   tp("t^16 - 8*t^14 + 60*t^12 - 768*t^11 - 1720*t^10 + 1542*t^8 + 2560*t^7 + 328*t^6"
                      " + 2048*t^5 + 1084*t^4 + 256*t^3 - 8*t^2 + 1"));
        f.a[2] = -(P *
                   tp("t^16 - 24*t^14 - 48*t^13 - 100*t^12 + 672*t^11 - 1128*t^10 - 2960*t^9 - 3002*t^8"
                      " + 4032*t^7 + 1240*t^6 - 592*t^5 - 868*t^4 - 96*t^3 + 40*t^2 + 16*t + 1") *
                   tp("3*t^17 + 15*t^16 + 8*t^15 - 136*t^14 - 140*t^13 + 276*t^12 + 2488*t^11 + 2792*t^10"
                      " + 1170*t^9 + 42*t^8 + 2488*t^7 + 1800*t^6 - 140*t^5 + 52*t^4 + 8*t^3 + 24*t^2 + 3*t - 1"));
        f.a[3] = -(Q *
                   tp("t^16 - 8*t^14 + 60*t^12 + 768*t^11 - 1720*t^10 + 1542*t^8 - 2560*t^7 + 328*t^6"
                      " - 2048*t^5 + 1084*t^4 - 256*t^3 - 8*t^2 + 1") *
                   tp("t^17 - t^16 - 72*t^15 + 264*t^14 - 580*t^13 + 964*t^12 - 2680*t^11 + 2232*t^10"
                      " - 250*t^9 - 1542*t^8 - 2680*t^7 + 952*t^6 - 580*t^5 - 60*t^4 - 72*t^3 + 8*t^2 + t - 1"));
        f.b[0] = -(Q *
                   tp("t^16 - 16*t^15 + 40*t^14 + 96*t^13 - 868*t^12 + 592*t^11 + 1240*t^10 - 4032*t^9"
                      " - 3002*t^8 + 2960*t^7 - 1128*t^6 - 672*t^5 - 100*t^4 + 48*t^3 - 24*t^2 + 1") *
                   tp("t^17 + 3*t^16 - 24*t^15 + 8*t^14 - 52*t^13 - 140*t^12 - 1800*t^11 + 2488*t^10"
                      " - 42*t^9 + 1170*t^8 - 2792*t^7 + 2488*t^6 - 276*t^5 - 140*t^4 + 136*t^3 + 8*t^2 - 15*t + 3"));
        f.b[1] = P *
                 tp("t^17 + t^16 - 8*t^15 - 72*t^14 + 60*t^13 - 580*t^12 - 952*t^11 - 2680*t^10 + 1542*t^9"
                    " - 250*t^8 - 2232*t^7 - 2680*t^6 - 964*t^5 - 580*t^4 - 264*t^3 - 72*t^2 + t + 1") *
                 tp("t^16 - 8*t^14 + 256*t^13 + 1084*t^12 + 2048*t^11 + 328*t^10 + 2560*t^9 + 1542*t^8"
                    " - 1720*t^6 - 768*t^5 + 60*t^4 - 8*t^2 + 1");
        f.b[2] = -(Q *
                   tp("t^16 - 8*t^14 - 256*t^13 + 1084*t^12 - 2048*t^11 + 328*t^10 - 2560*t^9 + 1542*t^8"
                      " - 1720*t^6 + 768*t^5 + 60*t^4 - 8*t^2 + 1") *
                   tp("t^17 - t^16 - 8*t^15 + 72*t^14 + 60*t^13 + 580*t^12 - 952*t^11 + 2680*t^10 + 1542*t^9"
                      " + 250*t^8 - 2232*t^7 + 2680*t^6 - 964*t^5 + 580*t^4 - 264*t^3 + 72*t^2 + t - 1"));
        f.b[3] = -(P *
                   tp("t^16 + 16*t^15 + 40*t^14 - 96*t^13 - 868*t^12 - 592*t^11 + 1240*t^10 + 4032*t^9"
                      " - 3002*t^8 - 2960*t^7 - 1128*t^6 + 672*t^5 - 100*t^4 - 48*t^3 - 24*t^2 + 1") *
                   tp("t^17 - 3*t^16 - 24*t^15 - 8*t^14 - 52*t^13 + 140*t^12 - 1800*t^11 - 2488*t^10"
                      " - 42*t^9 - 1170*t^8 - 2792*t^7 - 2488*t^6 - 276*t^5 + 140*t^4 + 136*t^3 - 8*t^2 - 15*t - 3"));
        return f;
    }();
    return f;
}

// Generic in the scalar: Rational for evaluation, UniPoly for identities.

/// (mu-nu-nv)(mu-nu+nv) g^2 - (mv+nu-nv)(mv-nu-nv) h^2
template <class T>
T cond1_residual(const T& g, const T& h, const T& m, const T& n, const T& u, const T& v) {
    T mu = m * u;
    T nu = n * u;
    T nv = n * v;
    T mv = m * v;
    T left = T(mu - nu - nv) * T(mu - nu + nv) * T(g * g);
    T right = T(mv + nu - nv) * T(mv - nu - nv) * T(h * h);
    return left - right;
}

/// The equal-sum, equal-product quadruples in terms of (g, h, m, n, r1, r2).
template <class T>
std::pair<std::array<T, 4>, std::array<T, 4>> quadruples(const T& g, const T& h, const T& m, const T& n, const T& r1,
                                                         const T& r2) {
    T g2 = g * g;
    T h2 = h * h;
    T G = g2 * r1 - h2 * r2;
    T d = r1 - r2;
    T mn = m - n;
    std::array<T, 4> x{T(g2 * r1 * n * d), T(-(h2 * r2 * d * mn)), T(r2 * n * G), T(-(r1 * G * mn))};
    std::array<T, 4> y{T(-(g2 * r1 * d * mn)), T(h2 * r2 * n * d), T(r1 * n * G), T(-(r2 * G * mn))};
    return {x, y};
}

/// phi2(r1, r2) with the t-coefficients already fixed.
template <class T>
T phi2(const std::array<T, 5>& coeff, const T& r1, const T& r2) {
    T acc = T(0);
    for (unsigned k = 0; k < 5; ++k)
        acc = acc + coeff[k] * pow(r1, 4 - k) * pow(r2, k);
    return acc;
}

inline std::pair<Rational, Rational> uv_of_t(const Rational& t) {
    return {forms().u.eval(t), forms().v.eval(t)};
}

struct CurvePoint {
    Rational u, v, X, Y;
};

inline bool on_curve(const CurvePoint& p) {
    Rational xu = p.X * p.u;
    Rational xv = p.X * p.v;
    return p.Y * p.Y == (xu - p.v) * (xu + p.v) * (xv - p.u) * (xv + p.u);
}

inline CurvePoint point_of_t(const Rational& t) {
    const Forms& f = forms();
    Rational xd = f.x_den.eval(t);
    Rational yd = f.y_den.eval(t);
    if (xd == 0 || yd == 0)
        throw domain_error("t(t^4 + 6t^2 - 3) vanishes");
    auto [u, v] = uv_of_t(t);
    CurvePoint p{u, v, f.x_num.eval(t) / xd, f.y_num.eval(t) / yd};
    if (!on_curve(p))
        throw consistency_error("point_of_t: point is not on the quartic curve");
    return p;
}

struct Seed {
    Rational g, h, m, n;
    /// phi1 * sqrt(phi2): the square root demanded by the first diagonal condition.
    Rational w;
    Rational r1, r2;
    Quadruple x;
    Quadruple y;
};

inline std::array<Rational, 5> phi2_coefficients(const Rational& t) {
    const Forms& f = forms();
    return {f.phi2[0].eval(t), f.phi2[1].eval(t), f.phi2[2].eval(t), f.phi2[3].eval(t), f.phi2[4].eval(t)};
}

inline Rational phi1(const Rational& t, const Rational& r1, const Rational& r2) {
    const Forms& f = forms();
    return r1 * r2 * (r1 - r2) * f.phi1_t.eval(t) * (r1 * f.phi1_r[0].eval(t) + r2 * f.phi1_r[1].eval(t));
}

inline Seed seed_of_t(const Params& p) {
    const Forms& f = forms();
    const Rational& t = p.t();
    auto fail = [&](const std::string& what) {
        throw consistency_error("scalene seed at t = " + to_string(t) + ": " + what);
    };
    Seed s;
    s.g = f.g.eval(t);
    s.h = f.h.eval(t);
    s.m = f.m.eval(t);
    s.n = f.n.eval(t);
    s.r1 = f.r1.eval(t);
    s.r2 = f.r2.eval(t);
    auto [u, v] = uv_of_t(t);
    if (cond1_residual(s.g, s.h, s.m, s.n, u, v) != 0)
        fail("(g, h, m, n) does not satisfy the curve condition");
    std::optional<Rational> root = rational_square_root(phi2(phi2_coefficients(t), s.r1, s.r2));
    if (!root)
        fail("phi2 is not a square at (r1, r2)");
    s.w = phi1(t, s.r1, s.r2) * *root;

    auto [x, y] = quadruples(s.g, s.h, s.m, s.n, s.r1, s.r2);
    s.x = x;
    s.y = y;
    if (x[0] + x[1] + x[2] + x[3] != y[0] + y[1] + y[2] + y[3])
        fail("sum(x) != sum(y)");
    Rational px = x[0] * x[1] * x[2] * x[3];
    if (px != y[0] * y[1] * y[2] * y[3])
        fail("prod(x) != prod(y)");
    if (!is_rational_square(px))
        fail("prod(x) is not a square");
    if (!is_rational_square(triple_product(x)) || !is_rational_square(triple_product(y)))
        fail("a diagonal condition is not a square");
    return s;
}

inline std::array<Quadruple, 2> closed_form_sides(const Params& p) {
    const Forms& f = forms();
    std::array<Quadruple, 2> out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[0][i] = f.a[i].eval(p.t());
        out[1][i] = f.b[i].eval(p.t());
    }
    return out;
}

/// Closed-form sides divided through by the positive gcd of all eight values,
/// so both quadruples keep their common perimeter.
inline PairRecord build_pair(const Params& p) {
    auto [a, b] = closed_form_sides(p);
    std::array<Rational, 8> all{a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]};
    Rational scale = primitive_scale(all);
    for (std::size_t i = 0; i < 4; ++i) {
        a[i] *= scale;
        b[i] *= scale;
    }

    Seed seed = seed_of_t(p);
    std::optional<Rational> fa = common_factor(a, sides_from_transformed(seed.x));
    std::optional<Rational> fb = common_factor(b, sides_from_transformed(seed.y));
    if (!fa || !fb || *fa != *fb || *fa <= 0)
        throw consistency_error("scalene closed forms disagree with the seed pipeline at t = " + to_string(p.t()));

    PairRecord rec;
    rec.family = "scalene";
    rec.params = {{"t", to_string(p.t())}};
    rec.quad_a = a;
    rec.quad_b = b;
    rec.pipeline_factor = *fa;
    rec.constructible = constructible(a) && constructible(b);
    if (!pairwise_distinct(a) || !pairwise_distinct(b))
        rec.flags.push_back("repeated side within a quadruple");
    if (!rec.constructible) {
        rec.flags.push_back(all_positive(a) && all_positive(b) ? "polygon inequality fails" : "nonpositive side");
        return rec;
    }
    EqualPairReport report = equal_pair_check(QuadSides(a), QuadSides(b));
    if (!report.perimeter_equal || !report.area_equal || !report.a_triple_square || !report.b_triple_square)
        throw consistency_error("scalene pair fails the equal perimeter/area/diagonal conditions");
    if (!report.multisets_distinct)
        rec.flags.push_back("side multisets coincide");
    return rec;
}

/// Constant-term Fermat step on phi2(z, 1) at this t; returns (r1, r2) coprime.
inline std::pair<Integer, Integer> rederive_r_by_fermat(const Params& p) {
    std::array<Rational, 5> c = phi2_coefficients(p.t());
    // phi2(z, 1) = c[0] z^4 + c[1] z^3 + ... + c[4]
    Quartic f(std::array<Rational, 5>{c[4], c[3], c[2], c[1], c[0]});
    Rational z = fermat_root_const(f);
    return {z.get_num(), z.get_den()};
}

}  // namespace bq::scalene
