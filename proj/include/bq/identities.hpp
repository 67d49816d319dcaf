#pragma once

// Symbolic checks of both families: every claim is reduced to an exact
// polynomial equality (or an exact polynomial square root).

#include "bq/isosceles.hpp"
#include "bq/poly.hpp"
#include "bq/quad.hpp"
#include "bq/scalene.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bq {

struct IdentityResult {
    std::string name;
    bool passed = false;
};

namespace detail {

inline void run_identity(std::vector<IdentityResult>& out, std::string name, const std::function<bool()>& check) {
    bool ok = false;
    try {
        ok = check();
    } catch (const std::exception&) {
        ok = false;
    }
    out.push_back({std::move(name), ok});
}

}  // namespace detail

inline std::vector<IdentityResult> isosceles_identities() {
    using BQ = std::array<BiPoly, 4>;
    const isosceles::ClosedForms& f = isosceles::closed_forms();
    std::vector<IdentityResult> out;

    detail::run_identity(out, "perimeter: sum(a) = sum(b) = perimeter polynomial", [&] {
        BiPoly sa = f.a[0] + f.a[1] + f.a[2] + f.a[3];
        BiPoly sb = f.b[0] + f.b[1] + f.b[2] + f.b[3];
        return sa == f.perimeter && sb == f.perimeter;
    });
    detail::run_identity(out, "area: 16 K^2 of a and of b = 16 * area polynomial^2", [&] {
        BiPoly want = BiPoly(16) * pow(f.area, 2);
        return sixteen_area_sq(f.a) == want && sixteen_area_sq(f.b) == want;
    });
    detail::run_identity(out, "diagonals: both triple products are polynomial squares", [&] {
        return bipoly_square_root(triple_product(f.a)).has_value() &&
               bipoly_square_root(triple_product(f.b)).has_value();
    });
    detail::run_identity(out, "trapezium order: all four diagonals equal the shared diagonal", [&] {
        BiPoly d2 = pow(f.diagonal_shared, 2);
        for (const BQ& q : {f.a, f.b}) {
            BQ t{q[0], q[2], q[1], q[3]};
            std::array<BiPoly, 3> p = pair_products(t);
            // d1^2 = p0 p1 / p2, d2^2 = p1 p2 / p0
            if (p[0] * p[1] != d2 * p[2] || p[1] * p[2] != d2 * p[0])
                return false;
        }
        return true;
    });
    detail::run_identity(out, "diagonals and circumradii in the original order match their closed forms", [&] {
        BiPoly k2 = pow(f.area, 2);
        auto check = [&](const BQ& q, const isosceles::RationalForm& second, const isosceles::RationalForm& radius) {
            std::array<BiPoly, 3> p = pair_products(q);
            BiPoly shared2 = pow(f.diagonal_shared, 2);
            bool d1 = p[0] * p[1] == shared2 * p[2];
            bool d2 = p[1] * p[2] * pow(second.den, 2) == pow(second.num, 2) * p[0];
            // R^2 = p0 p1 p2 / (16 K^2)
            bool r = p[0] * p[1] * p[2] * pow(radius.den, 2) == BiPoly(16) * k2 * pow(radius.num, 2);
            return d1 && d2 && r;
        };
        return check(f.a, f.diagonal_a, f.circumradius_a) && check(f.b, f.diagonal_b, f.circumradius_b);
    });
    detail::run_identity(out, "seed pipeline: sides from (q1, q2, p1, p2) equal half the closed forms", [&] {
        const BiPoly r1 = BiPoly::x();
        const BiPoly r2 = BiPoly::y();
        BiPoly p1 = pow(r1 - r2, 2);
        BiPoly p2 = pow(f.q1 - f.q2, 2);
        BQ x{p1 * pow(f.q1, 2), p1 * pow(f.q2, 2), p2 * r1 * r2, p2 * r1 * r2};
        BQ y{p2 * pow(r1, 2), p2 * pow(r2, 2), p1 * f.q1 * f.q2, p1 * f.q1 * f.q2};
        BQ pa = sides_from_transformed(x);
        BQ pb = sides_from_transformed(y);
        for (std::size_t i = 0; i < 4; ++i)
            if (BiPoly(2) * pa[i] != f.a[i] || BiPoly(2) * pb[i] != f.b[i])
                return false;
        return true;
    });
    detail::run_identity(out, "phi(q1, q2, r1, r2) is a polynomial square at the default (q1, q2)", [&] {
        const BiPoly r1 = BiPoly::x();
        const BiPoly r2 = BiPoly::y();
        BiPoly rr = pow(r1, 2) * pow(r2, 2);
        BiPoly mid = isosceles::rp("r1^4 - 4*r1^3*r2 + 12*r1^2*r2^2 - 4*r1*r2^3 + r2^4");
        const BiPoly& q1 = f.q1;
        const BiPoly& q2 = f.q2;
        BiPoly phi = rr * pow(q1, 4) - BiPoly(4) * rr * pow(q1, 3) * q2 + mid * pow(q1, 2) * pow(q2, 2) -
                     BiPoly(4) * rr * q1 * pow(q2, 3) + rr * pow(q2, 4);
        return bipoly_square_root(phi).has_value();
    });
    return out;
}

inline std::vector<IdentityResult> scalene_identities() {
    using UQ = std::array<UniPoly, 4>;
    const scalene::Forms& f = scalene::forms();
    std::vector<IdentityResult> out;

    detail::run_identity(out, "curve: Y^2 = (Xu-v)(Xu+v)(Xv-u)(Xv+u) identically in t", [&] {
        // With X = xn/xd, Y = yn/yd: yn^2 xd^4 = yd^2 prod(xn u -+ xd v)(xn v -+ xd u)
        UniPoly lhs = pow(f.y_num, 2) * pow(f.x_den, 4);
        UniPoly xu = f.x_num * f.u;
        UniPoly xv = f.x_num * f.v;
        UniPoly dv = f.x_den * f.v;
        UniPoly du = f.x_den * f.u;
        UniPoly rhs = pow(f.y_den, 2) * (xu - dv) * (xu + dv) * (xv - du) * (xv + du);
        return lhs == rhs;
    });
    detail::run_identity(out, "curve condition: cond1 residual of (g, h, m, n, u, v) is the zero polynomial", [&] {
        return scalene::cond1_residual(f.g, f.h, f.m, f.n, f.u, f.v).is_zero();
    });
    detail::run_identity(out, "substitution: m = n(1 - X) and g (Xu-v)(Xu+v) = h Y", [&] {
        bool m_ok = f.m * f.x_den == f.n * (f.x_den - f.x_num);
        // g (xn u - xd v)(xn u + xd v) yd = h yn xd^2
        UniPoly xu = f.x_num * f.u;
        UniPoly dv = f.x_den * f.v;
        bool g_ok = f.g * (xu - dv) * (xu + dv) * f.y_den == f.h * f.y_num * pow(f.x_den, 2);
        return m_ok && g_ok;
    });
    detail::run_identity(out, "phi2(r1(t), r2(t), t) has an exact polynomial square root", [&] {
        return poly_square_root(scalene::phi2(f.phi2, f.r1, f.r2)).has_value();
    });
    auto [x, y] = scalene::quadruples(f.g, f.h, f.m, f.n, f.r1, f.r2);
    detail::run_identity(out, "quadruples: sum(x) = sum(y) and prod(x) = prod(y) identically", [&] {
        UniPoly sx = x[0] + x[1] + x[2] + x[3];
        UniPoly sy = y[0] + y[1] + y[2] + y[3];
        return sx == sy && x[0] * x[1] * x[2] * x[3] == y[0] * y[1] * y[2] * y[3];
    });
    detail::run_identity(out, "quadruples: prod(x) and both triple products are polynomial squares", [&] {
        return poly_square_root(x[0] * x[1] * x[2] * x[3]).has_value() &&
               poly_square_root(triple_product(x)).has_value() && poly_square_root(triple_product(y)).has_value();
    });
    detail::run_identity(out, "seed pipeline: sides from (x, y) equal 8t^2(t^2+1)^2 times the closed forms", [&] {
        UniPoly factor = scalene::tp("8*t^2") * pow(scalene::tp("t^2 + 1"), 2);
        UQ pa = sides_from_transformed(x);
        UQ pb = sides_from_transformed(y);
        for (std::size_t i = 0; i < 4; ++i)
            if (pa[i] != factor * f.a[i] || pb[i] != factor * f.b[i])
                return false;
        return true;
    });
    return out;
}

}  // namespace bq
