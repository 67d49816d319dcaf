#pragma once

// Fermat's method for rational z making a quartic f(z) a rational square.
//
// With f(0) = e0^2 != 0, pick g(z) = e0 + b1 z + b2 z^2 agreeing with f
// through z^2. Then f - g^2 = z^3 (A + B z), and z* = -A/B gives
// f(z*) = g(z*)^2. The leading-coefficient variant is the same construction
// applied to z^4 f(1/z). Iterating from a known solution z0 means running the
// constant-term construction on f(z + z0), whose constant term f(z0) is a
// square by hypothesis.

#include "bq/numerics.hpp"
#include "bq/poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bq {

/// c0 + c1 z + c2 z^2 + c3 z^3 + c4 z^4, not identically zero.
class Quartic {
public:
    explicit Quartic(const std::array<Rational, 5>& c) : c_(c) {
        if (std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return v == 0; }))
            throw domain_error("quartic is identically zero");
    }
    static Quartic from_poly(const UniPoly& p) { return Quartic(coeffs_of(p)); }

    const std::array<Rational, 5>& coefficients() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }

    UniPoly poly() const { return UniPoly(std::vector<Rational>(c_.begin(), c_.end())); }
    Rational eval(const Rational& z) const { return poly().eval(z); }

    /// z^4 f(1/z)
    Quartic reversed() const { return Quartic(std::array<Rational, 5>{c_[4], c_[3], c_[2], c_[1], c_[0]}); }
    /// f(z + shift)
    Quartic shifted(const Rational& shift) const {
        return from_poly(poly().compose(UniPoly({shift, Rational(1)})));
    }

private:
    static std::array<Rational, 5> coeffs_of(const UniPoly& p) {
        if (p.degree() > 4)
            throw domain_error("polynomial of degree " + std::to_string(p.degree()) + " is not a quartic");
        return {p.coeff(0), p.coeff(1), p.coeff(2), p.coeff(3), p.coeff(4)};
    }

    std::array<Rational, 5> c_;
};

/// "c0,c1,c2,c3,c4"
inline Quartic parse_quartic(std::string_view text) {
    std::vector<Rational> c = parse_rational_list(text);
    if (c.size() != 5)
        throw domain_error("a quartic needs exactly 5 coefficients, got " + std::to_string(c.size()));
    return Quartic(std::array<Rational, 5>{c[0], c[1], c[2], c[3], c[4]});
}

class fermat_error : public domain_error {
public:
    enum class Kind {
        anchor_not_square,  // the anchoring coefficient is zero or not a square
        no_solution,        // B = 0, A != 0: the residual has no finite root
        degenerate,         // the root is z = 0, or f(z*) = 0
        identically_square, // A = B = 0: f = g^2 for the matched quadratic g
    };
    fermat_error(Kind kind, const std::string& what) : domain_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

inline Rational fermat_root_const(const Quartic& f) {
    std::optional<Rational> e0 = rational_square_root(f[0]);
    if (f[0] == 0 || !e0)
        throw fermat_error(fermat_error::Kind::anchor_not_square,
                           "constant term " + to_string(f[0]) + " is not a nonzero rational square");
    Rational b1 = f[1] / (2 * *e0);
    Rational b2 = (f[2] - b1 * b1) / (2 * *e0);
    Rational A = f[3] - 2 * b1 * b2;
    Rational B = f[4] - b2 * b2;
    if (B == 0) {
        if (A == 0)
            throw fermat_error(fermat_error::Kind::identically_square, "quartic is identically a square");
        throw fermat_error(fermat_error::Kind::no_solution, "no Fermat solution from this expansion");
    }
    Rational z = -A / B;
    if (z == 0)
        throw fermat_error(fermat_error::Kind::degenerate, "Fermat expansion only yields z = 0");
    if (f.eval(z) == 0)
        throw fermat_error(fermat_error::Kind::degenerate, "Fermat solution is a root of the quartic");
    return z;
}

inline Rational fermat_root_leading(const Quartic& f) {
    if (f[4] == 0 || !is_rational_square(f[4]))
        throw fermat_error(fermat_error::Kind::anchor_not_square,
                           "leading coefficient " + to_string(f[4]) + " is not a nonzero rational square");
    // w* != 0 is guaranteed by fermat_root_const, and f(1/w*) = rev(w*) / w*^4 != 0.
    Rational w = fermat_root_const(f.reversed());
    return 1 / w;
}

struct FermatRun {
    std::vector<Rational> solutions;
    bool stalled = false;
    bool identically_square = false;
};

/// Up to k distinct nonzero z with f(z) a nonzero rational square. The first
/// comes from the constant-term anchor (leading-term anchor if that fails);
/// each later one from re-anchoring f(z + z_prev) at an earlier solution.
inline FermatRun fermat_iterate(const Quartic& f, std::size_t k) {
    FermatRun run;
    if (poly_square_root(f.poly())) {
        run.identically_square = true;
        for (std::size_t i = 1; i <= k; ++i)
            run.solutions.emplace_back(static_cast<long>(i));
        return run;
    }
    bool const_ok = f[0] != 0 && is_rational_square(f[0]);
    bool lead_ok = f[4] != 0 && is_rational_square(f[4]);
    if (!const_ok && !lead_ok)
        throw domain_error("neither the constant nor the leading coefficient is a nonzero square");
    if (k == 0)
        return run;

    auto known = [&](const Rational& z) {
        return std::find(run.solutions.begin(), run.solutions.end(), z) != run.solutions.end();
    };
    auto accept = [&](const Rational& z) {
        if (z == 0 || known(z))
            return false;
        Rational v = f.eval(z);
        if (v == 0)
            return false;
        if (!is_rational_square(v))
            throw consistency_error("Fermat step produced a non-square value at z = " + to_string(z));
        run.solutions.push_back(z);
        return true;
    };

    std::vector<Rational> starters;
    if (const_ok) {
        try {
            starters.push_back(fermat_root_const(f));
        } catch (const fermat_error&) {
        }
    }
    if (lead_ok) {
        try {
            starters.push_back(fermat_root_leading(f));
        } catch (const fermat_error&) {
        }
    }
    if (starters.empty()) {
        run.stalled = true;
        return run;
    }
    accept(starters.front());
    std::size_t next_starter = 1;

    while (run.solutions.size() < k) {
        bool progressed = false;
        // Most recent solution first.
        for (std::size_t i = run.solutions.size(); i-- > 0 && !progressed;) {
            Rational base = run.solutions[i];
            try {
                Rational step = fermat_root_const(f.shifted(base));
                progressed = accept(base + step);
            } catch (const fermat_error&) {
            }
        }
        while (!progressed && next_starter < starters.size())
            progressed = accept(starters[next_starter++]);
        if (!progressed) {
            run.stalled = true;
            break;
        }
    }
    return run;
}

}  // namespace bq
