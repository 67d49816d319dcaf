#pragma once

// Exact dense univariate and sparse bivariate polynomials over the rationals,
// with square-root extraction and a small text grammar:
//
//     poly   := ['+'|'-'] term (('+'|'-') term)*
//     term   := factor ('*' factor)*
//     factor := rational | var ['^' digits]
//
// e.g. "3/2*x^2*y - x + 1". Whitespace is ignored. There are no parentheses.

#include "bq/numerics.hpp"

#include <cctype>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bq {

class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c) {  // NOLINT: constants promote implicitly
        if (c != 0)
            coeffs_.push_back(c);
    }
    UniPoly(int c) : UniPoly(Rational(c)) {}  // NOLINT
    explicit UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }
    UniPoly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
    static UniPoly monomial(const Rational& c, std::size_t degree) {
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return UniPoly(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational eval(const Rational& z) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }

    /// p(inner(z))
    UniPoly compose(const UniPoly& inner) const {
        UniPoly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * inner + UniPoly(*it);
        return acc;
    }

    /// z^n p(1/z); n defaults to the degree.
    UniPoly reversed(std::optional<std::size_t> n = std::nullopt) const {
        std::size_t width = n.value_or(coeffs_.empty() ? 0 : coeffs_.size() - 1);
        std::vector<Rational> v(width + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i > width) {
                if (coeffs_[i] != 0)
                    throw domain_error("reversal width below polynomial degree");
                continue;
            }
            v[width - i] = coeffs_[i];
        }
        return UniPoly(std::move(v));
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a) {
        for (Rational& c : a.coeffs_)
            c = -c;
        return a;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(v));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Quotient and remainder; throws on division by zero.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero())
            throw domain_error("polynomial division by zero");
        UniPoly rem = a;
        if (a.degree() < b.degree())
            return {UniPoly{}, rem};
        std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
        const Rational lead = b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
            Rational c = rem.leading() / lead;
            quot[shift] = c;
            rem -= monomial(c, shift) * b;
        }
        return {UniPoly(std::move(quot)), rem};
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline UniPoly pow(const UniPoly& base, unsigned e) {
    UniPoly result(1);
    UniPoly b = base;
    while (e) {
        if (e & 1u)
            result *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return result;
}

/// Exact quotient; nullopt when b does not divide a.
inline std::optional<UniPoly> exact_divide(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        return std::nullopt;
    return q;
}

/// Square root by peeling coefficients from the top. The result (when it
/// exists) has positive leading coefficient and is verified by squaring.
inline std::optional<UniPoly> poly_square_root(const UniPoly& p) {
    if (p.is_zero())
        return UniPoly{};
    if (p.degree() % 2 != 0)
        return std::nullopt;
    std::optional<Rational> lead = rational_square_root(p.leading());
    if (!lead)
        return std::nullopt;
    const std::size_t m = static_cast<std::size_t>(p.degree() / 2);
    std::vector<Rational> q(m + 1);
    q[m] = *lead;
    const Rational twice_lead = 2 * *lead;
    for (std::size_t k = m; k-- > 0;) {
        // coefficient of z^(m+k) in q^2 is 2*q_m*q_k + sum_{i+j=m+k, k<i,j<m} q_i q_j
        Rational acc = p.coeff(m + k);
        for (std::size_t i = k + 1; i < m; ++i) {
            std::size_t j = m + k - i;
            if (j > k && j < m)
                acc -= q[i] * q[j];
        }
        q[k] = acc / twice_lead;
    }
    UniPoly root(std::move(q));
    if (root * root != p)
        return std::nullopt;
    return root;
}

// ---------------------------------------------------------------------------

enum class Var { x, y };

class BiPoly {
public:
    using Monomial = std::pair<unsigned, unsigned>;  // (i, j) for x^i y^j

    BiPoly() = default;
    BiPoly(const Rational& c) {  // NOLINT
        if (c != 0)
            terms_[{0, 0}] = c;
    }
    BiPoly(int c) : BiPoly(Rational(c)) {}  // NOLINT

    static BiPoly x() { return term(1, 1, 0); }
    static BiPoly y() { return term(1, 0, 1); }
    static BiPoly term(const Rational& c, unsigned i, unsigned j) {
        BiPoly p;
        if (c != 0)
            p.terms_[{i, j}] = c;
        return p;
    }
    /// p(x) as a bivariate polynomial in the chosen variable.
    static BiPoly from_uni(const UniPoly& p, Var v = Var::x) {
        BiPoly out;
        for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
            const Rational& c = p.coefficients()[i];
            if (c == 0)
                continue;
            unsigned e = static_cast<unsigned>(i);
            out.terms_[v == Var::x ? Monomial{e, 0} : Monomial{0, e}] = c;
        }
        return out;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(unsigned i, unsigned j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree_in(Var v) const {
        int d = -1;
        for (const auto& [m, c] : terms_)
            d = std::max(d, static_cast<int>(v == Var::x ? m.first : m.second));
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_)
            d = std::max(d, static_cast<int>(m.first + m.second));
        return d;
    }
    /// Every term has the same total degree (the zero polynomial counts).
    bool is_homogeneous() const {
        int d = total_degree();
        for (const auto& [m, c] : terms_)
            if (static_cast<int>(m.first + m.second) != d)
                return false;
        return true;
    }

    Rational eval(const Rational& xv, const Rational& yv) const {
        Rational acc = 0;
        for (const auto& [m, c] : terms_)
            acc += c * pow(xv, m.first) * pow(yv, m.second);
        return acc;
    }

    /// Coefficient of v^k, as a polynomial in the other variable.
    UniPoly coefficient_of(Var v, unsigned k) const {
        std::vector<Rational> out;
        for (const auto& [m, c] : terms_) {
            unsigned main = v == Var::x ? m.first : m.second;
            unsigned other = v == Var::x ? m.second : m.first;
            if (main != k)
                continue;
            if (out.size() <= other)
                out.resize(other + 1);
            out[other] = c;
        }
        return UniPoly(std::move(out));
    }

    /// Replaces v by a value; the result is univariate in the other variable.
    UniPoly substitute(Var v, const Rational& value) const { return substitute(v, UniPoly(value)); }

    /// Replaces v by a polynomial in the other variable.
    UniPoly substitute(Var v, const UniPoly& value) const {
        UniPoly acc;
        int d = degree_in(v);
        for (int k = d; k >= 0; --k)
            acc = acc * value + coefficient_of(v, static_cast<unsigned>(k));
        return acc;
    }

    /// p(X(x,y), Y(x,y))
    BiPoly compose(const BiPoly& xs, const BiPoly& ys) const {
        BiPoly acc;
        for (const auto& [m, c] : terms_)
            acc += BiPoly(c) * pow(xs, m.first) * pow(ys, m.second);
        return acc;
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(BiPoly a) {
        for (auto& [m, c] : a.terms_)
            c = -c;
        return a;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
        return out;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    friend BiPoly pow(const BiPoly& base, unsigned e) {
        BiPoly result(1);
        BiPoly b = base;
        while (e) {
            if (e & 1u)
                result *= b;
            e >>= 1;
            if (e)
                b *= b;
        }
        return result;
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    std::map<Monomial, Rational> terms_;
};

/// Square root treating x as the main variable with coefficients in Q[y]:
/// the leading x-coefficient must be a square in Q[y], and each further
/// coefficient of the root comes from an exact division in Q[y]. The result
/// is verified by squaring; its leading coefficient in x has positive
/// leading coefficient in y.
inline std::optional<BiPoly> bipoly_square_root(const BiPoly& p) {
    if (p.is_zero())
        return BiPoly{};
    const int dx = p.degree_in(Var::x);
    if (dx % 2 != 0)
        return std::nullopt;
    const unsigned m = static_cast<unsigned>(dx / 2);

    std::optional<UniPoly> lead = poly_square_root(p.coefficient_of(Var::x, static_cast<unsigned>(dx)));
    if (!lead)
        return std::nullopt;
    std::vector<UniPoly> q(m + 1);
    q[m] = *lead;
    const UniPoly twice_lead = UniPoly(2) * *lead;
    for (unsigned k = m; k-- > 0;) {
        UniPoly acc = p.coefficient_of(Var::x, m + k);
        for (unsigned i = k + 1; i < m; ++i) {
            unsigned j = m + k - i;
            if (j > k && j < m)
                acc -= q[i] * q[j];
        }
        std::optional<UniPoly> qk = exact_divide(acc, twice_lead);
        if (!qk)
            return std::nullopt;
        q[k] = std::move(*qk);
    }
    BiPoly root;
    for (unsigned k = 0; k <= m; ++k)
        root += BiPoly::from_uni(q[k], Var::y) * pow(BiPoly::x(), k);
    if (root * root != p)
        return std::nullopt;
    return root;
}

// ---------------------------------------------------------------------------
// Text form

namespace detail {

inline void write_term(std::ostringstream& os, bool first, const Rational& c,
                       const std::vector<std::pair<std::string_view, unsigned>>& powers) {
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first)
        os << (negative ? "-" : "");
    else
        os << (negative ? " - " : " + ");
    bool has_var = false;
    for (const auto& [name, e] : powers)
        has_var = has_var || e > 0;
    bool wrote = false;
    if (mag != 1 || !has_var) {
        os << to_string(mag);
        wrote = true;
    }
    for (const auto& [name, e] : powers) {
        if (e == 0)
            continue;
        if (wrote)
            os << '*';
        os << name;
        if (e > 1)
            os << '^' << e;
        wrote = true;
    }
}

}  // namespace detail

/// Descending degree.
inline std::string to_string(const UniPoly& p, std::string_view var = "x") {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        detail::write_term(os, first, c, {{var, static_cast<unsigned>(i)}});
        first = false;
    }
    return os.str();
}

/// Descending total degree, then descending power of x.
inline std::string to_string(const BiPoly& p, std::string_view xvar = "x", std::string_view yvar = "y") {
    if (p.is_zero())
        return "0";
    std::vector<std::pair<BiPoly::Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        unsigned da = a.first.first + a.first.second;
        unsigned db = b.first.first + b.first.second;
        if (da != db)
            return da > db;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        detail::write_term(os, first, c, {{xvar, m.first}, {yvar, m.second}});
        first = false;
    }
    return os.str();
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, std::string_view xvar, std::string_view yvar)
        : xvar_(xvar), yvar_(yvar) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                src_.push_back(c);
    }

    BiPoly parse() {
        if (src_.empty())
            fail("empty polynomial");
        BiPoly out;
        bool first = true;
        while (pos_ < src_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            BiPoly t = parse_term();
            out += sign < 0 ? BiPoly(-t) : t;
            first = false;
        }
        return out;
    }

private:
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw domain_error("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    BiPoly parse_term() {
        Rational coeff = 1;
        unsigned ex = 0;
        unsigned ey = 0;
        for (;;) {
            parse_factor(coeff, ex, ey);
            if (peek() != '*')
                break;
            ++pos_;
        }
        return BiPoly::term(coeff, ex, ey);
    }

    void parse_factor(Rational& coeff, unsigned& ex, unsigned& ey) {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            if (peek() == '/') {
                ++pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected denominator");
                while (std::isdigit(static_cast<unsigned char>(peek())))
                    ++pos_;
            }
            if (peek() == '.')
                fail("decimal numbers are not accepted");
            coeff *= parse_rational(std::string_view(src_).substr(start, pos_ - start));
            return;
        }
        std::string_view rest = std::string_view(src_).substr(pos_);
        // Longest variable name first so that "r1" is not read as "r".
        unsigned* target = nullptr;
        std::size_t len = 0;
        if (rest.starts_with(xvar_) && xvar_.size() >= len) {
            target = &ex;
            len = xvar_.size();
        }
        if (!yvar_.empty() && rest.starts_with(yvar_) && yvar_.size() > len) {
            target = &ey;
            len = yvar_.size();
        }
        if (!target)
            fail("unknown symbol");
        pos_ += len;
        unsigned e = 1;
        if (peek() == '^') {
            ++pos_;
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            e = static_cast<unsigned>(std::stoul(src_.substr(start, pos_ - start)));
        }
        *target += e;
    }

    std::string src_;
    std::size_t pos_ = 0;
    std::string_view xvar_;
    std::string_view yvar_;
};

}  // namespace detail

inline BiPoly parse_bipoly(std::string_view text, std::string_view xvar = "x", std::string_view yvar = "y") {
    return detail::PolyParser(text, xvar, yvar).parse();
}

/// Univariate parse. Text mentioning a second variable is an arity error.
inline UniPoly parse_unipoly(std::string_view text, std::string_view var = "x") {
    BiPoly p = parse_bipoly(text, var, var == "y" ? "x" : "y");
    if (p.degree_in(Var::y) > 0)
        throw domain_error("expected a univariate polynomial in " + std::string(var));
    return p.substitute(Var::y, Rational(0));
}

}  // namespace bq
