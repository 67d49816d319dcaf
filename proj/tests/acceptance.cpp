// Acceptance suite: one PASS/FAIL line per criterion, each with a wall-clock
// limit. Exit status is the number of failed criteria.

#include "bq/identities.hpp"
#include "bq/isosceles.hpp"
#include "bq/scalene.hpp"
#include "bq/search.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

namespace {

using bq::Quadruple;
using bq::Rational;

/// Collects the first failure message of a criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && message_.empty())
            message_ = what;
    }
    bool ok() const { return message_.empty(); }
    const std::string& message() const { return message_; }

private:
    std::string message_;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.ok() && secs > limit_s)
        c.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", secs, limit_s);
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  [" << id << "] " << title << " (" << timing << ")";
    if (!c.ok()) {
        std::cout << ": " << c.message();
        ++failures;
    }
    std::cout << std::endl;
}

Rational r(const char* text) { return bq::parse_rational(text); }

Quadruple quad(const char* a, const char* b, const char* c, const char* d) { return {r(a), r(b), r(c), r(d)}; }

void expect_value(Check& c, const std::optional<Rational>& got, const Rational& want, const std::string& what) {
    c.expect(got && *got == want, what + ": got " + (got ? bq::to_string(*got) : "irrational") + ", want " +
                                      bq::to_string(want));
}

void identity_suite(Check& c, const std::vector<bq::IdentityResult>& results) {
    for (const bq::IdentityResult& res : results)
        c.expect(res.passed, res.name);
    c.expect(!results.empty(), "empty identity suite");
}

}  // namespace

int main() {
    criterion(1, "isosceles family at (2,1) reproduces the published pair", 1.0, [](Check& c) {
        bq::PairRecord rec = bq::isosceles::build_pair(bq::isosceles::Params(2, 1));
        c.expect(rec.quad_a == quad("165", "1635", "1313", "1313"), "first quadruple");
        c.expect(rec.quad_b == quad("413", "1763", "1125", "1125"), "second quadruple");
        c.expect(rec.constructible, "not constructible");
        bq::QuadMetrics a = bq::metrics(bq::QuadSides(rec.quad_a));
        bq::QuadMetrics b = bq::metrics(bq::QuadSides(rec.quad_b));
        c.expect(a.perimeter == 4426 && b.perimeter == 4426, "perimeter");
        expect_value(c, a.area, 979200, "area of a");
        expect_value(c, b.area, 979200, "area of b");
        expect_value(c, a.d1, 1412, "d1 of a");
        expect_value(c, a.d2, r("590850/353"), "d2 of a");
        expect_value(c, b.d1, 1412, "d1 of b");
        expect_value(c, b.d2, r("612000/353"), "d2 of b");
        expect_value(c, a.circumradius, r("463489/544"), "circumradius of a");
        expect_value(c, b.circumradius, r("1765/2"), "circumradius of b");
    });

    criterion(2, "scalene family at t=5 reproduces the published pair", 5.0, [](Check& c) {
        bq::PairRecord rec = bq::scalene::build_pair(bq::scalene::Params(5));
        c.expect(rec.quad_a == quad("1910470516999149312", "175866555513132912053", "169314770763852594617",
                                    "207503184245618672382"),
                 "first quadruple");
        c.expect(rec.quad_b == quad("154300800756891939924", "50195745087237056747", "121029496193614687182",
                                    "229068939001859644511"),
                 "second quadruple");
        c.expect(rec.constructible, "not constructible");
        bq::QuadMetrics a = bq::metrics(bq::QuadSides(rec.quad_a));
        bq::QuadMetrics b = bq::metrics(bq::QuadSides(rec.quad_b));
        c.expect(a.perimeter == r("554594981039603328364") && b.perimeter == a.perimeter, "perimeter");
        Rational area = r("14509220341219325824870053111347523537900");
        expect_value(c, a.area, area, "area of a");
        expect_value(c, b.area, area, "area of b");
        expect_value(c, a.d1, r("250496054986226007288150003450/1204106621"), "d1 of a");
        expect_value(c, a.d2, r("43680775787512057583999745775/246823021"), "d2 of a");
        expect_value(c, a.circumradius, r("1338548290849915267747645/12376"), "circumradius of a");
        expect_value(c, b.d1, r("123610451156476856682515/769"), "d1 of b");
        expect_value(c, b.d2, r("46331747007719685906339040691/246823021"), "d2 of b");
        expect_value(c, b.circumradius, r("7098921625266102351020269/61880"), "circumradius of b");
    });

    criterion(3, "isosceles symbolic identities", 30.0,
              [](Check& c) { identity_suite(c, bq::isosceles_identities()); });

    criterion(4, "scalene symbolic identities", 60.0, [](Check& c) { identity_suite(c, bq::scalene_identities()); });

    criterion(5, "Fermat constant-term step reproduces the isosceles seed ratio", 5.0, [](Check& c) {
        std::vector<std::pair<long, long>> coprime;
        for (long r1 = 2; r1 <= 12; ++r1)
            for (long r2 = 1; r2 < r1; ++r2)
                if (std::gcd(r1, r2) == 1)
                    coprime.emplace_back(r1, r2);
        std::mt19937 rng(2024);
        std::shuffle(coprime.begin(), coprime.end(), rng);
        coprime.resize(20);
        for (auto [n1, n2] : coprime) {
            Rational a = n1;
            Rational b = n2;
            Rational den = bq::pow(a, 4) - 4 * bq::pow(a, 3) * b + 10 * a * a * b * b - 4 * a * bq::pow(b, 3) +
                           bq::pow(b, 4);
            Rational want = 8 * a * a * b * b / den;
            Rational got = bq::fermat_root_const(bq::isosceles::phi_quartic(bq::isosceles::Params(n1, n2)));
            c.expect(got == want, "(" + std::to_string(n1) + "," + std::to_string(n2) + "): got " +
                                      bq::to_string(got) + ", want " + bq::to_string(want));
        }
    });

    criterion(6, "parameter windows: interior samples constructible, outside samples fail", 30.0, [](Check& c) {
        std::mt19937 rng(6);
        // open interval (1.63, 2.11) in steps of 1/10000
        std::uniform_int_distribution<long> ratio(16301, 21099);
        for (int i = 0; i < 50; ++i) {
            bq::isosceles::Params p(ratio(rng), 10000);
            bq::PairRecord rec = bq::isosceles::build_pair(p);
            c.expect(rec.constructible && bq::all_positive(rec.quad_a) && bq::all_positive(rec.quad_b),
                     "ratio " + bq::to_string(p.ratio()) + " not constructible");
        }
        for (auto [n, d] : {std::pair{3L, 2L}, std::pair{11L, 5L}})
            c.expect(!bq::isosceles::build_pair(bq::isosceles::Params(n, d)).constructible,
                     "ratio " + std::to_string(n) + "/" + std::to_string(d) + " should fail");
        // open interval (4.991, 5.565) in steps of 1/1000
        std::uniform_int_distribution<long> tn(4992, 5564);
        for (int i = 0; i < 25; ++i) {
            Rational t = bq::make_rational(tn(rng), 1000);
            bq::PairRecord rec = bq::scalene::build_pair(bq::scalene::Params(t));
            c.expect(rec.constructible && bq::pairwise_distinct(rec.quad_a) && bq::pairwise_distinct(rec.quad_b),
                     "t = " + bq::to_string(t) + " not a constructible scalene pair");
        }
        for (long t : {4L, 6L})
            c.expect(!bq::scalene::build_pair(bq::scalene::Params(t)).constructible,
                     "t = " + std::to_string(t) + " should fail");
    });

    criterion(7, "search oracle: pairs to perimeter 300, count at 20, targeted cross-checks", 300.0, [](Check& c) {
        bq::search::Config cfg;
        cfg.max_perimeter = 300;
        std::vector<bq::PairRecord> pairs = bq::search::find_equal_pairs(cfg);
        c.expect(!pairs.empty(), "no pairs at perimeter 300");
        for (const bq::PairRecord& p : pairs) {
            bq::EqualPairReport rep = bq::equal_pair_check(bq::QuadSides(p.quad_a), bq::QuadSides(p.quad_b));
            c.expect(rep.equal_perimeter_and_area(), "search pair fails equal_pair_check");
        }

        bq::search::Config small;
        small.max_perimeter = 20;
        small.require_integer_area = false;
        std::size_t naive = 0;
        for (long a1 = 1; a1 <= 20; ++a1)
            for (long a2 = a1; a2 <= 20; ++a2)
                for (long a3 = a2; a3 <= 20; ++a3)
                    for (long a4 = a3; a1 + a2 + a3 + a4 <= 20; ++a4)
                        if (a4 < a1 + a2 + a3)
                            ++naive;
        std::size_t fast = bq::search::enumerate(small).size();
        c.expect(fast == naive, "count at 20: " + std::to_string(fast) + " vs naive " + std::to_string(naive));

        for (const bq::PairRecord& rec : {bq::isosceles::build_pair(bq::isosceles::Params(2, 1)),
                                          bq::scalene::build_pair(bq::scalene::Params(5))}) {
            bq::search::CrossCheckReport rep = bq::search::cross_check_family(rec);
            c.expect(rep.ok, rec.family + " cross-check: " + (rep.failures.empty() ? "" : rep.failures.front()));
        }
    });

    criterion(8, "randomized property suites (200 trials each)", 60.0, [](Check& c) {
        std::mt19937 rng(8);
        gmp_randclass big(gmp_randinit_default);
        big.seed(8);
        std::uniform_int_distribution<int> small(-30, 30);
        std::uniform_int_distribution<int> positive(1, 500);
        std::uniform_int_distribution<int> den(1, 12);

        for (int i = 0; i < 200; ++i) {
            bq::Integer n = big.get_z_bits(400);
            bq::Integer s = bq::isqrt_floor(n);
            bq::Integer s1 = s + 1;
            c.expect(s * s <= n && s1 * s1 > n, "isqrt bracket");
            bq::Integer sq = n * n;
            c.expect(bq::perfect_square_root(sq) == n, "integer square root round-trip");
            Rational q = bq::make_rational(big.get_z_bits(100), big.get_z_bits(100) + 1);
            Rational q2 = q * q;
            c.expect(bq::rational_square_root(q2) == q, "rational square root round-trip");
        }

        for (int i = 0; i < 200; ++i) {
            std::vector<Rational> coeffs(1 + static_cast<std::size_t>(i % 9));
            for (Rational& v : coeffs)
                v = bq::make_rational(small(rng), den(rng));
            bq::UniPoly p(coeffs);
            std::optional<bq::UniPoly> root = bq::poly_square_root(p * p);
            c.expect(root && (*root == p || *root == -p), "univariate square root round-trip");
            bq::BiPoly b = bq::BiPoly::from_uni(p, bq::Var::x) * bq::BiPoly::y() +
                           bq::BiPoly::term(bq::make_rational(small(rng), den(rng)), 1, 2);
            std::optional<bq::BiPoly> broot = bq::bipoly_square_root(b * b);
            c.expect(broot && (*broot == b || *broot == -b), "bivariate square root round-trip");
        }

        int checked = 0;
        while (checked < 200) {
            Quadruple a;
            for (Rational& s : a)
                s = bq::make_rational(positive(rng), den(rng));
            if (!bq::constructible(a))
                continue;
            ++checked;
            bq::QuadSides qs(a);
            bq::QuadMetrics m = bq::metrics(qs);
            Rational ptolemy = a[0] * a[2] + a[1] * a[3];
            c.expect(m.d1_sq * m.d2_sq == ptolemy * ptolemy, "Ptolemy");
            Rational l = bq::make_rational(positive(rng), den(rng));
            Rational l2 = l * l;
            bq::QuadMetrics ml = bq::metrics(qs.scaled(l));
            c.expect(ml.perimeter == l * m.perimeter && ml.area_sq == l2 * l2 * m.area_sq &&
                         ml.d1_sq == l2 * m.d1_sq && ml.d2_sq == l2 * m.d2_sq &&
                         ml.circumradius_sq == l2 * m.circumradius_sq,
                     "scaling law");
        }
    });

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures;
}
