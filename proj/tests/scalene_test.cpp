#include "bq/scalene.hpp"
#include "bq/search.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using bq::Integer;
using bq::Quadruple;
using bq::Rational;
namespace sc = bq::scalene;

Quadruple qs(const char* a, const char* b, const char* c, const char* d) {
    return {bq::parse_rational(a), bq::parse_rational(b), bq::parse_rational(c), bq::parse_rational(d)};
}

TEST(Params, Validation) {
    EXPECT_THROW(sc::Params(0), bq::domain_error);
    EXPECT_THROW(sc::Params(1), bq::domain_error);
    EXPECT_THROW(sc::Params(-1), bq::domain_error);
    EXPECT_NO_THROW(sc::Params(5));
}

TEST(Curve, UVAndPoint) {
    auto [u, v] = sc::uv_of_t(5);
    EXPECT_EQ(u, 5 * (625 - 50 + 5));
    EXPECT_EQ(v, 5 * 625 - 50 + 1);
    sc::CurvePoint p = sc::point_of_t(5);
    EXPECT_TRUE(sc::on_curve(p));
    EXPECT_EQ(p.X, bq::make_rational(3 * 625 - 150 - 1, 5 * (625 + 150 - 3)));
    p.Y += 1;
    EXPECT_FALSE(sc::on_curve(p));
}

TEST(Curve, PointOnCurveForManyT) {
    for (long n = 2; n <= 30; ++n)
        for (long d : {1L, 3L, 7L})
            EXPECT_TRUE(sc::on_curve(sc::point_of_t(bq::make_rational(n, d))));
}

TEST(Cond1, Examples) {
    EXPECT_EQ(sc::cond1_residual<Rational>(1, 1, 1, 1, 1, 1), 0);
    EXPECT_NE(sc::cond1_residual<Rational>(1, 2, 3, 4, 5, 6), 0);
}

TEST(Seed, AtFive) {
    sc::Seed s = sc::seed_of_t(sc::Params(5));
    // the printed r1(t), r2(t) carry a common factor 2^8 at t = 5
    EXPECT_EQ(s.r1 / s.r2, bq::make_rational(1049861800, 725464821));
    EXPECT_NE(s.w, 0);
    EXPECT_EQ(s.x[0] + s.x[1] + s.x[2] + s.x[3], s.y[0] + s.y[1] + s.y[2] + s.y[3]);
}

TEST(BuildPair, PublishedValues) {
    bq::PairRecord rec = sc::build_pair(sc::Params(5));
    EXPECT_EQ(rec.quad_a, qs("1910470516999149312", "175866555513132912053", "169314770763852594617",
                             "207503184245618672382"));
    EXPECT_EQ(rec.quad_b, qs("154300800756891939924", "50195745087237056747", "121029496193614687182",
                             "229068939001859644511"));
    EXPECT_EQ(rec.common_perimeter(), bq::parse_rational("554594981039603328364"));
    EXPECT_EQ(*rec.common_area(), bq::parse_rational("14509220341219325824870053111347523537900"));
    EXPECT_TRUE(rec.constructible);
    EXPECT_TRUE(rec.flags.empty());

    bq::QuadMetrics a = bq::metrics(bq::QuadSides(rec.quad_a));
    bq::QuadMetrics b = bq::metrics(bq::QuadSides(rec.quad_b));
    EXPECT_EQ(*a.d1, bq::parse_rational("250496054986226007288150003450/1204106621"));
    EXPECT_EQ(*a.d2, bq::parse_rational("43680775787512057583999745775/246823021"));
    EXPECT_EQ(*a.circumradius, bq::parse_rational("1338548290849915267747645/12376"));
    EXPECT_EQ(*b.d1, bq::parse_rational("123610451156476856682515/769"));
    EXPECT_EQ(*b.d2, bq::parse_rational("46331747007719685906339040691/246823021"));
    EXPECT_EQ(*b.circumradius, bq::parse_rational("7098921625266102351020269/61880"));
    EXPECT_TRUE(bq::search::cross_check_family(rec).ok);
}

TEST(BuildPair, PipelineFactor) {
    // build_pair divides the closed forms by the gcd of all eight values
    auto [a, b] = sc::closed_form_sides(sc::Params(5));
    bq::PairRecord rec = sc::build_pair(sc::Params(5));
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(a[i], 524288 * rec.quad_a[i]);
        EXPECT_EQ(b[i], 524288 * rec.quad_b[i]);
    }
    sc::Seed s = sc::seed_of_t(sc::Params(5));
    Quadruple pa = bq::sides_from_transformed(s.x);
    Quadruple pb = bq::sides_from_transformed(s.y);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(rec.quad_a[i], *rec.pipeline_factor * pa[i]);
        EXPECT_EQ(rec.quad_b[i], *rec.pipeline_factor * pb[i]);
    }
}

TEST(Fermat, RederivesR) {
    auto [r1, r2] = sc::rederive_r_by_fermat(sc::Params(5));
    EXPECT_EQ(r1, 1049861800);
    EXPECT_EQ(r2, 725464821);
    for (long n : {3L, 7L, 11L}) {
        sc::Params p(Rational(n, 2));
        auto [a, b] = sc::rederive_r_by_fermat(p);
        sc::Seed s = sc::seed_of_t(p);
        EXPECT_EQ(Rational(a, b), s.r1 / s.r2) << n << "/2";
    }
}

TEST(Window, InteriorTIsConstructibleAndScalene) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> num(4992, 5564);
    for (int i = 0; i < 10; ++i) {
        sc::Params p(bq::make_rational(num(rng), 1000));
        bq::PairRecord rec = sc::build_pair(p);
        EXPECT_TRUE(rec.constructible) << bq::to_string(p.t());
        EXPECT_TRUE(bq::pairwise_distinct(rec.quad_a) && bq::pairwise_distinct(rec.quad_b));
    }
}

TEST(Window, OutsideFails) {
    for (long t : {4L, 6L})
        EXPECT_FALSE(sc::build_pair(sc::Params(t)).constructible) << t;
    EXPECT_FALSE(sc::build_pair(sc::Params(Rational(499, 100))).constructible);
    EXPECT_FALSE(sc::build_pair(sc::Params(Rational(557, 100))).constructible);
}

}  // namespace
