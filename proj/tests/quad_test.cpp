#include "bq/quad.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using bq::Integer;
using bq::QuadSides;
using bq::Quadruple;
using bq::Rational;

Quadruple q(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

TEST(Metrics, Rectangle) {
    bq::QuadMetrics m = bq::metrics(QuadSides(q(3, 4, 3, 4)));
    EXPECT_EQ(m.perimeter, 14);
    EXPECT_EQ(m.semiperimeter, 7);
    EXPECT_EQ(*m.area, 12);
    EXPECT_EQ(*m.d1, 5);
    EXPECT_EQ(*m.d2, 5);
    EXPECT_EQ(*m.circumradius, Rational(5, 2));
}

TEST(Metrics, PublishedIsoscelesPair) {
    bq::QuadMetrics a = bq::metrics(QuadSides(q(165, 1635, 1313, 1313)));
    EXPECT_EQ(*a.area, 979200);
    EXPECT_EQ(*a.d1, 1412);
    EXPECT_EQ(*a.d2, Rational(590850, 353));
    EXPECT_EQ(*a.circumradius, Rational(463489, 544));
    bq::QuadMetrics b = bq::metrics(QuadSides(q(413, 1763, 1125, 1125)));
    EXPECT_EQ(*b.area, 979200);
    EXPECT_EQ(*b.d1, 1412);
    EXPECT_EQ(*b.d2, Rational(612000, 353));
    EXPECT_EQ(*b.circumradius, Rational(1765, 2));
}

TEST(Metrics, IrrationalValuesAreAbsent) {
    bq::QuadMetrics m = bq::metrics(QuadSides(q(1, 1, 1, 2)));
    EXPECT_FALSE(m.d1 && m.d2 && m.area);
    EXPECT_GT(m.area_sq, 0);
}

TEST(Constructibility, StrictPolygonInequality) {
    EXPECT_TRUE(bq::constructible(q(1, 1, 1, 2)));
    EXPECT_FALSE(bq::constructible(q(1, 1, 1, 3)));
    EXPECT_FALSE(bq::constructible(q(1, 1, 1, 4)));
    EXPECT_FALSE(bq::constructible(q(0, 1, 1, 1)));
    EXPECT_THROW(QuadSides(q(0, 1, 1, 1)), bq::domain_error);
    try {
        bq::metrics(QuadSides(q(1, 9, 2, 3)));
        FAIL() << "expected non_constructible_error";
    } catch (const bq::non_constructible_error& e) {
        EXPECT_EQ(e.side(), 1u);
    }
}

TEST(Siblings, OrdersAndCount) {
    std::array<QuadSides, 3> s = bq::sibling_orders(QuadSides(q(1, 2, 3, 4)));
    EXPECT_EQ(s[1].sides(), q(1, 3, 2, 4));
    EXPECT_EQ(s[2].sides(), q(1, 2, 4, 3));
    EXPECT_EQ(bq::distinct_order_count(QuadSides(q(1, 2, 3, 4))), 3u);
    EXPECT_EQ(bq::distinct_order_count(QuadSides(q(3, 4, 3, 4))), 2u);
    EXPECT_EQ(bq::distinct_order_count(QuadSides(q(5, 5, 5, 5))), 1u);
}

TEST(Siblings, ShareAreaAndCircumradius) {
    QuadSides base(q(165, 1635, 1313, 1313));
    bq::QuadMetrics m0 = bq::metrics(base);
    for (const QuadSides& s : bq::sibling_orders(base)) {
        bq::QuadMetrics m = bq::metrics(s);
        EXPECT_EQ(m.area_sq, m0.area_sq);
        EXPECT_EQ(m.circumradius_sq, m0.circumradius_sq);
    }
}

TEST(Brahmagupta, MinimalScale) {
    std::optional<bq::BrahmaguptaCertificate> c = bq::scale_to_brahmagupta(QuadSides(q(165, 1635, 1313, 1313)));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->scale, 353);
    EXPECT_EQ(c->diagonals[0], 498436);
    EXPECT_EQ(c->diagonals[1], 590850);
    EXPECT_EQ(c->sides[0], 58245);
    EXPECT_EQ(c->area, Integer(979200) * 353 * 353);

    std::optional<bq::BrahmaguptaCertificate> r = bq::scale_to_brahmagupta(QuadSides(q(3, 4, 3, 4)));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->scale, 1);
    EXPECT_FALSE(bq::scale_to_brahmagupta(QuadSides(q(1, 1, 1, 2))));
}

TEST(Brahmagupta, HalvedRectangle) {
    // Half of (3,4,3,4): lengths need scale 2, which also makes the area 3 * 4 = 12.
    std::optional<bq::BrahmaguptaCertificate> c =
        bq::scale_to_brahmagupta(QuadSides(Rational(3, 2), Rational(2), Rational(3, 2), Rational(2)));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->scale, 2);
    EXPECT_EQ(c->area, 12);
}

class RandomQuads {
public:
    explicit RandomQuads(unsigned seed) : rng_(seed) {}
    QuadSides next() {
        std::uniform_int_distribution<int> side(1, 1000);
        std::uniform_int_distribution<int> den(1, 12);
        for (;;) {
            Quadruple a;
            for (Rational& s : a)
                s = bq::make_rational(side(rng_), den(rng_));
            if (bq::constructible(a))
                return QuadSides(a);
        }
    }
    Rational scale() {
        std::uniform_int_distribution<int> n(1, 60);
        return bq::make_rational(n(rng_), n(rng_));
    }

private:
    std::mt19937 rng_;
};

TEST(Properties, Ptolemy) {
    RandomQuads gen(1);
    for (int i = 0; i < 200; ++i) {
        QuadSides s = gen.next();
        bq::QuadMetrics m = bq::metrics(s);
        Rational rhs = s[0] * s[2] + s[1] * s[3];
        EXPECT_EQ(m.d1_sq * m.d2_sq, rhs * rhs);
    }
}

TEST(Properties, ScalingLaws) {
    RandomQuads gen(2);
    for (int i = 0; i < 200; ++i) {
        QuadSides s = gen.next();
        Rational l = gen.scale();
        bq::QuadMetrics m = bq::metrics(s);
        bq::QuadMetrics ml = bq::metrics(s.scaled(l));
        Rational l2 = l * l;
        EXPECT_EQ(ml.perimeter, l * m.perimeter);
        EXPECT_EQ(ml.area_sq, l2 * l2 * m.area_sq);
        EXPECT_EQ(ml.d1_sq, l2 * m.d1_sq);
        EXPECT_EQ(ml.d2_sq, l2 * m.d2_sq);
        EXPECT_EQ(ml.circumradius_sq, l2 * m.circumradius_sq);
    }
}

TEST(Properties, ParamesvaraAndDiagonals) {
    RandomQuads gen(3);
    for (int i = 0; i < 200; ++i) {
        QuadSides s = gen.next();
        bq::QuadMetrics m = bq::metrics(s);
        std::array<Rational, 3> p = bq::pair_products(s.sides());
        EXPECT_EQ(16 * m.area_sq * m.circumradius_sq, p[0] * p[1] * p[2]);
        // the second sibling's first diagonal is this quadrilateral's third one
        bq::QuadMetrics sib = bq::metrics(bq::sibling_orders(s)[1]);
        EXPECT_EQ(sib.area_sq, m.area_sq);
        EXPECT_EQ(bq::triple_product(s.sides()), p[0] * p[1] * p[2]);
    }
}

TEST(Properties, TransformRoundTrip) {
    RandomQuads gen(4);
    for (int i = 0; i < 200; ++i) {
        QuadSides s = gen.next();
        Quadruple x = bq::transformed_from_sides(s.sides());
        EXPECT_EQ(bq::sides_from_transformed(x), s.sides());
        EXPECT_EQ(x[0] * x[1] * x[2] * x[3], bq::metrics(s).area_sq);
    }
}

TEST(EqualPair, Examples) {
    bq::EqualPairReport r = bq::equal_pair_check(QuadSides(q(165, 1635, 1313, 1313)), QuadSides(q(413, 1763, 1125, 1125)));
    EXPECT_TRUE(r.equal_perimeter_and_area());
    EXPECT_TRUE(r.brahmagupta_pair());

    bq::EqualPairReport s = bq::equal_pair_check(QuadSides(q(2, 2, 9, 9)), QuadSides(q(2, 5, 5, 10)));
    EXPECT_TRUE(s.equal_perimeter_and_area());

    bq::EqualPairReport same = bq::equal_pair_check(QuadSides(q(3, 4, 3, 4)), QuadSides(q(4, 3, 4, 3)));
    EXPECT_TRUE(same.perimeter_equal && same.area_equal);
    EXPECT_FALSE(same.multisets_distinct);
    EXPECT_FALSE(same.equal_perimeter_and_area());

    bq::EqualPairReport off = bq::equal_pair_check(QuadSides(q(165, 1635, 1313, 1313)), QuadSides(q(414, 1763, 1125, 1125)));
    EXPECT_FALSE(off.perimeter_equal);

    EXPECT_THROW(bq::equal_pair_check(QuadSides(q(1, 1, 1, 5)), QuadSides(q(2, 2, 2, 2))), bq::non_constructible_error);
}

}  // namespace
