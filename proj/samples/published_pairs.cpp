// Prints both published equal perimeter/area pairs with their metrics.

#include "bq/isosceles.hpp"
#include "bq/json.hpp"
#include "bq/scalene.hpp"

#include <iostream>

int main() {
    bq::PairRecord iso = bq::isosceles::build_pair(bq::isosceles::Params(2, 1));
    bq::PairRecord sca = bq::scalene::build_pair(bq::scalene::Params(5));
    for (const bq::PairRecord& rec : {iso, sca}) {
        std::cout << rec.family << ": perimeter " << bq::to_string(rec.common_perimeter()) << ", area "
                  << bq::to_string(*rec.common_area()) << "\n";
        for (const bq::Quadruple& q : {rec.quad_a, rec.quad_b}) {
            bq::QuadMetrics m = bq::metrics(bq::QuadSides(q));
            std::cout << "  sides";
            for (const bq::Rational& s : q)
                std::cout << ' ' << s;
            std::cout << "\n    diagonals " << *m.d1 << ", " << *m.d2 << "; circumradius " << *m.circumradius << "\n";
        }
    }
}
