#pragma once

#include "bq/quad.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bq {

/// Two side quadruples claimed to share perimeter and area, with provenance.
/// Sides are stored as produced; they are only guaranteed positive and
/// constructible when `constructible` is set.
struct PairRecord {
    std::string family;  // "isosceles", "scalene" or "search"
    std::vector<std::pair<std::string, std::string>> params;
    Quadruple quad_a;
    Quadruple quad_b;
    bool constructible = false;
    /// Ratio between the printed closed-form sides and the sides rebuilt
    /// through the seed pipeline, when both routes were run.
    std::optional<Rational> pipeline_factor;
    /// Non-fatal observations, e.g. coinciding side multisets.
    std::vector<std::string> flags;

    Rational common_perimeter() const { return quad_a[0] + quad_a[1] + quad_a[2] + quad_a[3]; }
    /// Area of the first quadrilateral when it is constructible and rational.
    std::optional<Rational> common_area() const {
        if (!constructible)
            return std::nullopt;
        return rational_square_root(sixteen_area_sq(quad_a) / 16);
    }

    friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

inline bool all_positive(const Quadruple& q) {
    return std::all_of(q.begin(), q.end(), [](const Rational& v) { return v > 0; });
}

inline bool pairwise_distinct(const Quadruple& q) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (q[i] == q[j])
                return false;
    return true;
}

/// c with closed[i] == c * pipeline[i] for all i, or nullopt.
inline std::optional<Rational> common_factor(const Quadruple& closed, const Quadruple& pipeline) {
    std::optional<Rational> c;
    for (std::size_t i = 0; i < 4; ++i) {
        if (pipeline[i] == 0) {
            if (closed[i] != 0)
                return std::nullopt;
            continue;
        }
        Rational r = closed[i] / pipeline[i];
        if (c && *c != r)
            return std::nullopt;
        c = r;
    }
    return c;
}

}  // namespace bq
