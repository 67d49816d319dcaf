#pragma once

// JSON and CSV forms. Every rational is a string "p/q" (or "p"); irrational
// roots are null.

#include "bq/pair_record.hpp"
#include "bq/quad.hpp"
#include "bq/search.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>

namespace bq {

using json = nlohmann::ordered_json;

inline json rational_json(const std::optional<Rational>& q) { return q ? json(to_string(*q)) : json(nullptr); }

inline json sides_json(const Quadruple& a) {
    json arr = json::array();
    for (const Rational& s : a)
        arr.push_back(to_string(s));
    return arr;
}

inline json certificate_json(const BrahmaguptaCertificate& c) {
    json sides = json::array();
    for (const Integer& s : c.sides)
        sides.push_back(to_string(s));
    return {{"scale", to_string(c.scale)},
            {"sides", sides},
            {"diagonals", {to_string(c.diagonals[0]), to_string(c.diagonals[1])}},
            {"area", to_string(c.area)},
            {"circumradius", rational_json(c.circumradius)}};
}

/// Metrics record for a quadrilateral; sides only when it is not constructible.
inline json quad_json(const Quadruple& a) {
    json j;
    j["sides"] = sides_json(a);
    if (!constructible(a))
        return j;
    QuadSides q(a);
    QuadMetrics m = metrics(q);
    j["perimeter"] = to_string(m.perimeter);
    j["area"] = rational_json(m.area);
    j["area_sq"] = to_string(m.area_sq);
    j["d1"] = rational_json(m.d1);
    j["d1_sq"] = to_string(m.d1_sq);
    j["d2"] = rational_json(m.d2);
    j["d2_sq"] = to_string(m.d2_sq);
    j["circumradius"] = rational_json(m.circumradius);
    j["circumradius_sq"] = to_string(m.circumradius_sq);
    if (std::optional<BrahmaguptaCertificate> c = scale_to_brahmagupta(q))
        j["certificate"] = certificate_json(*c);
    return j;
}

inline json report_json(const EqualPairReport& r) {
    return {{"perimeter_equal", r.perimeter_equal},
            {"area_equal", r.area_equal},
            {"a_triple_square", r.a_triple_square},
            {"b_triple_square", r.b_triple_square},
            {"multisets_distinct", r.multisets_distinct},
            {"equal_perimeter_and_area", r.equal_perimeter_and_area()},
            {"brahmagupta_pair", r.brahmagupta_pair()}};
}

inline json pair_json(const PairRecord& p) {
    json j;
    j["family"] = p.family;
    json params = json::object();
    for (const auto& [k, v] : p.params)
        params[k] = v;
    j["params"] = params;
    j["quad_a"] = quad_json(p.quad_a);
    j["quad_b"] = quad_json(p.quad_b);
    j["common"] = {{"perimeter", to_string(p.common_perimeter())}, {"area", rational_json(p.common_area())}};
    j["constructible"] = p.constructible;
    j["pipeline_factor"] = rational_json(p.pipeline_factor);
    j["flags"] = p.flags;
    return j;
}

/// Inverse of pair_json. Derived fields (metrics, common values) are
/// recomputed on output, so only the primary data is read back.
inline PairRecord pair_from_json(const json& j) {
    auto read_sides = [](const json& q) {
        const json& s = q.at("sides");
        if (!s.is_array() || s.size() != 4)
            throw domain_error("a quadrilateral needs exactly 4 sides");
        Quadruple a;
        for (std::size_t i = 0; i < 4; ++i)
            a[i] = parse_rational(s[i].get<std::string>());
        return a;
    };
    PairRecord p;
    p.family = j.at("family").get<std::string>();
    for (const auto& [k, v] : j.at("params").items())
        p.params.emplace_back(k, v.get<std::string>());
    p.quad_a = read_sides(j.at("quad_a"));
    p.quad_b = read_sides(j.at("quad_b"));
    p.constructible = j.at("constructible").get<bool>();
    if (j.contains("pipeline_factor") && !j["pipeline_factor"].is_null())
        p.pipeline_factor = parse_rational(j["pipeline_factor"].get<std::string>());
    if (j.contains("flags"))
        p.flags = j["flags"].get<std::vector<std::string>>();
    return p;
}

namespace search {

inline constexpr const char* csv_header = "a1,a2,a3,a4,perimeter,sixteen_K_sq,K,d1_sq,d2_sq";

inline void write_csv_row(std::ostream& os, const Row& r) {
    auto [d1, d2] = r.diagonal_squares();
    os << r.sides[0] << ',' << r.sides[1] << ',' << r.sides[2] << ',' << r.sides[3] << ',' << r.perimeter << ','
       << r.sixteen_k_sq << ',';
    if (r.area)
        os << *r.area;
    os << ',' << to_string(d1) << ',' << to_string(d2) << '\n';
}

}  // namespace search

}  // namespace bq
