#pragma once

// Brute-force enumeration of integer-sided cyclic quadrilaterals, grouped by
// (perimeter, 16 K^2). Independent of both families; used as ground truth.

#include "bq/numerics.hpp"
#include "bq/pair_record.hpp"
#include "bq/quad.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace bq::search {

struct Config {
    std::int64_t max_perimeter = 300;
    bool require_integer_area = true;
    bool require_square_diagonals = false;
    unsigned worker_shards = 1;
};

/// Perimeters beyond this overflow the 64-bit 16 K^2.
inline constexpr std::int64_t max_supported_perimeter = 50000;

struct GroupKey {
    std::int64_t perimeter;
    std::int64_t sixteen_k_sq;

    friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

/// One sorted quadruple a1 <= a2 <= a3 <= a4.
struct Row {
    std::array<std::int64_t, 4> sides;
    std::int64_t perimeter;
    std::int64_t sixteen_k_sq;
    std::optional<std::int64_t> area;

    GroupKey key() const { return {perimeter, sixteen_k_sq}; }
    Quadruple quadruple() const {
        return {Rational(sides[0]), Rational(sides[1]), Rational(sides[2]), Rational(sides[3])};
    }
    /// Diagonal squares for the sides taken in sorted order.
    std::pair<Rational, Rational> diagonal_squares() const {
        QuadMetrics m = metrics(QuadSides(quadruple()));
        return {m.d1_sq, m.d2_sq};
    }

    friend bool operator==(const Row&, const Row&) = default;
};

namespace detail {

inline unsigned __int128 isqrt_u128(unsigned __int128 n) {
    if (n < 2)
        return n;
    unsigned bits = 0;
    for (unsigned __int128 m = n; m; m >>= 1)
        ++bits;
    unsigned __int128 x = static_cast<unsigned __int128>(1) << ((bits + 1) / 2);
    for (;;) {
        unsigned __int128 y = (x + n / x) >> 1;
        if (y >= x)
            return x;
        x = y;
    }
}

inline std::optional<std::uint64_t> exact_sqrt(unsigned __int128 n) {
    unsigned __int128 r = isqrt_u128(n);
    if (r * r != n)
        return std::nullopt;
    return static_cast<std::uint64_t>(r);
}

inline void validate(const Config& cfg) {
    if (cfg.max_perimeter < 4)
        throw domain_error("max_perimeter must be at least 4");
    if (cfg.max_perimeter > max_supported_perimeter)
        throw domain_error("max_perimeter above " + std::to_string(max_supported_perimeter) + " is not supported");
}

/// Rows with a1 in {first, first + stride, ...}, lexicographic within.
inline void enumerate_shard(const Config& cfg, std::int64_t first, std::int64_t stride,
                            const std::function<void(const Row&)>& sink) {
    const std::int64_t P = cfg.max_perimeter;
    for (std::int64_t a1 = first; 4 * a1 <= P; a1 += stride) {
        for (std::int64_t a2 = a1; a1 + 3 * a2 <= P; ++a2) {
            for (std::int64_t a3 = a2; a1 + a2 + 2 * a3 <= P; ++a3) {
                // a3 <= a4 < a1 + a2 + a3 and a1 + a2 + a3 + a4 <= P
                std::int64_t hi = std::min(a1 + a2 + a3 - 1, P - a1 - a2 - a3);
                for (std::int64_t a4 = a3; a4 <= hi; ++a4) {
                    std::int64_t per = a1 + a2 + a3 + a4;
                    std::int64_t n = (per - 2 * a1) * (per - 2 * a2) * (per - 2 * a3) * (per - 2 * a4);
                    Row row{{a1, a2, a3, a4}, per, n, std::nullopt};
                    if (std::optional<std::uint64_t> r = exact_sqrt(static_cast<unsigned __int128>(n));
                        r && *r % 4 == 0)
                        row.area = static_cast<std::int64_t>(*r / 4);
                    if (cfg.require_integer_area && !row.area)
                        continue;
                    if (cfg.require_square_diagonals) {
                        using u128 = unsigned __int128;
                        u128 t = static_cast<u128>(a1 * a2 + a3 * a4) * static_cast<u128>(a1 * a3 + a2 * a4);
                        // third factor < 2 P^2 / 4; the product stays below 2^128 for supported P
                        t *= static_cast<u128>(a1 * a4 + a2 * a3);
                        if (!exact_sqrt(t))
                            continue;
                    }
                    sink(row);
                }
            }
        }
    }
}

}  // namespace detail

/// Every constructible sorted quadruple with perimeter <= max_perimeter that
/// passes the filters, in lexicographic order. Shards split the a1 range.
inline void enumerate(const Config& cfg, const std::function<void(const Row&)>& sink) {
    detail::validate(cfg);
    unsigned shards = std::max(1u, cfg.worker_shards);
    if (shards == 1) {
        detail::enumerate_shard(cfg, 1, 1, sink);
        return;
    }
    std::vector<std::vector<Row>> parts(shards);
    std::vector<std::thread> workers;
    workers.reserve(shards);
    for (unsigned s = 0; s < shards; ++s)
        workers.emplace_back([&cfg, &parts, s, shards] {
            detail::enumerate_shard(cfg, 1 + s, shards, [&](const Row& r) { parts[s].push_back(r); });
        });
    for (std::thread& w : workers)
        w.join();
    std::vector<Row> merged;
    for (auto& part : parts)
        merged.insert(merged.end(), part.begin(), part.end());
    std::sort(merged.begin(), merged.end(), [](const Row& a, const Row& b) { return a.sides < b.sides; });
    for (const Row& r : merged)
        sink(r);
}

inline std::vector<Row> enumerate(const Config& cfg) {
    std::vector<Row> rows;
    enumerate(cfg, [&](const Row& r) { rows.push_back(r); });
    return rows;
}

/// All pairs of distinct sorted quadruples sharing perimeter and 16 K^2, in
/// order of (perimeter, 16 K^2) and then lexicographically.
inline std::vector<PairRecord> find_equal_pairs(const Config& cfg) {
    std::map<GroupKey, std::vector<Row>> groups;
    enumerate(cfg, [&](const Row& r) { groups[r.key()].push_back(r); });
    std::vector<PairRecord> out;
    for (const auto& [key, rows] : groups) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = i + 1; j < rows.size(); ++j) {
                PairRecord rec;
                rec.family = "search";
                rec.params = {{"max_perimeter", std::to_string(cfg.max_perimeter)},
                              {"sixteen_K_sq", std::to_string(key.sixteen_k_sq)}};
                rec.quad_a = rows[i].quadruple();
                rec.quad_b = rows[j].quadruple();
                rec.constructible = true;
                out.push_back(std::move(rec));
            }
        }
    }
    return out;
}

struct CrossCheckReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string what) {
        ok = false;
        failures.push_back(std::move(what));
    }
};

/// Recomputes every pair condition from the raw sides. Search pairs are only
/// required to share perimeter and area; family pairs must also have
/// rational diagonals throughout.
inline CrossCheckReport cross_check_family(const PairRecord& pair) {
    CrossCheckReport rep;
    for (const auto& [name, q] : {std::pair{"a", pair.quad_a}, std::pair{"b", pair.quad_b}}) {
        if (!all_positive(q))
            rep.fail(std::string("quadruple ") + name + " has a nonpositive side");
        else if (!constructible(q))
            rep.fail(std::string("quadruple ") + name + " violates the polygon inequality");
    }
    if (!rep.ok)
        return rep;
    if (!pair.constructible)
        rep.fail("record is flagged non-constructible");
    const Rational pa = pair.quad_a[0] + pair.quad_a[1] + pair.quad_a[2] + pair.quad_a[3];
    const Rational pb = pair.quad_b[0] + pair.quad_b[1] + pair.quad_b[2] + pair.quad_b[3];
    if (pa != pb)
        rep.fail("perimeter: " + to_string(pa) + " != " + to_string(pb));
    const Rational ka = sixteen_area_sq(pair.quad_a);
    const Rational kb = sixteen_area_sq(pair.quad_b);
    if (ka != kb)
        rep.fail("area: 16K^2 " + to_string(ka) + " != " + to_string(kb));
    Quadruple sa = pair.quad_a;
    Quadruple sb = pair.quad_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa == sb)
        rep.fail("distinctness: the side multisets coincide");
    if (pair.family != "search") {
        if (!is_rational_square(triple_product(pair.quad_a)))
            rep.fail("diagonals of a: triple product is not a square");
        if (!is_rational_square(triple_product(pair.quad_b)))
            rep.fail("diagonals of b: triple product is not a square");
        if (!is_rational_square(ka / 16))
            rep.fail("area: K is irrational");
    }
    return rep;
}

}  // namespace bq::search
