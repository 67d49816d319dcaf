#pragma once

// bq_lab command-line front end. Kept in a header so tests can drive it
// in-process with string streams.
//
// Exit codes: 0 success, 1 domain error, 2 verification or identity
// failure, 64 usage error.

#include "bq/fermat.hpp"
#include "bq/identities.hpp"
#include "bq/isosceles.hpp"
#include "bq/json.hpp"
#include "bq/scalene.hpp"
#include "bq/search.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace bq::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_failed = 2;
inline constexpr int exit_usage = 64;

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational arg_rational(const std::string& flag, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const domain_error& e) {
        throw usage_error(flag + ": " + e.what());
    }
}

inline Quadruple arg_sides(const std::string& text) {
    std::vector<Rational> v;
    try {
        v = parse_rational_list(text);
    } catch (const domain_error& e) {
        throw usage_error(std::string("--sides: ") + e.what());
    }
    if (v.size() != 4)
        throw usage_error("--sides needs exactly 4 comma-separated values");
    return {v[0], v[1], v[2], v[3]};
}

inline unsigned default_shards() {
    if (const char* env = std::getenv("BQ_LAB_SHARDS")) {
        try {
            unsigned long n = std::stoul(env);
            if (n > 0)
                return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

inline json seed_json(const isosceles::Seed& s) {
    json x = json::array();
    json y = json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        x.push_back(to_string(s.x[i]));
        y.push_back(to_string(s.y[i]));
    }
    return {{"q1", to_string(s.q1)}, {"q2", to_string(s.q2)}, {"p1", to_string(s.p1)},
            {"p2", to_string(s.p2)}, {"x", x},                 {"y", y}};
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and verification of Brahmagupta quadrilateral pairs "
                 "with equal perimeters and equal areas",
                 "bq_lab"};
    app.require_subcommand(1);

    std::string r1_text, r2_text, t_text, quartic_text, poly_text, anchor = "const", section;
    std::vector<std::string> sides_text;
    bool trapezium = false;
    std::size_t extended = 0;
    std::size_t iterations = 0;
    search::Config cfg;
    cfg.worker_shards = default_shards();
    bool any_area = false;
    bool emit_pairs = false;

    CLI::App* fam_a = app.add_subcommand("family-a", "Pair with two equal sides each, from coprime r1, r2");
    fam_a->add_option("--r1", r1_text, "First parameter (integer or p/q)")->required();
    fam_a->add_option("--r2", r2_text, "Second parameter (integer or p/q)")->required();
    fam_a->add_flag("--trapezium", trapezium, "Reorder sides to (1,3,2,4)");
    fam_a->add_option("--extended", extended, "Also emit this many further Fermat seeds");

    CLI::App* fam_b = app.add_subcommand("family-b", "Pair with all sides unequal, from rational t");
    fam_b->add_option("--t", t_text, "Parameter t (integer or p/q)")->required();

    CLI::App* verify = app.add_subcommand("verify", "Metrics of one quadrilateral, or the pair check for two");
    verify->add_option("--sides", sides_text, "Consecutive sides a1,a2,a3,a4 (give twice for a pair)")
        ->required()
        ->expected(1, 2);

    CLI::App* fermat = app.add_subcommand("fermat", "Rational z making a quartic a square");
    auto* q_opt = fermat->add_option("--quartic", quartic_text, "Coefficients c0,c1,c2,c3,c4");
    auto* p_opt = fermat->add_option("--poly", poly_text, "Quartic in x as text, e.g. \"4*x^4 - 16*x^3 + 4\"");
    q_opt->excludes(p_opt);
    fermat->add_option("--anchor", anchor, "const or leading")->check(CLI::IsMember({"const", "leading"}));
    fermat->add_option("--iterations", iterations, "Iterate to this many solutions (0: one anchored step)");

    CLI::App* srch = app.add_subcommand("search", "Brute-force enumeration of integer cyclic quadrilaterals");
    srch->add_option("--max-perimeter", cfg.max_perimeter, "Largest perimeter")->required();
    srch->add_flag("--any-area", any_area, "Do not require integer area");
    srch->add_flag("--square-diagonals", cfg.require_square_diagonals, "Require rational diagonals");
    srch->add_option("--shards", cfg.worker_shards, "Worker threads (default $BQ_LAB_SHARDS or 1)");
    srch->add_flag("--pairs", emit_pairs, "Emit equal perimeter/area pairs as JSON instead of CSV rows");

    CLI::App* ident = app.add_subcommand("identities", "Run a symbolic identity suite");
    ident->add_option("--section", section, "isosceles (alias 2.1) or scalene (alias 2.2)")
        ->required()
        ->check(CLI::IsMember({"isosceles", "scalene", "2.1", "2.2"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        if (fam_a->parsed()) {
            isosceles::Params p = isosceles::Params::from_ratio(arg_rational("--r1", r1_text), arg_rational("--r2", r2_text));
            PairRecord rec = trapezium ? isosceles::trapezium_variant(p) : isosceles::build_pair(p);
            json j = pair_json(rec);
            if (extended > 0) {
                isosceles::ExtendedSeeds ext = isosceles::extended_seeds(p, extended);
                json seeds = json::array();
                for (const isosceles::Seed& s : ext.seeds)
                    seeds.push_back(seed_json(s));
                j["extended_seeds"] = {{"seeds", seeds}, {"stalled", ext.stalled}};
            }
            out << j.dump(2) << "\n";
            return exit_ok;
        }
        if (fam_b->parsed()) {
            scalene::Params p(arg_rational("--t", t_text));
            out << pair_json(scalene::build_pair(p)).dump(2) << "\n";
            return exit_ok;
        }
        if (verify->parsed()) {
            Quadruple a = arg_sides(sides_text[0]);
            if (sides_text.size() == 1) {
                QuadSides q(a);
                if (!constructible(q))
                    metrics(q);  // throws with the violated side
                out << quad_json(a).dump(2) << "\n";
                return exit_ok;
            }
            Quadruple b = arg_sides(sides_text[1]);
            EqualPairReport r = equal_pair_check(QuadSides(a), QuadSides(b));
            json j = {{"quad_a", quad_json(a)}, {"quad_b", quad_json(b)}, {"report", report_json(r)}};
            out << j.dump(2) << "\n";
            return r.equal_perimeter_and_area() ? exit_ok : exit_failed;
        }
        if (fermat->parsed()) {
            if (quartic_text.empty() && poly_text.empty())
                throw usage_error("fermat needs --quartic or --poly");
            Quartic f = !quartic_text.empty() ? [&] {
                try {
                    return parse_quartic(quartic_text);
                } catch (const domain_error& e) {
                    throw usage_error(std::string("--quartic: ") + e.what());
                }
            }()
                                              : Quartic::from_poly(parse_unipoly(poly_text));
            json j;
            json coeffs = json::array();
            for (const Rational& c : f.coefficients())
                coeffs.push_back(to_string(c));
            j["quartic"] = coeffs;
            auto solution = [&](const Rational& z) {
                Rational v = f.eval(z);
                return json{{"z", to_string(z)}, {"value", to_string(v)}, {"witness", rational_json(rational_square_root(v))}};
            };
            json sols = json::array();
            if (iterations > 0) {
                FermatRun run = fermat_iterate(f, iterations);
                for (const Rational& z : run.solutions)
                    sols.push_back(solution(z));
                j["solutions"] = sols;
                j["stalled"] = run.stalled;
                j["identically_square"] = run.identically_square;
            } else {
                try {
                    Rational z = anchor == "const" ? fermat_root_const(f) : fermat_root_leading(f);
                    sols.push_back(solution(z));
                    j["solutions"] = sols;
                    j["identically_square"] = false;
                } catch (const fermat_error& e) {
                    if (e.kind() != fermat_error::Kind::identically_square)
                        throw;
                    j["solutions"] = sols;
                    j["identically_square"] = true;
                }
            }
            j["anchor"] = anchor;
            out << j.dump(2) << "\n";
            return exit_ok;
        }
        if (srch->parsed()) {
            cfg.require_integer_area = !any_area;
            if (emit_pairs) {
                for (const PairRecord& rec : search::find_equal_pairs(cfg))
                    out << pair_json(rec).dump() << "\n";
                return exit_ok;
            }
            out << search::csv_header << "\n";
            search::enumerate(cfg, [&](const search::Row& r) { search::write_csv_row(out, r); });
            return exit_ok;
        }
        if (ident->parsed()) {
            bool iso = section == "isosceles" || section == "2.1";
            std::vector<IdentityResult> results = iso ? isosceles_identities() : scalene_identities();
            bool all = true;
            for (const IdentityResult& r : results) {
                out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "\n";
                all = all && r.passed;
            }
            return all ? exit_ok : exit_failed;
        }
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const consistency_error& e) {
        err << "verification failed: " << e.what() << "\n";
        return exit_failed;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }
    return exit_usage;
}

}  // namespace bq::cli
