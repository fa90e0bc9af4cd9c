#include "fruit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "fruit/curves.hpp"
#include "fruit/density.hpp"
#include "fruit/obstruction.hpp"
#include "fruit/quad_field.hpp"
#include "fruit/search_oracle.hpp"

namespace fruit {

namespace {

using json = nlohmann::ordered_json;

GlobalConfig parse_environment() {
    GlobalConfig cfg;
    if (const char* raw = std::getenv("FRUIT_COST_CAP")) {
        try {
            size_t used = 0;
            unsigned long long value = std::stoull(raw, &used);
            if (used != std::string(raw).size()) throw std::invalid_argument(raw);
            cfg.cost_cap = value;
        } catch (const std::exception&) {
            throw std::domain_error(std::string("FRUIT_COST_CAP is not a valid integer: ") + raw);
        }
    }
    cfg.validate();
    return cfg;
}

json field_json(const Field& f, const PrimeAbove2& p) {
    json j;
    j["field"] = f.to_string();
    j["split_type"] = to_string(p.split_type());
    j["tk_nonempty"] = t_k_nonempty(f);
    if (f.is_rational()) {
        j["basis_kind"] = nullptr;
        j["field_discriminant"] = nullptr;
    } else {
        j["basis_kind"] = to_string(f.quad().basis_kind());
        j["field_discriminant"] = std::to_string(f.quad().discriminant());
    }
    j["canonical_root"] =
        p.split_type() == SplitType::Split ? json(p.canonical_root().get_str()) : json(nullptr);
    j["precision"] = std::to_string(p.precision());
    return j;
}

json hypotheses_json(const HypothesisReport& h) {
    json j;
    j["d_is_odd"] = h.d_is_odd;
    j["d_at_least_2"] = h.d_at_least_2;
    j["r_at_least_2"] = h.r_at_least_2;
    j["r_is_odd"] = h.r_is_odd;
    j["statement_satisfied"] = h.statement_satisfied;
    j["proof_effective"] = h.proof_effective;
    return j;
}

json obstruction_json(const ObstructionReport& rep) {
    json j;
    j["field"] = rep.field.to_string();
    j["a"] = rep.params.a.to_string();
    j["b"] = rep.params.b.to_string();
    j["r"] = std::to_string(rep.params.r);
    j["d"] = std::to_string(rep.params.d);
    j["c"] = rep.params.c.to_string();
    j["tk_nonempty"] = rep.tk_nonempty;
    j["c_mod4"] = rep.c_residue_mod4 ? json(std::to_string(*rep.c_residue_mod4)) : json(nullptr);
    j["locally_obstructed"] = rep.locally_obstructed;
    j["hypotheses"] = hypotheses_json(rep.hypothesis);
    j["verdict"] = to_string(rep.verdict);
    return j;
}

std::string witness_line(const Witness& w) {
    return "x=(" + w.x.to_string() + ") y=(" + w.y.to_string() + ") z=(" + w.z.to_string() + ")";
}

json witness_json(const Witness& w) {
    json j;
    j["x"] = w.x.to_string();
    j["y"] = w.y.to_string();
    j["z"] = w.z.to_string();
    j["even_x"] = w.even_x;
    return j;
}

void warn_on_hypothesis_mismatch(const HypothesisReport& h, unsigned r, unsigned d,
                                 std::ostream& sink) {
    if (h.statement_satisfied != h.proof_effective)
        sink << "warning: statement hypotheses (d odd, r >= 2) and proof-effective hypotheses"
                " (d >= 2, r odd) disagree for r=" << r << ", d=" << d << "\n";
}

struct FieldArgs {
    std::string t = "Q";
    unsigned precision = 16;
    bool as_json = false;
};

struct ObstructArgs {
    std::string field, a, b;
    unsigned long long r = 0, d = 0;
    bool as_json = false;
};

struct SearchArgs {
    std::string field, a;
    std::optional<std::string> c, b;
    std::optional<unsigned long long> r;
    unsigned long long d = 0;
    long long bound = 0;
    bool even_x = false;
    bool as_json = false;
};

struct DensityArgs {
    unsigned long long residue = 0, modulus = 0, limit = 0;
    bool as_json = false;
};

struct CurveArgs {
    std::string field, alpha;
    std::optional<long long> bound;
    bool even_x = false;
    bool torsion = false;
    bool as_json = false;
};

unsigned checked_exponent(unsigned long long value, const char* name) {
    if (value < 1 || value > 1u << 20)
        throw std::domain_error(std::string(name) + " must be a positive integer (at most 2^20)");
    return static_cast<unsigned>(value);
}

int run_field(const FieldArgs& args, std::ostream& out) {
    Field f = Field::parse(args.t);
    unsigned precision = args.precision < 3 ? 3 : args.precision;
    PrimeAbove2 p = PrimeAbove2::above(f, precision);
    if (args.as_json) {
        out << field_json(f, p).dump(2) << "\n";
        return 0;
    }
    out << "field: " << f.to_string() << "\n";
    if (!f.is_rational()) {
        out << "basis_kind: " << to_string(f.quad().basis_kind()) << "\n";
        out << "field_discriminant: " << f.quad().discriminant() << "\n";
    }
    out << "split_type: " << to_string(p.split_type()) << "\n";
    out << "tk_nonempty: " << (t_k_nonempty(f) ? "true" : "false") << "\n";
    if (p.split_type() == SplitType::Split)
        out << "canonical_root (mod 2^" << p.precision() << "): " << p.canonical_root() << "\n";
    return 0;
}

int run_obstruct(const ObstructArgs& args, const GlobalConfig& cfg, std::ostream& out,
                 std::ostream& err) {
    Field f = Field::parse(args.field);
    FruitParams params = FruitParams::create(QuadInt::parse(args.a, f), QuadInt::parse(args.b, f),
                                             checked_exponent(args.r, "r"),
                                             checked_exponent(args.d, "d"));
    ObstructionReport rep = decide(f, params);
    if (args.as_json) {
        warn_on_hypothesis_mismatch(rep.hypothesis, params.r, params.d, err);
        out << obstruction_json(rep).dump(2) << "\n";
        return 0;
    }
    (void)cfg;
    out << "field: " << f.to_string() << "\n";
    out << "a: " << params.a.to_string() << "\n";
    out << "b: " << params.b.to_string() << "\n";
    out << "r: " << params.r << "\n";
    out << "d: " << params.d << "\n";
    out << "c = 2^d b - 3^r: " << params.c.to_string() << "\n";
    out << "tk_nonempty: " << (rep.tk_nonempty ? "true" : "false") << "\n";
    if (rep.c_residue_mod4) out << "c mod P^2: " << *rep.c_residue_mod4 << "\n";
    out << "locally_obstructed: " << (rep.locally_obstructed ? "true" : "false") << "\n";
    out << "hypotheses: statement (d odd, r >= 2): "
        << (rep.hypothesis.statement_satisfied ? "satisfied" : "not satisfied")
        << "; proof-effective (d >= 2, r odd): "
        << (rep.hypothesis.proof_effective ? "satisfied" : "not satisfied") << "\n";
    warn_on_hypothesis_mismatch(rep.hypothesis, params.r, params.d, out);
    out << "verdict: " << to_string(rep.verdict) << "\n";
    return 0;
}

int run_search(const SearchArgs& args, const GlobalConfig& cfg, std::ostream& out,
               std::ostream& err) {
    Field f = Field::parse(args.field);
    QuadInt a = QuadInt::parse(args.a, f);
    const bool has_br = args.b.has_value() || args.r.has_value();
    if (args.c.has_value() == has_br)
        throw std::domain_error("search: give either --c, or both --b and --r");
    QuadInt c = QuadInt::zero(f);
    if (args.c) {
        c = QuadInt::parse(*args.c, f);
    } else {
        if (!args.b || !args.r) throw std::domain_error("search: --b and --r must come together");
        c = compute_c(QuadInt::parse(*args.b, f), checked_exponent(*args.r, "r"),
                      checked_exponent(args.d, "d"));
    }
    unsigned d = checked_exponent(args.d, "d");
    SearchLimits limits{cfg.cost_cap, 0};
    auto witnesses = enumerate_solutions(f, a, c, d, SearchBox{args.bound}, args.even_x, limits);
    if (args.as_json) {
        json j = json::array();
        for (const Witness& w : witnesses) j.push_back(witness_json(w));
        out << j.dump(2) << "\n";
        return 0;
    }
    for (const Witness& w : witnesses) out << witness_line(w) << "\n";
    err << witnesses.size() << " witness(es) in box [-" << args.bound << ", " << args.bound
        << "]^" << (f.is_rational() ? 3 : 6) << (args.even_x ? " with 2 | x" : "") << "\n";
    return 0;
}

int run_density(const DensityArgs& args, const GlobalConfig& cfg, std::ostream& out) {
    ResidueClassQuery query{args.residue, args.modulus, args.limit};
    DensityReport rep = density_report(query, SieveConfig{cfg.sieve_segment});
    BigRat abs_pred_pi2 = rep.asymptotic_constant * 6;  // prediction times pi^2
    if (args.as_json) {
        json j;
        j["r"] = std::to_string(query.residue);
        j["N"] = std::to_string(query.modulus);
        j["X"] = std::to_string(query.limit);
        j["count_class"] = std::to_string(rep.count_class);
        j["count_squarefree"] = std::to_string(rep.count_squarefree);
        j["rel_empirical"] = to_decimal(rep.rel_density_empirical);
        j["rel_predicted"] = rep.predicted_rel_density.get_str();
        j["abs_empirical"] = to_decimal(rep.abs_density_empirical);
        j["abs_predicted_times_pi2"] = abs_pred_pi2.get_str();
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "r: " << query.residue << "  N: " << query.modulus << "  X: " << query.limit << "\n";
    out << "count_class: " << rep.count_class << "\n";
    out << "count_squarefree: " << rep.count_squarefree << "\n";
    out << "rel_empirical: " << to_decimal(rep.rel_density_empirical) << " ("
        << rep.rel_density_empirical.get_str() << ")\n";
    out << "rel_predicted: " << rep.predicted_rel_density.get_str() << "\n";
    out << "abs_empirical: " << to_decimal(rep.abs_density_empirical) << "\n";
    out << "abs_predicted: (" << abs_pred_pi2.get_str() << ")/pi^2\n";
    return 0;
}

int run_curve(const CurveArgs& args, const GlobalConfig& cfg, std::ostream& out,
              std::ostream& err) {
    Field f = Field::parse(args.field);
    QuadInt alpha = QuadInt::parse(args.alpha, f);
    WeierstrassCurve curve = curve_from_alpha(alpha);
    QuadInt paper_poly = paper_discriminant_poly(alpha);
    const bool matches = paper_poly == curve.delta;

    std::vector<CurvePoint> points;
    if (args.bound)
        points = integral_point_search(curve, *args.bound, args.even_x,
                                       SearchLimits{cfg.cost_cap, 0});
    std::vector<TorsionCandidate> torsion;
    if (args.torsion) torsion = torsion_candidates_over_q(curve);

    if (args.as_json) {
        json j;
        j["field"] = f.to_string();
        j["alpha"] = alpha.to_string();
        const std::pair<const char*, const QuadInt*> coeffs[] = {
            {"a1", &curve.a1}, {"a2", &curve.a2}, {"a3", &curve.a3},   {"a4", &curve.a4},
            {"a6", &curve.a6}, {"b2", &curve.b2}, {"b4", &curve.b4},   {"b6", &curve.b6},
            {"b8", &curve.b8}, {"delta", &curve.delta}};
        for (auto [name, value] : coeffs) j[name] = value->to_string();
        j["is_elliptic"] = curve.is_elliptic();
        j["paper_poly_at_alpha"] = paper_poly.to_string();
        j["paper_poly_matches_delta"] = matches;
        j["points"] = json::array();
        for (const CurvePoint& p : points)
            j["points"].push_back({{"x", p.x.to_string()}, {"y", p.y.to_string()},
                                   {"even_x", divisible_by_two(p.x)}});
        j["torsion_candidates"] = json::array();
        for (const TorsionCandidate& t : torsion)
            j["torsion_candidates"].push_back({{"x", t.x.get_str()},
                                               {"y", t.y.get_str()},
                                               {"even_x_numerator", t.even_x_numerator}});
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "field: " << f.to_string() << "\n";
    out << "alpha: " << alpha.to_string() << "\n";
    out << "E_alpha: y^2 + (" << curve.a1.to_string() << ") xy = x^3 + (" << curve.a6.to_string()
        << ")\n";
    out << "b2: " << curve.b2.to_string() << "  b4: " << curve.b4.to_string()
        << "  b6: " << curve.b6.to_string() << "  b8: " << curve.b8.to_string() << "\n";
    out << "delta (standard): " << curve.delta.to_string() << "\n";
    out << "paper polynomial at alpha: " << paper_poly.to_string() << "\n";
    if (!matches)
        out << "note: the quoted degree-8 polynomial disagrees with the standard"
               " discriminant at this alpha\n";
    out << "is_elliptic: " << (curve.is_elliptic() ? "true" : "false") << "\n";
    if (args.bound) {
        out << "integral points in box [-" << *args.bound << ", " << *args.bound << "]"
            << (args.even_x ? " with 2 | x" : "") << ":" << (points.empty() ? " none" : "")
            << "\n";
        for (const CurvePoint& p : points)
            out << "  x=(" << p.x.to_string() << ") y=(" << p.y.to_string() << ")\n";
    }
    if (args.torsion) {
        out << "torsion candidates:" << (torsion.empty() ? " none" : "") << "\n";
        for (const TorsionCandidate& t : torsion)
            out << "  x=" << t.x.get_str() << " y=" << t.y.get_str()
                << (t.even_x_numerator ? "  [2 | Num(x)]" : "") << "\n";
    }
    (void)err;
    return 0;
}

}  // namespace

GlobalConfig GlobalConfig::from_environment() { return parse_environment(); }

void GlobalConfig::validate() const {
    if (cost_cap < 10'000) throw std::domain_error("cost cap must be at least 10^4");
    if (sieve_segment == 0 || (sieve_segment & (sieve_segment - 1)) != 0)
        throw std::domain_error("sieve segment size must be a power of two");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verification toolkit for the generalized fruit Diophantine equation"
                 " a x^d - y^2 - z^2 + xyz - c = 0 over Q and Q(sqrt(t))",
                 "fruit"};
    app.require_subcommand(1);

    FieldArgs field_args;
    auto* field_cmd = app.add_subcommand("field", "Splitting of 2 and T_K over Q(sqrt(t))");
    field_cmd->add_option("--t", field_args.t, "Field parameter: square-free t or Q")->required();
    field_cmd->add_option("--precision", field_args.precision, "Root precision in bits");
    field_cmd->add_flag("--json", field_args.as_json, "Emit JSON");

    ObstructArgs obstruct_args;
    auto* obstruct_cmd =
        app.add_subcommand("obstruct", "Decide the local obstruction mod P^2 with 2 | x");
    obstruct_cmd->add_option("--field", obstruct_args.field, "Field parameter: t or Q")->required();
    obstruct_cmd->add_option("--a", obstruct_args.a, "Coefficient a as \"u,v\"")->required();
    obstruct_cmd->add_option("--b", obstruct_args.b, "Coefficient b as \"u,v\"")->required();
    obstruct_cmd->add_option("--r", obstruct_args.r, "Exponent r >= 1")->required();
    obstruct_cmd->add_option("--d", obstruct_args.d, "Exponent d >= 1")->required();
    obstruct_cmd->add_flag("--json", obstruct_args.as_json, "Emit JSON");

    SearchArgs search_args;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive box search for witnesses");
    search_cmd->add_option("--field", search_args.field, "Field parameter: t or Q")->required();
    search_cmd->add_option("--a", search_args.a, "Coefficient a as \"u,v\"")->required();
    search_cmd->add_option("--c", search_args.c, "Constant c as \"u,v\"");
    search_cmd->add_option("--b", search_args.b, "Derive c = 2^d b - 3^r from this b");
    search_cmd->add_option("--r", search_args.r, "Exponent r for the derived c");
    search_cmd->add_option("--d", search_args.d, "Exponent d >= 1")->required();
    search_cmd->add_option("--bound", search_args.bound, "Coordinate bound B >= 1")->required();
    search_cmd->add_flag("--even-x", search_args.even_x, "Restrict to 2 | x");
    search_cmd->add_flag("--json", search_args.as_json, "Emit JSON");

    DensityArgs density_args;
    auto* density_cmd =
        app.add_subcommand("density", "Square-free density in a residue class t = r (mod N)");
    density_cmd->add_option("--residue", density_args.residue, "Residue r")->required();
    density_cmd->add_option("--modulus", density_args.modulus, "Modulus N")->required();
    density_cmd->add_option("--limit", density_args.limit, "Sieve limit X")->required();
    density_cmd->add_flag("--json", density_args.as_json, "Emit JSON");

    CurveArgs curve_args;
    auto* curve_cmd = app.add_subcommand("curve", "Audit E_alpha and search its points");
    curve_cmd->add_option("--field", curve_args.field, "Field parameter: t or Q")->required();
    curve_cmd->add_option("--alpha", curve_args.alpha, "alpha as \"u,v\"")->required();
    curve_cmd->add_option("--bound", curve_args.bound, "Point-search coordinate bound");
    curve_cmd->add_flag("--even-x", curve_args.even_x, "Restrict the point search to 2 | x");
    curve_cmd->add_flag("--torsion", curve_args.torsion, "Enumerate torsion candidates (Q only)");
    curve_cmd->add_flag("--json", curve_args.as_json, "Emit JSON");

    std::vector<const char*> argv;
    argv.push_back("fruit");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        GlobalConfig cfg = GlobalConfig::from_environment();
        if (field_cmd->parsed()) return run_field(field_args, out);
        if (obstruct_cmd->parsed()) return run_obstruct(obstruct_args, cfg, out, err);
        if (search_cmd->parsed()) return run_search(search_args, cfg, out, err);
        if (density_cmd->parsed()) return run_density(density_args, cfg, out);
        if (curve_cmd->parsed()) return run_curve(curve_args, cfg, out, err);
        err << "error: no subcommand\n";
        return 1;
    } catch (const CostCapError& e) {
        err << "refused: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace fruit
