#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "hypersym/acceptance.hpp"
#include "hypersym/errors.hpp"
#include "hypersym/lefschetz.hpp"
#include "hypersym/oracles.hpp"
#include "hypersym/symgroup.hpp"

namespace hypersym::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Outcome {
    Json body;
    int code = 0;
};

Json big_json(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Json cyc_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(to_string(r));
    return Json{{"text", c.to_string()}, {"conductor", c.conductor()}, {"coefficients", coeffs}};
}

Json rational_or_null(const Cyclotomic& c) {
    if (!c.is_rational()) return nullptr;
    return to_string(c.to_rational());
}

std::string value_text(const Cyclotomic& c) { return c.is_rational() ? to_string(c.to_rational()) : c.to_string(); }

Json poly_json(const YPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(value_text(c));
    return Json{{"text", p.to_string()}, {"coefficients", coeffs}};
}

Json class_function_json(const ClassFunction& f) {
    Json values = Json::object();
    for (const auto& mu : partitions(f.n())) values[mu.to_string()] = value_text(f(mu));
    return Json{{"n", f.n()}, {"values", values}};
}

Json nonzero_decomposition(const CharacterVerdict& v) {
    Json out = Json::object();
    for (const auto& [lam, m] : v.multiplicities)
        if (m != 0) out[lam.to_string()] = to_string(m);
    return out;
}

Json verdict_json(const CharacterVerdict& v) {
    return Json{{"is_character", v.is_character},
                {"witness", v.witness ? Json(v.witness->to_string()) : Json(nullptr)},
                {"reason", v.reason.empty() ? Json(nullptr) : Json(v.reason)}};
}

Json certificate_json(const std::optional<SingularityCertificate>& c) {
    if (!c) return nullptr;
    return Json{{"conductor", c->conductor()}, {"exponents", c->exponents()}};
}

Spectrum parse_spectrum(const std::string& s) { return Spectrum::parse(s); }

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "none";
    return j.dump();
}

void render_text(const Json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (is_scalar(v)) {
                out << pad << k << ": " << scalar_text(v) << "\n";
            } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
                out << pad << k << ": [";
                bool first = true;
                for (const auto& x : v) {
                    out << (first ? "" : ", ") << scalar_text(x);
                    first = false;
                }
                out << "]\n";
            } else if (v.empty()) {
                out << pad << k << ": " << (v.is_array() ? "[]" : "{}") << "\n";
            } else {
                out << pad << k << ":\n";
                render_text(v, out, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (is_scalar(v)) {
                out << pad << "- " << scalar_text(v) << "\n";
            } else {
                out << pad << "-\n";
                render_text(v, out, indent + 2);
            }
        }
    } else {
        out << pad << scalar_text(j) << "\n";
    }
}

Outcome cmd_trace(std::int64_t d, const std::string& spec, bool formal, bool dump, bool cross, const RunConfig& cfg) {
    const HypersurfaceAction a(d, parse_spectrum(spec));
    const std::int64_t n = a.dimension();
    const Cyclotomic tr = trace_primitive(a);
    const Cyclotomic euler = euler_fixed_locus_trace(a);
    Json j{{"degree", d},
           {"spectrum", a.spectrum.to_string()},
           {"n", n},
           {"value", cyc_json(tr)},
           {"rational", rational_or_null(tr)},
           {"euler_trace", cyc_json(euler)},
           {"agree", tr == euler}};
    if (formal) {
        j["chi_y"] = poly_json(chi_y_hypersurface(a, cfg.window_slack));
        j["chi_y_projective"] = poly_json(chi_y_projective(a.spectrum, cfg.window_slack));
        j["chi_y_primitive"] = n >= 1 ? poly_json(chi_y_primitive(a, cfg.window_slack)) : Json(nullptr);
    }
    if (cross) {
        if (n < 1) throw UsageError("--cross-check needs hypersurface dimension n >= 1");
        const auto cc = primitive_cross_check(a, cfg.window_slack);
        j["cross_check"] = Json{{"identity_route", poly_json(cc.identity_route)},
                                {"direct_route", poly_json(cc.direct_route)},
                                {"printed_route", poly_json(cc.printed_route)},
                                {"direct_agrees", cc.direct_agrees},
                                {"printed_residual", poly_json(cc.printed_residual)}};
    }
    if (dump) {
        Json comps = Json::array();
        for (const auto& z : hypersurface_components(a)) {
            Json bundle = Json::array();
            for (const auto& t : z.normal_bundle.terms())
                bundle.push_back(Json{{"exponent", t.exponent}, {"alpha", t.alpha.to_string()}, {"mult", t.mult}});
            const LaurentSeries s = component_series(z, cfg.window_slack);
            Json contribution = "0";
            if (!s.is_zero() && z.ambient_dim >= s.valuation()) contribution = coeff_x(s, z.ambient_dim).to_string();
            comps.push_back(Json{{"ambient_dim", z.ambient_dim},
                                 {"multidegree", z.multidegree},
                                 {"normal_bundle", bundle},
                                 {"series", s.to_string()},
                                 {"contribution", contribution}});
        }
        j["components"] = comps;
    }
    return {j, tr == euler ? 0 : 1};
}

Outcome cmd_chi_y(std::optional<std::int64_t> d, const std::string& spec, const std::vector<std::int64_t>& dd,
                  std::optional<std::int64_t> ambient, std::int64_t twist, const RunConfig& cfg) {
    if (!dd.empty() || ambient) {
        if (d || !spec.empty()) throw UsageError("use either --degree/--spectrum or --multidegree/--ambient");
        if (!ambient) throw UsageError("--multidegree needs --ambient");
        const YPoly p = chi_y_complete_intersection(dd, *ambient, {{twist, Cyclotomic(1)}}, cfg.window_slack);
        return {Json{{"multidegree", dd},
                     {"ambient", *ambient},
                     {"twist", twist},
                     {"chi_y", poly_json(p)},
                     {"value_at_minus_one", value_text(eval_y(p, Cyclotomic(-1)))}},
                0};
    }
    if (!d || spec.empty()) throw UsageError("chi-y needs --degree and --spectrum, or --multidegree and --ambient");
    const HypersurfaceAction a(*d, parse_spectrum(spec));
    const YPoly x = chi_y_hypersurface(a, cfg.window_slack);
    return {Json{{"degree", *d},
                 {"spectrum", a.spectrum.to_string()},
                 {"chi_y", poly_json(x)},
                 {"chi_y_projective", poly_json(chi_y_projective(a.spectrum, cfg.window_slack))},
                 {"chi_y_primitive",
                  a.dimension() >= 1 ? poly_json(chi_y_primitive(a, cfg.window_slack)) : Json(nullptr)},
                 {"value_at_minus_one", value_text(eval_y(x, Cyclotomic(-1)))}},
            0};
}

Outcome cmd_hodge(std::int64_t n, std::int64_t d, const RunConfig& cfg) {
    Json h = Json::array();
    for (const auto& v : primitive_hodge_numbers(n, d, cfg.window_slack)) h.push_back(big_json(v));
    return {Json{{"n", n}, {"d", d}, {"hodge_numbers", h}, {"primitive_dimension", big_json(primitive_dimension(n, d))}},
            0};
}

Outcome character_report(Json head, const ClassFunction& f) {
    const auto v = is_character(f);
    head["character"] = class_function_json(f);
    head["decomposition"] = nonzero_decomposition(v);
    head["verdict"] = verdict_json(v);
    return {head, 0};
}

Outcome cmd_perm_character(std::int64_t n, std::int64_t d, const std::string& group) {
    const bool small = group == "small";
    const ClassFunction f = small ? type_I_character(n, d) : type_II_character(n, d);
    return character_report(
        Json{{"n", n}, {"d", d}, {"group", "S_" + std::to_string(small ? n + 2 : n + 3)}}, f);
}

Outcome cmd_is_character(std::int64_t n, std::int64_t l, bool sign) {
    const ClassFunction f = sign ? signed_theta_tilde(n, l) : theta_tilde(n, l);
    Outcome o = character_report(Json{{"n", n}, {"l", l}, {"signed", sign}, {"gcd", gcd(n, l)}}, f);
    const auto v = is_character(f);
    const Partition triv(std::vector<std::int64_t>{n});
    o.body["trivial_multiplicity"] =
        v.multiplicities.count(triv) ? Json(to_string(v.multiplicities.at(triv))) : Json(nullptr);
    return o;
}

Outcome cmd_decompose(std::int64_t n, const std::string& values) {
    Json parsed;
    try {
        parsed = Json::parse(values);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("--values is not valid JSON: ") + e.what());
    }
    if (!parsed.is_object()) throw UsageError("--values must be a JSON object mapping partitions to values");
    std::map<Partition, Cyclotomic> vals;
    for (const auto& [k, v] : parsed.items()) {
        Cyclotomic c;
        if (v.is_number_integer())
            c = Cyclotomic(v.get<long>());
        else if (v.is_string())
            c = parse_cyclotomic(v.get<std::string>());
        else
            throw UsageError("value for " + k + " must be an integer or a string");
        vals.emplace(Partition::parse(k), c);
    }
    return character_report(Json{{"n", n}}, ClassFunction(n, std::move(vals)));
}

Outcome cmd_existence(std::int64_t n, std::int64_t d, const RunConfig& cfg) {
    const bool predicate = exists_smooth_symmetric(n, d);
    const bool verdict = is_character(type_I_character(n + 1, d) + type_II_character(n, d)).is_character;
    const auto cert = fermat_section_singular(n, d, cfg.enumeration_cap);
    const bool smooth = !cert.has_value();
    Json discrepancy = nullptr;
    if (predicate != smooth)
        discrepancy = predicate ? "gcd(n+3, d-1) = 1 but the Fermat section is singular"
                                : "gcd(n+3, d-1) > 1 but the Fermat section is smooth";
    return {Json{{"n", n},
                 {"d", d},
                 {"gcd", gcd(n + 3, d - 1)},
                 {"gcd_verdict", predicate},
                 {"character_verdict", verdict},
                 {"fermat_smooth", smooth},
                 {"certificate", certificate_json(cert)},
                 {"agree", predicate == smooth},
                 {"discrepancy", discrepancy}},
            0};
}

Outcome oracle_report(const std::string& claim, Json formula, Json oracle, bool agree, Json certificate = nullptr) {
    return {Json{{"claim", claim},
                 {"formula_value", std::move(formula)},
                 {"oracle_value", std::move(oracle)},
                 {"agree", agree},
                 {"certificate", std::move(certificate)}},
            agree ? 0 : 1};
}

Outcome cmd_oracle_fixed_points(const std::string& mu_text, const std::vector<std::int64_t>& orders,
                                const RunConfig& cfg) {
    const Partition mu = Partition::parse(mu_text);
    const AbelianGroupSpec a(orders);
    const Cyclotomic formula = chi_M(mu.n(), a)(mu);
    const BigInt count = count_fixed_points_M(mu, a, cfg.enumeration_cap);
    return oracle_report("chi_M(" + mu.to_string() + ") for A = " + a.to_string() + " equals d_A * |A|^(m_1 - 1)",
                         value_text(formula), big_json(count), formula == Cyclotomic(Rational(count)));
}

Outcome cmd_oracle_orbits(std::int64_t n, std::int64_t l, const RunConfig& cfg) {
    Json formula = Json::object(), oracle = Json::object();
    bool agree = true;
    for (const auto& [mu, count] : count_orbits_by_shape(n, l, cfg.enumeration_cap)) {
        const BigInt c = c_mu(mu, l);
        formula[mu.to_string()] = big_json(c);
        oracle[mu.to_string()] = big_json(count);
        agree = agree && c == count;
    }
    return oracle_report("orbits of S_" + std::to_string(n) + " on A^n (|A| = " + std::to_string(l) +
                             ") by shape equal c_mu",
                         formula, oracle, agree);
}

Outcome cmd_oracle_euler(std::int64_t d, const std::string& spec) {
    const HypersurfaceAction a(d, parse_spectrum(spec));
    const Cyclotomic closed = trace_primitive(a), euler = euler_fixed_locus_trace(a);
    return oracle_report("primitive trace closed form equals the fixed-locus Euler characteristic route",
                         cyc_json(closed), cyc_json(euler), closed == euler);
}

Outcome cmd_oracle_fermat(std::int64_t n, std::int64_t d, const RunConfig& cfg) {
    const bool predicate = exists_smooth_symmetric(n, d);
    const auto cert = fermat_section_singular(n, d, cfg.enumeration_cap);
    return oracle_report("Fermat section is smooth iff gcd(n+3, d-1) = 1", predicate, !cert.has_value(),
                         predicate == !cert.has_value(), certificate_json(cert));
}

Outcome cmd_verify_all(std::optional<int> criterion, const RunConfig& cfg) {
    const auto results = run_acceptance(cfg, criterion);
    Json arr = Json::array();
    bool ok = true;
    for (const auto& r : results) {
        if (r.status == CriterionStatus::Fail) ok = false;
        arr.push_back(Json{{"id", r.id},
                           {"name", r.name},
                           {"status", status_label(r.status)},
                           {"tolerance", r.tolerance},
                           {"checks", r.checks},
                           {"detail", r.detail},
                           {"notes", r.notes}});
    }
    return {Json{{"criteria", arr}, {"passed", ok}}, ok ? 0 : 1};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Lefschetz traces on hypersurfaces and symmetric-group characters", "hypersym"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "hypersym 1.0");

    RunConfig cfg;
    std::string output = "text";
    app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--window-slack", cfg.window_slack, "extra series terms beyond the exact need")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--cap", cfg.enumeration_cap, "enumeration cap for brute-force oracles")
        ->check(CLI::PositiveNumber);
    app.add_option("--alpha-cap", cfg.alpha_search_cap, "search cap for find_min_alpha")
        ->check(CLI::PositiveNumber);

    std::function<Outcome()> action;

    std::int64_t degree = 0, n = 0, l = 0;
    std::string spectrum;
    bool formal = false, dump = false, cross = false;
    auto* trace = app.add_subcommand("trace", "primitive trace of an automorphism");
    trace->add_option("-d,--degree", degree, "hypersurface degree")->required();
    trace->add_option("-s,--spectrum", spectrum, "eigenvalues, e.g. \"2: 0^3, 1^1\"")->required();
    trace->add_flag("--formal", formal, "also print the chi_y polynomials");
    trace->add_flag("--dump-series", dump, "print each fixed component's series");
    trace->add_flag("--cross-check", cross, "compare with the per-eigenvalue formula");
    trace->callback([&] { action = [&] { return cmd_trace(degree, spectrum, formal, dump, cross, cfg); }; });

    std::optional<std::int64_t> chi_degree, ambient;
    std::vector<std::int64_t> multidegree;
    std::int64_t twist = 0;
    auto* chiy = app.add_subcommand("chi-y", "chi_y of a hypersurface action or a complete intersection");
    chiy->add_option("-d,--degree", chi_degree, "hypersurface degree");
    chiy->add_option("-s,--spectrum", spectrum, "eigenvalues of the invariant lift");
    chiy->add_option("--multidegree", multidegree, "complete intersection degrees, e.g. 2,2")->delimiter(',');
    chiy->add_option("--ambient", ambient, "dimension m of the ambient P^m");
    chiy->add_option("--twist", twist, "integrate h^k instead of 1");
    chiy->callback([&] {
        action = [&] { return cmd_chi_y(chi_degree, spectrum, multidegree, ambient, twist, cfg); };
    });

    auto* hodge = app.add_subcommand("hodge", "primitive Hodge numbers of a smooth hypersurface");
    hodge->add_option("-n", n, "hypersurface dimension")->required();
    hodge->add_option("-d,--degree", degree, "degree")->required();
    hodge->callback([&] { action = [&] { return cmd_hodge(n, degree, cfg); }; });

    std::string group = "small";
    auto* perm = app.add_subcommand("perm-character", "permutation action on primitive cohomology");
    perm->add_option("-n", n, "hypersurface dimension")->required();
    perm->add_option("-d,--degree", degree, "degree")->required();
    perm->add_option("--group", group, "small = S_{n+2} on coordinates, big = S_{n+3} on the hyperplane section")
        ->check(CLI::IsMember({"small", "big"}));
    perm->callback([&] { action = [&] { return cmd_perm_character(n, degree, group); }; });

    bool sign = false;
    auto* isch = app.add_subcommand("is-character", "whether l^{m_1 - 1} is a character of S_n");
    isch->add_option("-n", n, "symmetric group degree")->required();
    isch->add_option("-l", l, "the base l")->required();
    isch->add_flag("--signed", sign, "multiply by the sign character");
    isch->callback([&] { action = [&] { return cmd_is_character(n, l, sign); }; });

    std::string values;
    auto* dec = app.add_subcommand("decompose", "decompose a class function into irreducibles");
    dec->add_option("-n", n, "symmetric group degree")->required();
    dec->add_option("--values", values, "JSON object, e.g. '{\"[2]\": 1, \"[1,1]\": \"3\"}'")->required();
    dec->callback([&] { action = [&] { return cmd_decompose(n, values); }; });

    auto* exist = app.add_subcommand("existence", "gcd criterion vs the Fermat-section oracle");
    exist->add_option("-n", n, "hypersurface dimension")->required();
    exist->add_option("-d,--degree", degree, "degree")->required();
    exist->callback([&] { action = [&] { return cmd_existence(n, degree, cfg); }; });

    auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
    oracle->require_subcommand(1);
    oracle->fallthrough();
    std::string mu_text;
    std::vector<std::int64_t> orders;
    auto* fp = oracle->add_subcommand("fixed-points", "chi_M against enumeration of M");
    fp->add_option("--mu", mu_text, "cycle type, e.g. [2,1]")->required();
    fp->add_option("--group", orders, "cyclic factor orders, e.g. 2,2")->delimiter(',')->required();
    fp->callback([&] { action = [&] { return cmd_oracle_fixed_points(mu_text, orders, cfg); }; });
    auto* orb = oracle->add_subcommand("orbits", "orbit counts by shape against c_mu");
    orb->add_option("-n", n, "tuple length")->required();
    orb->add_option("-l", l, "group order")->required();
    orb->callback([&] { action = [&] { return cmd_oracle_orbits(n, l, cfg); }; });
    auto* eul = oracle->add_subcommand("euler", "closed-form trace against the fixed-locus route");
    eul->add_option("-d,--degree", degree, "degree")->required();
    eul->add_option("-s,--spectrum", spectrum, "eigenvalues of the invariant lift")->required();
    eul->callback([&] { action = [&] { return cmd_oracle_euler(degree, spectrum); }; });
    auto* fer = oracle->add_subcommand("fermat", "vanishing-sum search against the gcd criterion");
    fer->add_option("-n", n, "hypersurface dimension")->required();
    fer->add_option("-d,--degree", degree, "degree")->required();
    fer->callback([&] { action = [&] { return cmd_oracle_fermat(n, degree, cfg); }; });

    std::optional<int> criterion;
    auto* verify = app.add_subcommand("verify-all", "run the acceptance criteria");
    verify->add_option("--criterion", criterion, "run only this criterion (1-10)");
    verify->callback([&] { action = [&] { return cmd_verify_all(criterion, cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    const auto format = output == "json" ? OutputFormat::Json : OutputFormat::Text;
    cfg.output = format;
    try {
        cfg.validate();
        const Outcome o = action();
        if (format == OutputFormat::Json)
            out << o.body.dump(2) << "\n";
        else
            render_text(o.body, out, 0);
        return o.code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        out << Json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        out << Json{{"error", {{"kind", "InternalError"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 1;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"hypersym"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hypersym::cli
