#include "diffspec/scenario.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "diffspec/errors.hpp"
#include "diffspec/monte_carlo.hpp"
#include "diffspec/poly_text.hpp"
#include "diffspec/verification.hpp"

namespace diffspec {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

void require_fields(const json& obj, const std::string& where, const std::set<std::string>& required,
                    const std::set<std::string>& optional = {}) {
    if (!obj.is_object()) throw ScenarioError(where + ": expected a JSON object");
    for (const auto& [key, value] : obj.items()) {
        if (!required.contains(key) && !optional.contains(key))
            throw ScenarioError(where + ": unknown field '" + key + "'");
    }
    for (const std::string& key : required) {
        if (!obj.contains(key)) throw ScenarioError(where + ": missing field '" + key + "'");
    }
}

std::string get_string(const json& obj, const std::string& key, const std::string& where) {
    const json& v = obj.at(key);
    if (!v.is_string()) throw ScenarioError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

Rational get_rational(const json& obj, const std::string& key, const std::string& where) {
    try {
        return Rational::from_string(get_string(obj, key, where));
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(where + ": field '" + key + "': " + e.what());
    }
}

std::int64_t get_int(const json& obj, const std::string& key, const std::string& where) {
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw ScenarioError(where + ": field '" + key + "' must be an integer");
    return v.get<std::int64_t>();
}

CoordinateStructure parse_coordinate(const json& entry, const std::string& where) {
    require_fields(entry, where, {"type"}, {"nu", "alpha", "beta"});
    const std::string type = get_string(entry, "type", where);
    try {
        if (type == "ou") {
            require_fields(entry, where, {"type"});
            return CoordinateStructure::ornstein_uhlenbeck();
        }
        if (type == "laguerre") {
            require_fields(entry, where, {"type", "nu"});
            return CoordinateStructure::laguerre(get_rational(entry, "nu", where));
        }
        if (type == "jacobi") {
            require_fields(entry, where, {"type", "alpha", "beta"});
            return CoordinateStructure::jacobi(get_rational(entry, "alpha", where), get_rational(entry, "beta", where));
        }
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(where + ": " + e.what());
    }
    throw ScenarioError(where + ": unknown coordinate type '" + type + "'");
}

ProductStructure parse_structure(const json& scenario, const std::string& where) {
    const json& v = scenario.at("structure");
    if (!v.is_array() || v.empty()) throw ScenarioError(where + ": 'structure' must be a non-empty array");
    std::vector<CoordinateStructure> coords;
    coords.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        coords.push_back(parse_coordinate(v[i], where + ".structure[" + std::to_string(i) + "]"));
    return ProductStructure(std::move(coords));
}

TargetLaw parse_target(const json& scenario, const std::string& where) {
    const json& entry = scenario.at("target");
    require_fields(entry, where + ".target", {"type"}, {"nu", "alpha", "beta"});
    const std::string type = get_string(entry, "type", where + ".target");
    try {
        if (type == "gaussian") {
            require_fields(entry, where + ".target", {"type"});
            return TargetLaw::gaussian();
        }
        if (type == "gamma") {
            require_fields(entry, where + ".target", {"type", "nu"});
            return TargetLaw::gamma(get_rational(entry, "nu", where + ".target"));
        }
        if (type == "beta") {
            require_fields(entry, where + ".target", {"type", "alpha", "beta"});
            return TargetLaw::beta(get_rational(entry, "alpha", where + ".target"),
                                   get_rational(entry, "beta", where + ".target"));
        }
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(where + ".target: " + e.what());
    }
    throw ScenarioError(where + ".target: unknown target type '" + type + "'");
}

MultiPoly parse_polynomial_field(const json& scenario, int dim, const std::string& where) {
    const std::string text = get_string(scenario, "polynomial", where);
    try {
        return parse_poly(text, dim);
    } catch (const PolyParseError& e) {
        throw ScenarioError(where + ".polynomial: " + e.what());
    }
}

json target_to_json(const TargetLaw& t) {
    json out;
    switch (t.kind()) {
        case TargetKind::Gaussian: out["type"] = "gaussian"; break;
        case TargetKind::Gamma:
            out["type"] = "gamma";
            out["nu"] = t.nu().str();
            break;
        case TargetKind::Beta:
            out["type"] = "beta";
            out["alpha"] = t.alpha().str();
            out["beta"] = t.beta().str();
            break;
    }
    return out;
}

json rationals_to_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const Rational& v : values) out.push_back(v.str());
    return out;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write " + tmp.string());
        os << content;
        if (!os.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void write_json_report(const std::filesystem::path& dir, const std::string& name, const json& body) {
    atomic_write(dir / (name + ".json"), body.dump(2) + "\n");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---- commands ----------------------------------------------------------

int cmd_verify(const json& scenario, const RunOptions& opt, const std::filesystem::path& out_dir) {
    require_fields(scenario, "verify", {"schema_version", "command"},
                   {"seed", "identity_cases", "reconstruction_cases", "pair_cases"});
    VerifyOptions vo;
    if (scenario.contains("seed")) vo.seed = static_cast<std::uint64_t>(get_int(scenario, "seed", "verify"));
    if (opt.seed_override) vo.seed = *opt.seed_override;
    if (scenario.contains("identity_cases")) vo.identity_cases = static_cast<int>(get_int(scenario, "identity_cases", "verify"));
    if (scenario.contains("reconstruction_cases"))
        vo.reconstruction_cases = static_cast<int>(get_int(scenario, "reconstruction_cases", "verify"));
    if (scenario.contains("pair_cases")) vo.pair_cases = static_cast<int>(get_int(scenario, "pair_cases", "verify"));
    if (vo.identity_cases < 1 || vo.reconstruction_cases < 1 || vo.pair_cases < 1)
        throw ScenarioError("verify: case counts must be positive");

    const VerifyReport report = run_verification(vo);
    json body;
    body["schema_version"] = kSchemaVersion;
    body["seed"] = vo.seed;
    body["all_passed"] = report.all_passed;
    body["checks"] = json::array();
    for (const CheckResult& c : report.checks) {
        json entry{{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}};
        if (!c.counterexample.empty()) entry["counterexample"] = c.counterexample;
        if (!c.note.empty()) entry["note"] = c.note;
        body["checks"].push_back(std::move(entry));
    }
    body["known_discrepancies"] = json::array();
    for (const Discrepancy& d : report.discrepancies) {
        json entry{{"id", d.id}, {"description", d.description}, {"computed", json::object()}};
        for (const auto& [key, value] : d.computed) entry["computed"][key] = value;
        body["known_discrepancies"].push_back(std::move(entry));
    }
    write_json_report(out_dir, "verify", body);
    return report.all_passed ? 0 : 1;
}

int cmd_chaos_check(const json& scenario, const std::filesystem::path& out_dir) {
    require_fields(scenario, "chaos-check", {"schema_version", "command", "structure", "polynomial"});
    const ProductStructure s = parse_structure(scenario, "chaos-check");
    const MultiPoly x = parse_polynomial_field(scenario, s.dim(), "chaos-check");
    const ChaosReport report = chaos_check(s, x);
    json body;
    body["schema_version"] = kSchemaVersion;
    body["structure"] = s.describe();
    body["polynomial"] = print_poly(x);
    body["eigenvalue"] = report.eigenvalue ? json(report.eigenvalue->str()) : json(nullptr);
    body["support"] = rationals_to_json(report.square_support);
    body["max_support"] = report.max_support.str();
    body["threshold"] = report.threshold.str();
    body["chaotic"] = report.is_chaotic;
    if (!report.reason.empty()) body["reason"] = report.reason;
    write_json_report(out_dir, "chaos_check", body);
    return 0;
}

int cmd_bounds(const json& scenario, const RunOptions& opt, const std::filesystem::path& out_dir) {
    require_fields(scenario, "bounds", {"schema_version", "command", "structure", "polynomial", "target"});
    const ProductStructure s = parse_structure(scenario, "bounds");
    const MultiPoly x = parse_polynomial_field(scenario, s.dim(), "bounds");
    const TargetLaw t = parse_target(scenario, "bounds");
    const CriterionResult r = fourth_moment_bound(s, x, t);

    json body;
    body["schema_version"] = kSchemaVersion;
    body["structure"] = s.describe();
    body["polynomial"] = print_poly(x);
    body["target"] = target_to_json(t);
    body["lambda"] = r.lambda.str();
    body["distance"] = r.distance.str();
    body["statistic"] = r.statistic.str();
    body["bound"] = r.bound.str();
    if (r.improved_distance) body["improved_distance"] = r.improved_distance->str();
    if (r.improved_bound) body["improved_bound"] = r.improved_bound->str();
    body["spectral_condition_ok"] = r.spectral_condition_ok;
    body["square_support"] = rationals_to_json(r.square_support);
    body["support_threshold"] = r.support_threshold.str();
    if (opt.format == "json" || opt.format == "both") write_json_report(out_dir, "bounds", body);
    if (opt.format == "csv" || opt.format == "both") {
        std::ostringstream csv;
        csv << "target,lambda,distance,statistic,bound,improved_distance,improved_bound,spectral_condition_ok\n";
        csv << t.describe() << ',' << r.lambda.str() << ',' << r.distance.str() << ',' << r.statistic.str() << ','
            << r.bound.str() << ',' << (r.improved_distance ? r.improved_distance->str() : "") << ','
            << (r.improved_bound ? r.improved_bound->str() : "") << ',' << (r.spectral_condition_ok ? "true" : "false")
            << '\n';
        atomic_write(out_dir / "bounds.csv", csv.str());
    }
    return 0;
}

int cmd_criterion(const json& scenario, const std::filesystem::path& out_dir) {
    require_fields(scenario, "criterion", {"schema_version", "command", "target"},
                   {"a", "moments", "structure", "polynomial"});
    const TargetLaw t = parse_target(scenario, "criterion");
    const Rational a = scenario.contains("a") ? get_rational(scenario, "a", "criterion") : t.canonical_a();

    std::map<int, Rational> moments;
    if (scenario.contains("moments")) {
        if (scenario.contains("structure") || scenario.contains("polynomial"))
            throw ScenarioError("criterion: give either 'moments' or 'structure'+'polynomial', not both");
        const json& m = scenario.at("moments");
        if (!m.is_object()) throw ScenarioError("criterion: 'moments' must be an object");
        for (const auto& [key, value] : m.items()) {
            int order = 0;
            try {
                order = std::stoi(key);
            } catch (...) {
                throw ScenarioError("criterion: moment key '" + key + "' is not an integer");
            }
            if (order < 1 || order > 4) throw ScenarioError("criterion: moment orders must be 1..4");
            if (!value.is_string()) throw ScenarioError("criterion: moment values must be rational strings");
            moments[order] = Rational::from_string(value.get<std::string>());
        }
    } else {
        if (!scenario.contains("structure") || !scenario.contains("polynomial"))
            throw ScenarioError("criterion: needs 'moments' or 'structure'+'polynomial'");
        const ProductStructure s = parse_structure(scenario, "criterion");
        const MultiPoly x = parse_polynomial_field(scenario, s.dim(), "criterion");
        moments = shifted_moments_of(s, x, t.mean());
    }

    const Rational statistic = moment_statistic(t, a, moments);
    const StatisticComparison cmp = printed_statistic_comparison(t, moments);

    json body;
    body["schema_version"] = kSchemaVersion;
    body["target"] = target_to_json(t);
    body["a"] = a.str();
    body["moments"] = json::object();
    for (const auto& [order, value] : moments) body["moments"][std::to_string(order)] = value.str();
    body["statistic"] = statistic.str();
    body["comparison"] = {{"quadratic_route", cmp.quadratic_route.str()},
                          {"printed", cmp.printed.str()},
                          {"expected_ratio", cmp.expected_ratio.str()},
                          {"agree", cmp.agree}};
    write_json_report(out_dir, "criterion", body);
    return 0;
}

Law parse_law(const json& entry, const std::string& where) {
    require_fields(entry, where, {"type"}, {"nu", "alpha", "beta"});
    const std::string type = get_string(entry, "type", where);
    try {
        if (type == "gaussian") {
            require_fields(entry, where, {"type"});
            return Law::gaussian();
        }
        if (type == "gamma") {
            require_fields(entry, where, {"type", "nu"});
            return Law::gamma(get_rational(entry, "nu", where).to_double());
        }
        if (type == "centered-gamma") {
            require_fields(entry, where, {"type", "nu"});
            return Law::centered_gamma(get_rational(entry, "nu", where).to_double());
        }
        if (type == "beta") {
            require_fields(entry, where, {"type", "alpha", "beta"});
            return Law::beta_law(get_rational(entry, "alpha", where).to_double(),
                                 get_rational(entry, "beta", where).to_double());
        }
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(where + ": " + e.what());
    }
    throw ScenarioError(where + ": unknown law type '" + type + "'");
}

HomogeneousSumSpec parse_family(const json& entry, const std::string& where) {
    require_fields(entry, where, {"name"}, {"indices", "dimension", "terms", "polynomial"});
    const std::string name = get_string(entry, "name", where);
    try {
        if (name == "paired-product") {
            require_fields(entry, where, {"name"});
            return HomogeneousSumSpec::paired_product();
        }
        if (name == "single-term") {
            require_fields(entry, where, {"name", "indices"});
            const json& idx = entry.at("indices");
            if (!idx.is_array() || idx.empty()) throw ScenarioError(where + ": 'indices' must be a non-empty array");
            std::vector<int> indices;
            for (const json& v : idx) {
                if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
                    throw ScenarioError(where + ": indices are 1-based positive integers");
                indices.push_back(static_cast<int>(v.get<std::int64_t>()) - 1);
            }
            return HomogeneousSumSpec::single_term(std::move(indices));
        }
        if (name == "table") {
            require_fields(entry, where, {"name", "dimension", "terms"});
            const int dim = static_cast<int>(get_int(entry, "dimension", where));
            const json& terms = entry.at("terms");
            if (!terms.is_array() || terms.empty()) throw ScenarioError(where + ": 'terms' must be a non-empty array");
            std::vector<SumTerm> parsed;
            for (const json& term : terms) {
                require_fields(term, where + ".terms[]", {"indices", "coeff"});
                SumTerm st;
                for (const json& v : term.at("indices")) {
                    if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
                        throw ScenarioError(where + ": indices are 1-based positive integers");
                    st.indices.push_back(static_cast<int>(v.get<std::int64_t>()) - 1);
                }
                if (!term.at("coeff").is_number()) throw ScenarioError(where + ": 'coeff' must be a number");
                st.coeff = term.at("coeff").get<double>();
                parsed.push_back(std::move(st));
            }
            return HomogeneousSumSpec::table(dim, std::move(parsed));
        }
        if (name == "custom") {
            // a fixed multilinear polynomial in the text format
            require_fields(entry, where, {"name", "dimension", "polynomial"});
            const int dim = static_cast<int>(get_int(entry, "dimension", where));
            if (dim < 1) throw ScenarioError(where + ": 'dimension' must be positive");
            MultiPoly p(1);
            try {
                p = parse_poly(get_string(entry, "polynomial", where), dim);
            } catch (const PolyParseError& e) {
                throw ScenarioError(where + ".polynomial: " + e.what());
            }
            std::vector<SumTerm> parsed;
            for (const auto& [exps, c] : p.terms()) {
                SumTerm st;
                st.coeff = c.to_double();
                for (std::size_t i = 0; i < exps.size(); ++i) {
                    if (exps[i] > 1) throw ScenarioError(where + ": custom polynomial must be multilinear");
                    if (exps[i] == 1) st.indices.push_back(static_cast<int>(i));
                }
                parsed.push_back(std::move(st));
            }
            return HomogeneousSumSpec::table(dim, std::move(parsed));
        }
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(where + ": " + e.what());
    }
    throw ScenarioError(where + ": unknown family '" + name + "'");
}

int cmd_simulate(const json& scenario, const RunOptions& opt, const std::filesystem::path& out_dir) {
    require_fields(scenario, "simulate", {"schema_version", "command", "laws", "family", "n_grid", "sample_count", "seed", "target"},
                   {"chunk_size", "workers"});
    ExperimentScenario ex;
    const json& laws = scenario.at("laws");
    if (!laws.is_array() || laws.empty()) throw ScenarioError("simulate: 'laws' must be a non-empty array");
    for (std::size_t i = 0; i < laws.size(); ++i)
        ex.laws.cycle.push_back(parse_law(laws[i], "simulate.laws[" + std::to_string(i) + "]"));
    ex.family = parse_family(scenario.at("family"), "simulate.family");
    const json& grid = scenario.at("n_grid");
    if (!grid.is_array() || grid.empty()) throw ScenarioError("simulate: 'n_grid' must be a non-empty array");
    for (const json& v : grid) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
            throw ScenarioError("simulate: n values must be positive integers");
        ex.n_grid.push_back(v.get<std::int64_t>());
    }
    ex.sample_count = get_int(scenario, "sample_count", "simulate");
    if (ex.sample_count < 1) throw ScenarioError("simulate: 'sample_count' must be positive");
    ex.seed = static_cast<std::uint64_t>(get_int(scenario, "seed", "simulate"));
    if (opt.seed_override) ex.seed = *opt.seed_override;
    if (scenario.contains("chunk_size")) {
        ex.chunk_size = static_cast<int>(get_int(scenario, "chunk_size", "simulate"));
        if (ex.chunk_size < 1) throw ScenarioError("simulate: 'chunk_size' must be positive");
    }
    ex.target = parse_target(scenario, "simulate");
    if (scenario.contains("workers")) ex.workers = static_cast<int>(get_int(scenario, "workers", "simulate"));
    if (opt.workers_override) ex.workers = *opt.workers_override;

    try {
        ex.family.validate();
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(std::string("simulate.family: ") + e.what());
    }

    const EmpiricalReport report = run_experiment(ex);

    json body;
    body["schema_version"] = kSchemaVersion;
    body["seed"] = ex.seed;
    body["sample_count"] = ex.sample_count;
    body["target"] = target_to_json(ex.target);
    body["rows"] = json::array();
    for (const ExperimentRow& row : report.rows) {
        body["rows"].push_back({{"n", row.n},
                                {"m1", row.m1.value},
                                {"m1_se", row.m1.se},
                                {"m2", row.m2.value},
                                {"m2_se", row.m2.se},
                                {"m3", row.m3.value},
                                {"m3_se", row.m3.se},
                                {"m4", row.m4.value},
                                {"m4_se", row.m4.se},
                                {"statistic", row.statistic},
                                {"ks", row.ks}});
    }
    body["summary"] = {{"first_m4_gap", report.first_m4_gap}, {"last_m4_gap", report.last_m4_gap},
                       {"first_ks", report.first_ks},         {"last_ks", report.last_ks},
                       {"m4_gap_decreased", report.m4_gap_decreased}, {"ks_decreased", report.ks_decreased}};
    if (opt.format == "json" || opt.format == "both") write_json_report(out_dir, "simulate", body);
    if (opt.format == "csv" || opt.format == "both") {
        std::ostringstream csv;
        csv << "n,m2,m2_se,m3,m3_se,m4,m4_se,statistic,ks\n";
        for (const ExperimentRow& row : report.rows) {
            csv << row.n << ',' << format_double(row.m2.value) << ',' << format_double(row.m2.se) << ','
                << format_double(row.m3.value) << ',' << format_double(row.m3.se) << ',' << format_double(row.m4.value)
                << ',' << format_double(row.m4.se) << ',' << format_double(row.statistic) << ','
                << format_double(row.ks) << '\n';
        }
        atomic_write(out_dir / "simulate.csv", csv.str());
    }
    return 0;
}

}  // namespace

int run_command(const std::string& command, const RunOptions& options) {
    try {
        std::ifstream is(options.scenario_path);
        if (!is) {
            std::cerr << "error: cannot read scenario file " << options.scenario_path << "\n";
            return 2;
        }
        json scenario;
        try {
            scenario = json::parse(is);
        } catch (const json::parse_error& e) {
            std::cerr << "error: scenario is not valid JSON: " << e.what() << "\n";
            return 2;
        }
        if (!scenario.is_object()) throw ScenarioError("scenario: expected a JSON object");
        if (!scenario.contains("schema_version") || !scenario.at("schema_version").is_number_integer() ||
            scenario.at("schema_version").get<int>() != kSchemaVersion)
            throw ScenarioError("scenario: 'schema_version' must be the integer " + std::to_string(kSchemaVersion));
        if (!scenario.contains("command") || !scenario.at("command").is_string() ||
            scenario.at("command").get<std::string>() != command)
            throw ScenarioError("scenario: 'command' must be \"" + command + "\"");
        if (options.format != "json" && options.format != "csv" && options.format != "both")
            throw ScenarioError("options: --format must be json, csv or both");

        const std::filesystem::path out_dir(options.out_dir);
        std::filesystem::create_directories(out_dir);

        if (command == "verify") return cmd_verify(scenario, options, out_dir);
        if (command == "chaos-check") return cmd_chaos_check(scenario, out_dir);
        if (command == "bounds") return cmd_bounds(scenario, options, out_dir);
        if (command == "criterion") return cmd_criterion(scenario, out_dir);
        if (command == "simulate") return cmd_simulate(scenario, options, out_dir);
        std::cerr << "error: unknown command " << command << "\n";
        return 2;
    } catch (const MathAssertionError& e) {
        // serialize the counterexample rather than a partial result
        try {
            const std::filesystem::path out_dir(options.out_dir);
            std::filesystem::create_directories(out_dir);
            json body{{"schema_version", kSchemaVersion}, {"error", "math-assertion-failed"}, {"detail", e.what()}};
            write_json_report(out_dir, command == "chaos-check" ? "chaos_check" : command, body);
        } catch (...) {
        }
        std::cerr << "math assertion failed: " << e.what() << "\n";
        return 1;
    } catch (const ScenarioError& e) {
        std::cerr << "invalid scenario: " << e.what() << "\n";
        return 2;
    } catch (const PolyParseError& e) {
        std::cerr << "invalid polynomial: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace diffspec
