// Copyright 2026 The trinl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// trinl command-line interface. Exit codes: 0 success / member, 1 nonmember
// or failed check, 2 usage or runtime error.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trinl/behavior_io.hpp"
#include "trinl/catalog.hpp"
#include "trinl/errors.hpp"
#include "trinl/expression.hpp"
#include "trinl/fixtures.hpp"
#include "trinl/membership.hpp"
#include "trinl/quantum.hpp"
#include "trinl/seesaw.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace trinl;

namespace {

constexpr int kMember = 0, kNonmember = 1, kError = 2;

std::string decimal(double v, int digits = 10) {
    std::ostringstream out;
    out << std::setprecision(digits) << v;
    return out.str();
}

ordered_json scalar_json(const Rational& v) { return to_string(v); }
ordered_json scalar_json(double v) { return v; }

int parse_int(const std::string& text, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) throw FormatError("bad " + what + " '" + text + "'");
    return value;
}

/// eq11 | oldineq | i_ab | i_ba | family:N | path to a catalog-format record.
BellExpression load_expression(const std::string& spec) {
    if (spec == "eq11") return eq11_expression();
    if (spec == "oldineq") return oldineq_expression();
    if (spec == "i_ab") return i_a_before_b_expression();
    if (spec == "i_ba") return i_b_before_a_expression();
    if (spec.rfind("family:", 0) == 0) return Catalog::standard().at(parse_int(spec.substr(7), "family")).expression;
    if (!fs::exists(spec)) throw FormatError("unknown expression '" + spec + "' (eq11, oldineq, i_ab, i_ba, family:N or a file)");
    std::string text = read_text_file(spec);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return parse_catalog_record(text).expression;
}

/// ghz | w | ghz:p | w:p | white | pure:l0,l1,l2,l3,l4,phi
QuantumState load_state(const std::string& spec) {
    if (spec == "white") return ghz_state().with_white_noise(0.0);
    if (spec.rfind("pure:", 0) == 0) {
        PureStateParams params;
        std::stringstream in(spec.substr(5));
        std::string item;
        std::vector<double> v;
        while (std::getline(in, item, ',')) v.push_back(std::stod(item));
        if (v.size() != 6) throw FormatError("pure state needs l0,l1,l2,l3,l4,phi");
        for (std::size_t i = 0; i < 5; ++i) params.lambda[i] = v[i];
        params.phi = v[5];
        return params.state();
    }
    const auto colon = spec.find(':');
    const QuantumState base = family_state(parse_state_family(spec.substr(0, colon)));
    if (colon == std::string::npos) return base;
    return base.with_white_noise(std::stod(spec.substr(colon + 1)));
}

template <typename T>
ordered_json certificate_json(const Classification<T>& result, const std::string& mode) {
    ordered_json j;
    j["class"] = to_string(result.cls);
    j["mode"] = mode;
    j["member"] = result.member;
    if (result.decomposition) {
        ordered_json weights = ordered_json::array();
        for (const auto& w : result.decomposition->weights) {
            weights.push_back({{"column", w.column}, {"label", w.key.label}, {"weight", scalar_json(w.weight)}});
        }
        j["weights"] = weights;
    }
    if (result.functional) {
        ordered_json coefficients = ordered_json::array();
        for (const auto& c : result.functional->coefficients) coefficients.push_back(scalar_json(c));
        j["functional"] = {{"coefficients", coefficients},
                           {"offset", scalar_json(result.functional->offset)},
                           {"gap", scalar_json(result.functional->gap)}};
    }
    return j;
}

template <typename T>
int report_classification(const BasicBehavior<T>& b, LocalityClass cls, Formulation formulation, const std::string& mode,
                          const std::string& certificate) {
    const Classification<T> result = classify(b, cls, formulation);
    const std::string problem = verify_certificate(b, result);
    if (!problem.empty()) throw InvariantViolation("certificate failed verification: " + problem);
    write_text_file(certificate, certificate_json(result, mode).dump(2) + "\n");
    std::cout << to_string(cls) << ": " << (result.member ? "member" : "nonmember");
    if (result.functional) std::cout << " (separating gap " << format_scalar(result.functional->gap) << ")";
    std::cout << "\ncertificate: " << certificate << "\n";
    return result.member ? kMember : kNonmember;
}

void print_settings(const Settings& s) {
    for (std::size_t k = 0; k < 6; ++k) {
        const auto& n = s[k].bloch();
        std::cout << "  " << static_cast<char>('A' + k / 2) << k % 2 << ": theta=" << decimal(s[k].theta(), 8)
                  << " phi=" << decimal(s[k].phi(), 8) << "  n=(" << decimal(n.x(), 6) << ", " << decimal(n.y(), 6) << ", "
                  << decimal(n.z(), 6) << ")\n";
    }
}

std::vector<int> parse_families(const std::string& text, const Catalog& catalog) {
    std::vector<int> out;
    if (text == "all") {
        for (const auto& e : catalog.entries()) out.push_back(e.family);
        return out;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
            out.push_back(parse_int(item, "family"));
        } else {
            const int lo = parse_int(item.substr(0, dash), "family"), hi = parse_int(item.substr(dash + 1), "family");
            for (int f = lo; f <= hi; ++f) out.push_back(f);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tripartite locality classes: membership, bounds, quantum values and thresholds"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker threads (0 = all cores, 1 = single-threaded)")->capture_default_str();

    std::string behavior_path, class_tag = "t2", mode, formulation_tag = "default", certificate, ineq, family_text;
    std::string state_spec, angles_path, families = "1-20", catalog_path, dir = "fixtures";
    std::uint64_t seed = 0;
    int restarts = -1, grid = 4, family = 0;
    bool facets = false, optimize_state = false;
    std::string threshold_out = "threshold_angles.txt", behavior_out = "quantum_behavior.json",
                optimize_out = "optimal_angles.txt", report_out = "scan_report.txt";

    auto* classify_cmd = app.add_subcommand("classify", "Decide class membership of a behavior file");
    classify_cmd->add_option("behavior", behavior_path, "Behavior file")->required()->check(CLI::ExistingFile);
    classify_cmd->add_option("--class", class_tag, "local|ns2|t2|k2|s2|ns")->capture_default_str();
    classify_cmd->add_option("--mode", mode, "rational|double (default: the file's mode)");
    classify_cmd->add_option("--formulation", formulation_tag, "default|ns2c (NS2 via its constraint system)")->capture_default_str();
    classify_cmd->add_option("--certificate", certificate, "Certificate output (default: <behavior>.<class>.cert.json)");

    auto* maximize_cmd = app.add_subcommand("maximize", "Exact class bound of an inequality");
    auto* fam_opt = maximize_cmd->add_option("--family", family, "Catalog family id");
    maximize_cmd->add_option("--ineq", ineq, "eq11|oldineq|i_ab|i_ba|family:N|record file")->excludes(fam_opt);
    maximize_cmd->add_option("--class", class_tag, "local|ns2|t2|k2|s2|ns")->capture_default_str();
    maximize_cmd->add_option("--mode", mode, "rational|double (default rational)");

    auto* evaluate_cmd = app.add_subcommand("evaluate", "Value of an inequality on a behavior file");
    evaluate_cmd->add_option("--ineq", ineq, "Expression spec")->required();
    evaluate_cmd->add_option("behavior", behavior_path, "Behavior file")->required()->check(CLI::ExistingFile);

    auto* threshold_cmd = app.add_subcommand("threshold", "Minimal visibility of a noisy GHZ or W state outside a class");
    threshold_cmd->add_option("--state", state_spec, "ghz|w")->required();
    threshold_cmd->add_option("--class", class_tag, "ns2|t2|k2|s2|...")->capture_default_str();
    threshold_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    threshold_cmd->add_option("--restarts", restarts, "Random starting points (default 10)");
    threshold_cmd->add_option("--angles-out", threshold_out, "Write the optimal angles here")->capture_default_str();

    auto* qeval_cmd = app.add_subcommand("quantum-eval", "Born-rule behavior for a state and measurement angles");
    qeval_cmd->add_option("--state", state_spec, "ghz|w|ghz:p|w:p|white|pure:l0,l1,l2,l3,l4,phi")->required();
    qeval_cmd->add_option("--angles", angles_path, "Angle file")->required()->check(CLI::ExistingFile);
    qeval_cmd->add_option("--ineq", ineq, "Expression spec")->required();
    qeval_cmd->add_option("--behavior-out", behavior_out, "Write the behavior here")->capture_default_str();

    auto* qopt_cmd = app.add_subcommand("quantum-optimize", "Seesaw maximization of an inequality over measurements");
    qopt_cmd->add_option("--state", state_spec, "State spec")->required();
    qopt_cmd->add_option("--ineq", ineq, "Expression spec")->required();
    qopt_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    qopt_cmd->add_option("--restarts", restarts, "Random restarts (default 50)");
    qopt_cmd->add_flag("--optimize-state", optimize_state, "Also optimize over all 3-qubit states");
    qopt_cmd->add_option("--angles-out", optimize_out, "Write the optimal angles here")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("catalog-verify", "Recompute catalog bounds (and facet ranks)");
    verify_cmd->add_option("--families", families, "all, or a list such as 1-20,99,185")->capture_default_str();
    verify_cmd->add_flag("--facets", facets, "Also check facet-ness on the NS2 polytope");
    verify_cmd->add_option("--catalog", catalog_path, "Catalog file (default: data directory)");

    auto* scan_cmd = app.add_subcommand("scan", "Seesaw the eq11 inequality over a grid of pure states");
    scan_cmd->add_option("--grid", grid, "Values per parameter (>= 2)")->capture_default_str()->check(CLI::Range(2, 64));
    scan_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    scan_cmd->add_option("--restarts", restarts, "Seesaw restarts per state (default 10)");
    scan_cmd->add_option("--report", report_out, "Report file")->capture_default_str();

    auto* export_cmd = app.add_subcommand("fixtures-export", "Write the fixture behaviors and angles");
    export_cmd->add_option("--dir", dir, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        const LocalityClass cls = parse_class(class_tag);
        if (*classify_cmd) {
            const Formulation formulation = formulation_tag == "ns2c" ? Formulation::NS2Constraints : Formulation::Default;
            if (formulation_tag != "ns2c" && formulation_tag != "default") throw FormatError("unknown formulation " + formulation_tag);
            if (certificate.empty()) certificate = behavior_path + "." + class_tag + ".cert.json";
            const AnyBehavior b = read_behavior_file(behavior_path);
            if (mode.empty()) mode = std::holds_alternative<Behavior>(b) ? "rational" : "double";
            if (mode == "rational") {
                if (!std::holds_alternative<Behavior>(b)) throw FormatError("rational mode needs a rational behavior file");
                return report_classification(std::get<Behavior>(b), cls, formulation, mode, certificate);
            }
            if (mode != "double") throw FormatError("unknown mode " + mode);
            const RealBehavior rb = std::holds_alternative<Behavior>(b) ? to_real(std::get<Behavior>(b)) : std::get<RealBehavior>(b);
            return report_classification(rb, cls, formulation, mode, certificate);
        }
        if (*maximize_cmd) {
            BellExpression expr;
            if (!ineq.empty()) {
                expr = load_expression(ineq);
            } else if (*fam_opt) {
                expr = Catalog::standard().at(family).expression;
            } else {
                throw FormatError("maximize needs --family or --ineq");
            }
            if (mode == "double") {
                const auto r = maximize_double(expr, cls);
                std::cout << to_string(cls) << " bound = " << decimal(r.value, 12) << "\n";
            } else {
                const auto r = maximize(expr, cls);
                std::cout << to_string(cls) << " bound = " << to_string(r.value) << " (" << decimal(r.value.get_d(), 12) << ")\n";
            }
            return kMember;
        }
        if (*evaluate_cmd) {
            const BellExpression expr = load_expression(ineq);
            const AnyBehavior b = read_behavior_file(behavior_path);
            if (std::holds_alternative<Behavior>(b)) {
                const Rational v = evaluate(expr, std::get<Behavior>(b));
                std::cout << to_string(v) << " (" << decimal(v.get_d(), 12) << ")\n";
            } else {
                std::cout << decimal(evaluate(expr, std::get<RealBehavior>(b)), 12) << "\n";
            }
            return kMember;
        }
        if (*threshold_cmd) {
            ThresholdOptions options;
            options.seed = seed;
            options.threads = threads;
            if (restarts >= 0) options.restarts = restarts;
            const ThresholdSearch r = optimize_threshold(parse_state_family(state_spec), cls, options);
            write_settings_file(threshold_out, r.observables);
            std::cout << state_spec << " " << to_string(cls) << " threshold p = " << decimal(r.p, 8) << "\n";
            std::cout << "start: " << r.start << ", rounds: " << r.rounds << "\n";
            print_settings(r.observables);
            std::cout << "angles: " << threshold_out << "\n";
            return kMember;
        }
        if (*qeval_cmd) {
            const BellExpression expr = load_expression(ineq);
            const RealBehavior b = born_behavior({load_state(state_spec), read_settings_file(angles_path)});
            write_behavior_file(behavior_out, b);
            std::cout << decimal(evaluate(expr, b), 12) << "\nbehavior: " << behavior_out << "\n";
            return kMember;
        }
        if (*qopt_cmd) {
            SeesawOptions options;
            options.seed = seed;
            options.threads = threads;
            options.optimize_state = optimize_state;
            if (restarts >= 0) options.restarts = restarts;
            const SeesawResult r = seesaw_maximize(load_expression(ineq), load_state(state_spec), options);
            write_settings_file(optimize_out, r.observables);
            std::cout << "best value = " << decimal(r.value, 12) << " (restart " << r.restart << ", " << r.sweeps << " sweeps)\n";
            print_settings(r.observables);
            std::cout << "angles: " << optimize_out << "\n";
            return kMember;
        }
        if (*verify_cmd) {
            const Catalog catalog = catalog_path.empty() ? Catalog::load(default_catalog_path()) : Catalog::load(catalog_path);
            bool ok = true;
            std::cout << "family      ns2            t2             s2" << (facets ? "        facet" : "") << "\n";
            for (int f : parse_families(families, catalog)) {
                std::cout << std::setw(6) << f;
                for (LocalityClass c : {LocalityClass::NS2, LocalityClass::T2, LocalityClass::S2}) {
                    const BoundCheck check = verify_bound(catalog, f, c);
                    ok = ok && check.pass;
                    std::cout << "  " << std::setw(8) << to_string(check.computed) << (check.pass ? " pass" : " FAIL");
                }
                if (facets) {
                    const FacetCheck fc = verify_facet(catalog, f);
                    ok = ok && fc.facet;
                    std::cout << "  rank " << fc.saturating_dimension << "/" << fc.polytope_dimension << (fc.facet ? " pass" : " FAIL");
                }
                std::cout << "\n";
            }
            std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
            return ok ? kMember : kNonmember;
        }
        if (*scan_cmd) {
            ScanOptions options;
            options.seed = seed;
            options.threads = threads;
            if (restarts >= 0) options.restarts = restarts;
            const ScanReport r = scan_pure_states(eq11_expression(), grid, options);
            std::ostringstream header;
            header << "# scan of eq11, grid " << grid << "^5, seed " << seed << ", restarts " << options.restarts << "\n";
            write_text_file(report_out, header.str() + scan_report_text(r));
            std::cout << "evaluated " << r.evaluated << ", skipped " << r.skipped << " (not genuinely tripartite entangled)\n";
            std::cout << "minimum violation " << decimal(r.min_violation, 8) << ", non-violating states " << r.non_violating.size() << "\n";
            for (std::size_t i : r.non_violating) std::cout << "  " << r.points[i].params.describe() << "\n";
            std::cout << "report: " << report_out << "\n";
            return r.non_violating.empty() ? kMember : kNonmember;
        }
        if (*export_cmd) {
            for (const auto& p : export_fixtures(dir)) std::cout << p.string() << "\n";
            return kMember;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
