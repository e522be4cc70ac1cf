// k3calc: exact-arithmetic calculator for K3 Mukai lattices, cohomological
// isometry actions, cyclic group cohomology, and exceptional-collection
// pseudoheights, plus a named-scenario verification harness.
//
// Exit codes: 0 success / all verifications pass, 1 verification failure,
// 2 usage or input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "k3calc/cohomology.hpp"
#include "k3calc/isometry.hpp"
#include "k3calc/json_io.hpp"
#include "k3calc/lattice.hpp"
#include "k3calc/mukai.hpp"
#include "k3calc/pseudoheight.hpp"
#include "k3calc/scenarios.hpp"

namespace {

using namespace k3calc;

bool use_color() {
    static const bool enabled = (std::getenv("NO_COLOR") == nullptr) && isatty(fileno(stdout));
    return enabled;
}

std::string styled(const std::string& text, const char* code) {
    if (!use_color()) return text;
    return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

std::string pass_tag(bool pass) {
    return pass ? styled("PASS", "32") : styled("FAIL", "31");
}

void print_reports(const std::vector<ScenarioReport>& reports) {
    int passed = 0;
    for (const ScenarioReport& r : reports) {
        std::cout << "[" << pass_tag(r.verdict) << "] " << r.name << "\n";
        for (const CheckResult& c : r.checks) {
            if (c.pass) {
                std::cout << "  ok   " << c.description << " = " << c.actual << "\n";
            } else {
                std::cout << "  " << pass_tag(false) << " " << c.description << "\n"
                          << "       expected: " << c.expected << "\n"
                          << "       actual:   " << c.actual << "\n";
            }
        }
        if (r.verdict) ++passed;
    }
    std::cout << passed << "/" << reports.size() << " scenarios passed\n";
}

// Generators for lattice subcommands: inline --gens JSON wins, else the
// input file's "gens" field.
std::vector<Vec> load_gens(const Json& input, const std::string& gens_text,
                           const IntLattice& lattice) {
    Json jgens;
    if (!gens_text.empty()) {
        jgens = parse_json_text(gens_text, "--gens");
    } else if (input.is_object() && input.contains("gens")) {
        jgens = input.at("gens");
    } else {
        throw Error("this operation needs generators: pass --gens or a 'gens' field");
    }
    if (!jgens.is_array() || jgens.empty())
        throw Error("field 'gens' must be a nonempty array of vectors");
    std::vector<Vec> gens;
    for (const Json& jv : jgens) gens.push_back(vector_from_json(jv, lattice));
    return gens;
}

int run_verify(const std::string& name, bool all, bool list, const std::string& json_path) {
    if (list) {
        for (const std::string& n : list_scenarios()) std::cout << n << "\n";
        return 0;
    }
    if (all == !name.empty())
        throw Error("pass exactly one of a scenario name or --all");
    std::vector<ScenarioReport> reports;
    if (all)
        reports = run_all();
    else
        reports.push_back(run_scenario(name));
    print_reports(reports);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw Error("cannot write file '" + json_path + "'");
        out << serialize_reports(reports);
    }
    return verify_exit_code(reports);
}

int run_lattice(const std::string& op, const std::string& input_path,
                const std::string& gens_text) {
    Json input = parse_json_file(input_path);
    IntLattice lattice = lattice_from_json(input);

    if (op == "det") {
        std::cout << determinant(lattice).str() << "\n";
    } else if (op == "sig") {
        std::cout << signature(lattice).str() << "\n";
    } else if (op == "snf") {
        SmithResult snf = smith_normal_form(lattice.gram);
        std::string sep;
        std::cout << "diag(";
        for (int i = 0; i < std::min(snf.s.rows(), snf.s.cols()); ++i) {
            std::cout << sep << snf.s.at(i, i).str();
            sep = ", ";
        }
        std::cout << ")\n";
    } else if (op == "complement") {
        SublatticeSpan comp =
            orthogonal_complement(SublatticeSpan(lattice, load_gens(input, gens_text, lattice)));
        for (const Vec& v : comp.generators) std::cout << format_vec(v) << "\n";
    } else if (op == "saturate") {
        SublatticeSpan sat =
            saturate(SublatticeSpan(lattice, load_gens(input, gens_text, lattice)));
        for (const Vec& v : sat.generators) std::cout << format_vec(v) << "\n";
    } else if (op == "dualcone") {
        std::vector<Vec> gens = load_gens(input, gens_text, lattice);
        if (gens.size() != 2) throw Error("dualcone needs exactly two generators");
        auto [a, b] = dual_cone_rank2(lattice, gens[0], gens[1]);
        std::cout << format_vec(a) << "\n" << format_vec(b) << "\n";
    }
    return 0;
}

int run_isometry_apply(const std::string& model_arg, const std::string& word,
                       const std::string& vector_expr) {
    K3Model model = is_bundled_model(model_arg) ? bundled_model(model_arg)
                                                : model_from_json(parse_json_file(model_arg));
    MukaiIsometry iso = build_named(model, tokenize_word(word));
    MukaiVector image = apply(iso, parse_mukai_vector_expr(model, vector_expr));
    std::cout << format_mukai_vector(model, image) << "\n";
    std::cout << "transcendental sign: " << (iso.transcendental_sign > 0 ? "+1" : "-1") << "\n";
    return 0;
}

int run_cohomology(long long m, long long n, const std::string& coeff) {
    if (n < 0) throw Error("field 'n' must be a nonnegative integer");
    AbelianGroupModel result = cyclic_cohomology(Int(m), Int(n), parse_group_expr(coeff));
    std::cout << format_group(result) << "\n";
    return 0;
}

int run_pseudoheight(const std::string& input_path) {
    ParsedTable parsed = table_from_json(parse_json_file(input_path));
    if (parsed.sheaf_mode_requested && !sheaf_mode_valid(parsed.table))
        throw Error(
            "table violates sheaf-mode bounds (every e_plain must be >= 0 and "
            "every e_serre >= rel_dim)");
    ExtInt ph = pseudoheight(parsed.table);
    ConnectednessVerdict verdict = connectedness_verdict(ph, parsed.table.rel_dim, parsed.table.n);
    std::cout << "pseudoheight: " << ph.str() << "\n";
    std::cout << "isomorphism for i <= " << verdict.iso_range_max.str() << "\n";
    std::cout << "injection at i = " << verdict.injection_at.str() << "\n";
    std::cout << "connected by criterion: " << (verdict.connected_by_criterion ? "true" : "false")
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact K3 Mukai-lattice calculator and verification harness"};
    app.require_subcommand(1);

    // verify scenario <name>|--all [--json out]
    CLI::App* verify = app.add_subcommand("verify", "run the named-scenario verification harness");
    verify->require_subcommand(1);
    CLI::App* scenario = verify->add_subcommand("scenario", "replay one or all scenarios");
    std::string scenario_name;
    bool scenario_all = false, scenario_list = false;
    std::string json_path;
    scenario->add_option("name", scenario_name, "scenario name (see --list)");
    scenario->add_flag("--all", scenario_all, "run every scenario");
    scenario->add_flag("--list", scenario_list, "list scenario names and exit");
    scenario->add_option("--json", json_path, "also write the reports as JSON to this path");

    // lattice det|sig|snf|complement|saturate|dualcone --input f.json [--gens ...]
    CLI::App* lattice =
        app.add_subcommand("lattice", "exact integer-lattice computations on a JSON lattice");
    std::string lattice_op, lattice_input, lattice_gens;
    lattice->add_option("op", lattice_op, "operation")
        ->required()
        ->check(CLI::IsMember({"det", "sig", "snf", "complement", "saturate", "dualcone"}));
    lattice->add_option("--input", lattice_input, "lattice JSON file {\"labels\":..., \"gram\":...}")
        ->required();
    lattice->add_option("--gens", lattice_gens,
                        "generators as a JSON array of vectors, e.g. \"[[0,1],[1,-1]]\"");

    // isometry apply --model m --word "..." --vector "(r,c1,s)"
    CLI::App* isometry = app.add_subcommand("isometry", "cohomological autoequivalence actions");
    isometry->require_subcommand(1);
    CLI::App* apply_cmd =
        isometry->add_subcommand("apply", "apply a word of autoequivalences to a Mukai vector");
    std::string model_arg, word, vector_expr;
    apply_cmd
        ->add_option("--model", model_arg,
                     "bundled model name (quartic_branch, gm_surface, quartic_with_line) or a "
                     "model JSON file")
        ->required();
    apply_cmd
        ->add_option("--word", word,
                     "whitespace-separated tokens, applied right to left: shift, tw:O, tw:U, "
                     "tw:(r,c1,s), lb:<class-expr>")
        ->required();
    apply_cmd->add_option("--vector", vector_expr, "Mukai vector literal, e.g. \"(0,0,1)\"")
        ->required();

    // cohomology --m <int> --n <int> --coeff "Cx+Z"
    CLI::App* cohomology =
        app.add_subcommand("cohomology", "H^n(Z/m, A) for a trivial-action coefficient group");
    long long coh_m = 0, coh_n = 0;
    std::string coeff;
    cohomology->add_option("--m", coh_m, "order of the cyclic group (>= 2)")->required();
    cohomology->add_option("--n", coh_n, "cohomological degree (>= 0)")->required();
    cohomology->add_option("--coeff", coeff, "coefficient group, e.g. \"Cx+Z\", \"Z^2\", \"Z/4\"")
        ->required();

    // pseudoheight --input t.json
    CLI::App* pseudo = app.add_subcommand(
        "pseudoheight", "pseudoheight and connectedness verdict of an Ext-degree table");
    std::string table_input;
    pseudo->add_option("--input", table_input, "Ext-degree table JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (scenario->parsed())
            return run_verify(scenario_name, scenario_all, scenario_list, json_path);
        if (lattice->parsed()) return run_lattice(lattice_op, lattice_input, lattice_gens);
        if (apply_cmd->parsed()) return run_isometry_apply(model_arg, word, vector_expr);
        if (cohomology->parsed()) return run_cohomology(coh_m, coh_n, coeff);
        if (pseudo->parsed()) return run_pseudoheight(table_input);
    } catch (const k3calc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
