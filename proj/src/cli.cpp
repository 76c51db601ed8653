#include "qcone/cli.hpp"

#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcone/expsolve.hpp"
#include "qcone/opaction.hpp"
#include "qcone/parse.hpp"
#include "qcone/verify.hpp"

namespace qcone::cli {

namespace {

using json = nlohmann::ordered_json;
using presets::DerivTableVariant;
using presets::PresetName;

json report_json(const verify::CheckReport& rep, bool expect_pass) {
    json witnesses = json::array();
    for (const auto& w : rep.witnesses)
        witnesses.push_back({{"input", w.input}, {"difference", w.difference}});
    return json{{"check", rep.check},
                {"status", rep.pass ? "pass" : "fail"},
                {"expected", expect_pass ? "pass" : "fail"},
                {"detail", rep.detail},
                {"witnesses", witnesses}};
}

void report_text(std::ostream& out, const verify::CheckReport& rep, bool expect_pass) {
    bool ok = rep.pass == expect_pass;
    out << (ok ? "PASS" : "FAIL");
    if (!expect_pass) out << " (fails as expected)";
    out << "  " << rep.check << "  [" << rep.detail << "]\n";
    size_t shown = 0;
    for (const auto& w : rep.witnesses) {
        if (++shown > 5) {
            out << "    ... " << rep.witnesses.size() - 5 << " more witnesses\n";
            break;
        }
        out << "    witness: " << w.input << "  ->  " << w.difference << "\n";
    }
}

int cmd_list_presets(const std::string& format, std::ostream& out) {
    if (format == "json") {
        json presets_json = json::array();
        for (PresetName n : presets::all_presets()) {
            const Presentation& p = presets::preset(n);
            json gens = json::array();
            for (const auto& g : p.alphabet) gens.push_back(g.name);
            presets_json.push_back({{"name", presets::to_string(n)},
                                    {"generators", gens},
                                    {"rules", p.rules.size()},
                                    {"nilpotents", p.nilpotents.size()}});
        }
        out << json{{"presets", presets_json}}.dump(2) << "\n";
        return 0;
    }
    out << "Presets and their generator tokens (listed in normal order):\n";
    for (PresetName n : presets::all_presets()) {
        const Presentation& p = presets::preset(n);
        out << "  " << presets::to_string(n) << ":";
        for (const auto& g : p.alphabet) out << " " << g.name;
        out << "\n";
    }
    out << "\nIndex pairs are flattened into names: X12 is the component with\n"
           "first (undotted) index 1 and second (dotted) index 2; dX* are the\n"
           "differentials, D* the derivatives, P* the momenta. Scalars:\n"
           "rationals, i, and q-powers q^2, q^-2, q^(1/2), q^(-3/2).\n";
    return 0;
}

int cmd_normalize(const std::string& preset_name, const std::string& expr,
                  const std::string& format, std::ostream& out) {
    const Presentation& p = presets::preset(presets::preset_from_string(preset_name));
    Element e = to_element(parse(expr, p));
    Element nf = normalize(e, p);
    if (format == "json") {
        out << json{{"command", "normalize"},
                    {"preset", p.name},
                    {"input", expr},
                    {"normal-form", element_to_string(nf, p)}}
                   .dump(2)
            << "\n";
    } else {
        out << element_to_string(nf, p) << "\n";
    }
    return 0;
}

int cmd_verify(const verify::SuiteOptions& options, const std::string& format,
               std::ostream& out) {
    auto items = verify::run_all(options);
    bool ok = verify::aggregate_ok(items);
    if (format == "json") {
        json reports = json::array();
        for (const auto& item : items)
            reports.push_back(report_json(item.report, item.expect_pass));
        out << json{{"command", "verify"},
                    {"max-degree", options.max_degree},
                    {"table-variant",
                     options.variant == DerivTableVariant::Printed ? "printed"
                                                                   : "corrected"},
                    {"reports", reports},
                    {"ok", ok}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& item : items) report_text(out, item.report, item.expect_pass);
        out << (ok ? "all checks passed" : "verification FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_confluence(const std::string& preset_name, int max_degree,
                   const std::string& format, std::ostream& out) {
    const Presentation& p = presets::preset(presets::preset_from_string(preset_name));
    auto rep = verify::check_confluence("confluence/" + p.name, p, max_degree);
    if (format == "json") {
        out << json{{"command", "confluence"}, {"report", report_json(rep, true)}}
                   .dump(2)
            << "\n";
    } else {
        report_text(out, rep, true);
    }
    return rep.pass ? 0 : 1;
}

int cmd_solve_exponents(bool with_reality, bool with_star, const std::string& format,
                        std::ostream& out) {
    using namespace expsolve;
    ExponentAnsatz ansatz = ExponentAnsatz::general();
    ExponentSystem sys = generate_constraints(ansatz);
    std::vector<LinearConstraint> extras;
    if (with_reality) extras.push_back(reality_constraint(ansatz));
    if (with_star)
        for (auto& c : star_closure_constraints(ansatz)) extras.push_back(c);

    json equations = json::array();
    for (const auto& eq : sys.equations)
        equations.push_back({{"equation", eq.form.str() + " = 0"},
                             {"from", eq.provenance}});
    json extra_json = json::array();
    for (const auto& eq : extras)
        extra_json.push_back({{"equation", eq.form.str() + " = 0"},
                              {"from", eq.provenance}});
    json reduced = json::array();
    for (const auto& f : row_reduce(sys, extras)) reduced.push_back(f.str() + " = 0");

    bool consistent = true;
    json solution;
    std::string text_solution;
    try {
        SolutionFamily sol = solve(sys, extras);
        json pivots;
        for (const auto& [v, f] : sol.pivot_values) pivots[v] = f.str();
        solution = json{{"pivots", pivots}, {"free", sol.free_unknowns}};
        for (const auto& [v, f] : sol.pivot_values)
            text_solution += v + " = " + f.str() + "; ";
        for (const auto& v : sol.free_unknowns) text_solution += v + " free; ";
    } catch (const InconsistentSystem&) {
        consistent = false;
        solution = json{{"inconsistent", true}};
        text_solution = "inconsistent";
    }

    if (format == "json") {
        out << json{{"command", "solve-exponents"},
                    {"unknowns", sys.unknown_order},
                    {"equations", equations},
                    {"extra-constraints", extra_json},
                    {"row-reduced", reduced},
                    {"solution", solution}}
                   .dump(2)
            << "\n";
    } else {
        out << "generated equations:\n";
        for (const auto& eq : sys.equations)
            out << "  " << eq.form.str() << " = 0    (" << eq.provenance << ")\n";
        if (!extras.empty()) {
            out << "extra constraints:\n";
            for (const auto& eq : extras)
                out << "  " << eq.form.str() << " = 0    (" << eq.provenance << ")\n";
        }
        out << "row-reduced:\n";
        for (const auto& f : row_reduce(sys, extras)) out << "  " << f.str() << " = 0\n";
        out << "solution: " << text_solution << "\n";
    }
    return consistent ? 0 : 1;
}

int cmd_limit(const std::string& operand, int order, const std::string& format,
              std::ostream& out) {
    const Presentation& dp = presets::preset(PresetName::DerivOnly);
    opaction::OperatorExpr op = operand == "box"
                                    ? opaction::box_q()
                                    : normalize(to_element(parse(operand, dp)), dp);
    auto parts = opaction::classical_limit(op, order);
    if (format == "json") {
        json jparts = json::array();
        for (const auto& [power, part] : parts)
            jparts.push_back({{"power", power},
                              {"operator", element_to_string(part, dp)}});
        out << json{{"command", "limit"},
                    {"operand", operand},
                    {"order", order},
                    {"parts", jparts}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& [power, part] : parts)
            out << "h^" << power << ": " << element_to_string(part, dp) << "\n";
        if (parts.empty()) out << "0\n";
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact rewriting engine for q-deformed light-cone calculi"};
    app.require_subcommand(1);
    app.fallthrough(); // --format may follow the subcommand
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* list_cmd = app.add_subcommand("list-presets", "show presets and token names");

    std::string norm_preset, norm_expr;
    auto* norm_cmd = app.add_subcommand("normalize", "normalize an expression");
    norm_cmd->add_option("--preset", norm_preset, "preset name")->required();
    norm_cmd->add_option("expr", norm_expr, "expression to normalize")->required();

    std::string verify_preset;
    bool verify_all = false, printed_typo = false;
    int verify_degree = 3;
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_option("--preset", verify_preset, "restrict to checks mentioning this preset");
    verify_cmd->add_flag("--all", verify_all, "run every check (default)");
    verify_cmd->add_option("--max-degree", verify_degree, "confluence degree cap")
        ->check(CLI::Range(3, 6));
    verify_cmd->add_flag("--printed-typo", printed_typo,
                         "use the derivative table exactly as published");

    std::string conf_preset;
    int conf_degree = 3;
    auto* conf_cmd = app.add_subcommand("confluence", "critical-pair check for one preset");
    conf_cmd->add_option("--preset", conf_preset, "preset name")->required();
    conf_cmd->add_option("--max-degree", conf_degree, "degree cap")->check(CLI::Range(3, 6));

    bool with_reality = false, with_star = false;
    auto* solve_cmd = app.add_subcommand("solve-exponents",
                                         "derive the twistor-conjugate commutation exponents");
    solve_cmd->add_flag("--with-reality", with_reality, "append the reality condition n = 0");
    solve_cmd->add_flag("--with-star-closure", with_star,
                        "append the star-closure constraints");

    int limit_order = 1;
    std::string limit_operand = "box";
    auto* limit_cmd = app.add_subcommand("limit", "classical limit q = exp(ih)");
    limit_cmd->add_option("--order", limit_order, "truncation order in h")
        ->check(CLI::Range(0, 16));
    limit_cmd->add_option("operand", limit_operand,
                          "'box' or a derivative expression (D11..D22)");

    std::vector<const char*> argv;
    argv.push_back("qcone");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list_cmd->parsed()) return cmd_list_presets(format, out);
        if (norm_cmd->parsed()) return cmd_normalize(norm_preset, norm_expr, format, out);
        if (verify_cmd->parsed()) {
            verify::SuiteOptions options;
            options.max_degree = verify_degree;
            options.variant = printed_typo ? DerivTableVariant::Printed
                                           : DerivTableVariant::Corrected;
            if (!verify_preset.empty()) {
                presets::preset_from_string(verify_preset); // validate the name
                options.filter = verify_preset;
            }
            return cmd_verify(options, format, out);
        }
        if (conf_cmd->parsed()) return cmd_confluence(conf_preset, conf_degree, format, out);
        if (solve_cmd->parsed())
            return cmd_solve_exponents(with_reality, with_star, format, out);
        if (limit_cmd->parsed()) return cmd_limit(limit_operand, limit_order, format, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no command given\n";
    return 2;
}

} // namespace qcone::cli
