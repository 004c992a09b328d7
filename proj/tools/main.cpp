#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polycert/decide.hpp"
#include "polycert/isolate.hpp"

namespace {

using nlohmann::ordered_json;
using namespace polycert;

constexpr int kExitProved = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInputError = 2;

ordered_json report_to_json(const CheckReport& report) {
    ordered_json checks = ordered_json::array();
    for (const CheckEntry& e : report.entries) {
        ordered_json entry;
        entry["name"] = e.name;
        entry["passed"] = e.passed;
        if (!e.detail.empty()) entry["detail"] = e.detail;
        checks.push_back(std::move(entry));
    }
    return checks;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_decide(const std::string& formula_text, const std::string& emit_path) {
    Formula f = parse_formula(formula_text);
    Verdict v = decide(f);
    ordered_json out;
    out["truth"] = v.truth;
    out["certifies"] = v.truth ? to_string(f) : to_string(negate(f));
    out["certificate"] = certificate_to_json(v.cert);
    out["checks"] = report_to_json(v.report);
    std::cout << out.dump(2) << "\n";
    if (!emit_path.empty()) {
        std::ofstream cert_out(emit_path, std::ios::binary);
        if (!cert_out) throw std::invalid_argument("cannot write '" + emit_path + "'");
        cert_out << certificate_to_json(v.cert).dump(2) << "\n";
    }
    return v.truth ? kExitProved : kExitRefuted;
}

int cmd_check(const std::string& formula_text, const std::string& cert_path) {
    Formula f = parse_formula(formula_text);
    Certificate cert = resolve_kind(parse_certificate(read_file(cert_path)), f);
    CheckReport report;
    bool ok = check_certificate(f, cert, report);
    ordered_json out;
    out["verified"] = ok;
    out["checks"] = report_to_json(report);
    std::cout << out.dump(2) << "\n";
    return ok ? kExitProved : kExitRefuted;
}

int cmd_isolate(const std::string& poly_text) {
    Poly p = parse_poly(poly_text);
    ordered_json out = ordered_json::array();
    for (const RealAlg& root : isolate_roots(p)) out.push_back(point_to_json(root));
    std::cout << out.dump(2) << "\n";
    return kExitProved;
}

int cmd_sign(const std::string& poly_text, const std::string& point_text, bool as_json) {
    Poly p = parse_poly(poly_text);
    RealAlg a = parse_point(point_text);
    int s = sign_at(p, a);  // throws on an invalid representation
    if (as_json) {
        ordered_json out;
        out["sign"] = std::to_string(s);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << s << "\n";
    }
    return kExitProved;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact decision procedure for single-variable polynomial formulas"};
    app.require_subcommand(1);

    std::string formula_text;
    std::string poly_text;
    std::string point_text;
    std::string cert_path;
    std::string emit_path;
    bool as_json = false;

    CLI::App* decide_cmd =
        app.add_subcommand("decide", "Decide a formula and print a checked certificate");
    decide_cmd->add_option("formula", formula_text, "e.g. \"forall x. x^2 >= 0\"")->required();
    decide_cmd->add_option("--emit-cert", emit_path, "write the certificate JSON to this file");
    decide_cmd->add_flag("--json", as_json, "output is always JSON; accepted for symmetry");

    CLI::App* check_cmd =
        app.add_subcommand("check", "Verify a stored certificate against a formula");
    check_cmd->add_option("formula", formula_text, "the formula the certificate claims")
        ->required();
    check_cmd->add_option("--cert", cert_path, "certificate file (point list or JSON)")
        ->required();
    check_cmd->add_flag("--json", as_json, "output is always JSON; accepted for symmetry");

    CLI::App* isolate_cmd =
        app.add_subcommand("isolate", "Isolate all real roots of a polynomial");
    isolate_cmd->add_option("poly", poly_text, "e.g. \"x^2 - 2\"")->required();
    isolate_cmd->add_flag("--json", as_json, "output is always JSON; accepted for symmetry");

    CLI::App* sign_cmd =
        app.add_subcommand("sign", "Exact sign of a polynomial at a real algebraic point");
    sign_cmd->add_option("poly", poly_text, "e.g. \"x - 1\"")->required();
    sign_cmd->add_option("point", point_text, "e.g. \"Arep [:-2,0,1:] 0 2\" or \"Rat 3/2\"")
        ->required();
    sign_cmd->add_flag("--json", as_json, "wrap the sign in a JSON object");

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide_cmd->parsed()) return cmd_decide(formula_text, emit_path);
        if (check_cmd->parsed()) return cmd_check(formula_text, cert_path);
        if (isolate_cmd->parsed()) return cmd_isolate(poly_text);
        if (sign_cmd->parsed()) return cmd_sign(poly_text, point_text, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
