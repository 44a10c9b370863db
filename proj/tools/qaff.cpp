#include "qaff/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace qaff;

namespace {

TypeLabel parse_type_or_throw(const std::string& s) {
    auto t = parse_label(s);
    if (!t) throw CLI::ValidationError("type", "unknown type '" + s + "' (expected e.g. A5~2, F4~1, B3)");
    return *t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Root-system and small quantum group kernel computations for affine types"};
    app.require_subcommand(1);

    std::string type, out_path;
    std::vector<std::string> degrees;
    int t = 2, ell = 4, level = 4, workers = 1;
    bool json = false, corrupt = false;

    app.add_flag("--json", json, "emit the report as JSON");
    app.add_option("--out", out_path, "write the report to a file instead of stdout");

    auto* datum_cmd = app.add_subcommand("datum", "Cartan matrix, form, marks, delta and dual of a type");
    datum_cmd->add_option("type", type)->required();

    auto* sub_cmd = app.add_subcommand("subsystem", "roots with t | (a,a) and their type");
    sub_cmd->add_option("type", type)->required();
    sub_cmd->add_option("--t", t)->check(CLI::PositiveNumber);
    sub_cmd->add_option("--level", level)->check(CLI::NonNegativeNumber);

    auto* cls_cmd = app.add_subcommand("classify", "kernel type at a root of unity of order ell");
    cls_cmd->add_option("type", type)->required();
    cls_cmd->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
    cls_cmd->add_option("--level", level)->check(CLI::Range(2, 64));

    auto* br_cmd = app.add_subcommand("braiding", "braiding matrix and Heckenberger type of a degree list");
    br_cmd->add_option("type", type)->required();
    br_cmd->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
    br_cmd->add_option("--degrees", degrees, "space-separated coefficient vectors, e.g. \"1,0 0,1\"")
        ->required()
        ->expected(1, 64);

    auto* all_cmd = app.add_subcommand("verify-all", "run every tabulated verification");
    all_cmd->add_option("--level", level)->check(CLI::Range(2, 16));
    all_cmd->add_option("--workers", workers)->check(CLI::Range(1, 256));
    all_cmd->add_flag("--corrupt-fixture", corrupt)->group("");

    for (auto* c : {datum_cmd, sub_cmd, cls_cmd, br_cmd, all_cmd}) {
        c->add_flag("--json", json, "emit the report as JSON");
        c->add_option("--out", out_path, "write the report to a file instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Report r;
    try {
        if (*datum_cmd) {
            r = cmd_datum(parse_type_or_throw(type));
        } else if (*sub_cmd) {
            r = cmd_subsystem(parse_type_or_throw(type), t, level);
        } else if (*cls_cmd) {
            auto lbl = parse_type_or_throw(type);
            if (!lbl.affine()) throw CLI::ValidationError("type", "classify needs an affine type");
            r = cmd_classify(lbl, ell, level);
        } else if (*br_cmd) {
            auto lbl = parse_type_or_throw(type);
            std::string joined;
            for (const auto& d : degrees) joined += d + " ";
            r = cmd_braiding(lbl, ell, parse_degrees(joined, datum_size(lbl)));
        } else {
            r = cmd_verify_all({level, workers, corrupt});
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const std::string text = json ? render_json(r) : render_text(r);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        f << text;
    }
    return exit_code(r);
}
