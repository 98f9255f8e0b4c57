// Command-line front end over the edsfn C API.
//
// Exit codes: 0 success, 2 violated standing assumption, 1 any other error
// (and a repro run with a mismatched fact).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edsfn/edsfn.h"

namespace {

struct CString {
    char* p = nullptr;
    ~CString() { edsfn_string_free(p); }
};

using CurvePtr = std::unique_ptr<edsfn_curve, decltype(&edsfn_curve_free)>;

int exit_code(edsfn_status s) {
    if (s == EDSFN_OK) return 0;
    return s == EDSFN_ERR_ASSUMPTION ? 2 : 1;
}

int report_failure(edsfn_status s) {
    std::cerr << "error (" << edsfn_last_error_name() << "): " << edsfn_last_error() << "\n";
    return exit_code(s);
}

bool write_file(const std::string& path, const char* text) {
    std::ofstream out(path);
    if (!out) return false;
    out << text << "\n";
    return static_cast<bool>(out);
}

// Prints the table for a JSON document and writes it to json_path if set.
int emit(const char* json, const std::string& json_path) {
    CString text;
    if (edsfn_status s = edsfn_render(json, &text.p); s != EDSFN_OK) return report_failure(s);
    std::cout << text.p;
    if (!json_path.empty() && !write_file(json_path, json)) {
        std::cerr << "error (Io): cannot write " << json_path << "\n";
        return 1;
    }
    return 0;
}

int run_repro(const std::vector<std::string>& ids, const std::string& json_path) {
    std::string combined = "[";
    bool all = true;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        CString json;
        int pass = 0;
        if (edsfn_status s = edsfn_repro(ids[i].c_str(), nullptr, &pass, &json.p); s != EDSFN_OK) return report_failure(s);
        CString text;
        if (edsfn_status s = edsfn_render(json.p, &text.p); s != EDSFN_OK) return report_failure(s);
        std::cout << text.p;
        all = all && pass == 1;
        combined += (i ? "," : "") + std::string(json.p);
    }
    combined += "]";
    if (!json_path.empty() && !write_file(json_path, ids.size() == 1 ? combined.substr(1, combined.size() - 2).c_str()
                                                                     : combined.c_str())) {
        std::cerr << "error (Io): cannot write " << json_path << "\n";
        return 1;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elliptic divisibility sequences over function fields"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string curve_path, json_path, fixture;
    long nmax = 50, depth = 0;
    app.add_option("--curve", curve_path, "Curve file (key = value)");
    app.add_option("--nmax", nmax, "Number of EDS terms")->check(CLI::PositiveNumber);
    app.add_option("--json", json_path, "Write the machine report to this path");
    app.add_option("--depth", depth, "Component solver depth (0 = automatic)")->check(CLI::NonNegativeNumber);
    app.add_option("--fixture", fixture, "Built-in fixture id instead of --curve");

    const std::vector<std::pair<std::string, std::string>> commands{
        {"fibres", "Singular fibres, Kodaira types, chi and conductor"},
        {"eds", "Divisors D_{nP} for n <= nmax with primitivity flags"},
        {"height", "Canonical pairing <P,P> and per-place correcting terms"},
        {"hasse", "Hasse invariant, per-place h values and the tame/wild verdict"},
        {"bounds", "Height and discriminant bounds for the curve"},
        {"report", "Primitivity report with the effective threshold"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help);
    std::vector<std::string> repro_ids;
    CLI::App* repro = app.add_subcommand("repro", "Reproduce the facts of a fixture (all fixtures when none is given)");
    repro->add_option("id", repro_ids, "Fixture id");

    CLI11_PARSE(app, argc, argv);

    if (repro->parsed()) {
        if (!fixture.empty()) repro_ids.push_back(fixture);
        if (repro_ids.empty()) {
            for (std::size_t i = 0; i < edsfn_fixture_count(); ++i) repro_ids.emplace_back(edsfn_fixture_id(i));
        }
        return run_repro(repro_ids, json_path);
    }

    if (curve_path.empty() == fixture.empty()) {
        std::cerr << "error (InvalidArgument): give exactly one of --curve and --fixture\n";
        return 1;
    }
    edsfn_curve* raw = nullptr;
    edsfn_status s = fixture.empty() ? edsfn_curve_load_file(curve_path.c_str(), &raw)
                                     : edsfn_curve_load_fixture(fixture.c_str(), nullptr, &raw);
    if (s != EDSFN_OK) return report_failure(s);
    CurvePtr curve(raw, &edsfn_curve_free);

    const std::string command = app.get_subcommands().front()->get_name();
    CString json;
    if (s = edsfn_run(curve.get(), command.c_str(), nmax, depth, &json.p); s != EDSFN_OK) return report_failure(s);
    return emit(json.p, json_path);
}
