#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "artifact.hpp"

namespace fs = std::filesystem;
using namespace kin2d::cli;

namespace {

struct Output {
    std::string out_dir;
    std::vector<std::string> formats;
};

// report goes to stdout always; files land in out_dir ("." when unset, report file only when set)
void emit(const Artifact& a, const std::string& stem, const Output& o) {
    bool want_report = o.formats.empty();
    for (auto& f : o.formats) want_report = want_report || f == "report";
    if (want_report) std::cout << a.report.str();
    fs::path dir = o.out_dir.empty() ? fs::path(".") : fs::path(o.out_dir);
    if (!o.out_dir.empty()) fs::create_directories(dir);
    for (auto& f : o.formats) {
        if (f == "report" && !o.out_dir.empty()) write_file((dir / (stem + ".report.txt")).string(), a.report.str());
        if (f == "csv") {
            auto p = dir / (stem + ".csv");
            write_file(p.string(), a.table.str());
            std::cerr << "wrote " << p.string() << "\n";
        }
        if (f == "svg") {
            auto p = dir / (stem + ".svg");
            kin2d::render_svg(a.figure, p.string());
            std::cerr << "wrote " << p.string() << "\n";
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kin2d: plane kinematics and curve geometry"};
    app.require_subcommand(1);

    Settings settings;
    Output out;
    app.add_option("--out-dir", out.out_dir, "directory for report, CSV and SVG files");
    app.add_option("--samples", settings.samples, "sample count for sweeps and tables")->check(CLI::PositiveNumber);
    app.add_option("--tol", settings.tol, "relative quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--format", out.formats, "output kinds: report, csv, svg")
        ->check(CLI::IsMember({"report", "csv", "svg"}))
        ->take_all();

    std::string example;
    auto* repro = app.add_subcommand("repro", "reproduce a reference example ('list' enumerates them)");
    repro->add_option("example", example, "example name or 'list'")->required();

    std::string scenario;
    auto* run = app.add_subcommand("run", "evaluate a scenario file");
    run->add_option("scenario", scenario, "scenario JSON")->required()->check(CLI::ExistingFile);
    auto* sweep = app.add_subcommand("sweep", "write the CSV sweep of a scenario");
    sweep->add_option("scenario", scenario, "scenario JSON")->required()->check(CLI::ExistingFile);
    auto* render = app.add_subcommand("render", "write the SVG figure of a scenario or example");
    render->add_option("scenario", scenario, "scenario JSON or example name")->required();

    for (auto* sub : {repro, run, sweep, render}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (repro->parsed()) {
            const auto& reg = repro_registry();
            if (example == "list") {
                for (auto& e : reg) std::cout << e.name << "  " << e.description << "\n";
                return 0;
            }
            for (auto& e : reg)
                if (e.name == example) {
                    emit(e.run(settings), e.name, out);
                    return 0;
                }
            std::cerr << "unknown example '" << example << "' (try 'repro list')\n";
            return 2;
        }
        if (run->parsed()) {
            if (out.formats.empty()) out.formats = scenario_outputs(scenario);
            emit(run_scenario_file(scenario, settings), fs::path(scenario).stem().string(), out);
            return 0;
        }
        if (sweep->parsed() || render->parsed()) {
            out.formats = {sweep->parsed() ? "csv" : "svg"};
            if (fs::exists(scenario)) {
                emit(run_scenario_file(scenario, settings), fs::path(scenario).stem().string(), out);
                return 0;
            }
            for (auto& e : repro_registry())
                if (e.name == scenario) {
                    emit(e.run(settings), e.name, out);
                    return 0;
                }
            std::cerr << "no scenario file or example named '" << scenario << "'\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
