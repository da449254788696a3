#include "fullerene/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    using fullerene::CommandConfig;
    CommandConfig config;
    std::string format = "text";
    std::string output;

    CLI::App app{"Belyi functions of small fullerenes: exact derivation, verification and barrel geometry"};
    app.require_subcommand(1);
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output,-o", output, "Write the report to this file instead of stdout");
    app.add_option("--tol", config.tol, "Root residual tolerance for geometry")->check(CLI::PositiveNumber);

    auto* fv = app.add_subcommand("facevector", "Face vector (f0, f1, f2) of a fullerene with p6 hexagons");
    fv->add_option("p6", config.argument, "Number of hexagons")->required();
    auto* pp = app.add_subcommand("passport", "Passport of the fullerene dessin with p6 hexagons");
    pp->add_option("p6", config.argument, "Number of hexagons")->required();
    auto* ve = app.add_subcommand("verify", "Certify a Belyi function: preset d6|d12|d60|d72 or a JSON file");
    ve->add_option("source", config.argument, "Preset id or path")->required();
    auto* de = app.add_subcommand("derive", "Run the derivation for face degree s at infinity, or 'd6'");
    de->add_option("case", config.argument, "s (1..max-s) or d6")->required();
    de->add_option("--max-s", config.max_s, "Largest admissible s")->check(CLI::PositiveNumber);
    auto* co = app.add_subcommand("compose", "Composition pipeline: d12|d60|d72|schwarz");
    co->add_option("target", config.argument, "Target")->required();
    co->add_option("--write-belyi", config.belyi_path, "Write the factored Belyi function as JSON");
    auto* ge = app.add_subcommand("geometry", "Metric report of a pentagonal face of the barrel");
    ge->add_option("model", config.argument, "Only 'barrel'")->required();
    ge->add_option("--svg", config.svg_path, "Write the flat pentagon as SVG");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : fullerene::kExitUsage;
    }
    config.command = app.get_subcommands().front()->get_name();
    config.format = format == "json" ? fullerene::OutputFormat::Json : fullerene::OutputFormat::Text;

    const fullerene::RunResult result = fullerene::run(config);
    if (output.empty()) {
        std::cout << result.report;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "cannot write '" << output << "'\n";
            return fullerene::kExitUsage;
        }
        out << result.report;
    }
    if (result.status != 0 && !output.empty()) std::cerr << "failed; see " << output << "\n";
    return result.status;
}
