#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
    using numrange::cli::Format;
    using numrange::cli::Subcommand;

    CLI::App app{"numrange: numerical ranges, Kippenhahn curves and elliptical ranges"};
    app.require_subcommand(1);

    numrange::cli::CliConfig config;
    std::string input;
    std::string inline_matrix;
    std::size_t random_dimension = 0;
    std::string format;

    app.add_option("-i,--input", input, "Matrix JSON file");
    app.add_option("-m,--matrix", inline_matrix, "Matrix as an inline JSON literal");
    app.add_option("--random", random_dimension, "Use a seeded random matrix of this dimension")
        ->check(CLI::Range(1, 16));
    app.add_option("-g,--grid", config.grid, "Angular sample count")->check(CLI::Range(3, 10000000));
    app.add_option("-s,--seed", config.seed, "Random seed");
    app.add_option("-t,--tol", config.tol, "Verification tolerance (relative)")
        ->check(CLI::PositiveNumber);
    app.add_option("--samples", config.rayleigh_samples, "Rayleigh samples per check");
    app.add_flag("--outer", config.outer_only, "boundary: emit only the outer branch");
    app.add_option("-o,--output", config.output, "Output file (default: standard output)");
    app.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));

    const std::map<std::string, std::pair<Subcommand, std::string>> subcommands{
        {"ellipse", {Subcommand::ellipse, "Elliptical range of a 2x2 matrix (JSON)"}},
        {"poly", {Subcommand::poly, "Boundary-generating polynomial det(H1 u + H2 v + I w) (JSON)"}},
        {"dual", {Subcommand::dual, "Normalized point conic dual to the pencil polynomial, 2x2 only (JSON)"}},
        {"boundary", {Subcommand::boundary, "Boundary-generating curve samples (CSV)"}},
        {"verify", {Subcommand::verify, "Run the verification checks (JSON reports)"}},
        {"plot", {Subcommand::plot, "Figure of the field of values (SVG)"}},
    };
    for (const auto& [name, entry] : subcommands) {
        app.add_subcommand(name, entry.second)->fallthrough()->callback([&config, sub = entry.first] {
            config.subcommand = sub;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return numrange::cli::kExitParse;
    }

    if (!input.empty()) {
        config.input_path = input;
    }
    if (!inline_matrix.empty()) {
        config.inline_matrix = inline_matrix;
    }
    if (random_dimension != 0) {
        config.random_dimension = random_dimension;
    }
    if (format == "json") {
        config.format = Format::json;
    } else if (format == "csv") {
        config.format = Format::csv;
    } else if (format == "svg") {
        config.format = Format::svg;
    }
    return numrange::cli::run(config, std::cout, std::cerr);
}
