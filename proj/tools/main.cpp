#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>

#include "bbk/cli.hpp"

int main(int argc, char** argv) {
    using bbk::cli::EngineChoice;
    using bbk::cli::OutputMode;
    using bbk::cli::SideChoice;

    CLI::App app{"Exhaustive maximal biclique enumeration in bipartite graphs"};
    bbk::cli::RunConfig config;
    bool no_trivial = false;

    const std::map<std::string, SideChoice> side_values{
        {"left", SideChoice::Left},
        {"right", SideChoice::Right},
        {"smaller", SideChoice::Smaller},
        {"mean-bidegen", SideChoice::MeanBidegen},
    };
    const std::map<std::string, EngineChoice> engine_values{
        {"bbk", EngineChoice::Bbk},
        {"extended", EngineChoice::Extended},
        {"brute", EngineChoice::Brute},
    };
    const std::map<std::string, OutputMode> mode_values{
        {"list", OutputMode::List},
        {"count", OutputMode::Count},
    };

    app.add_option("--input", config.input_path, "Edge-list file (two labels per line)")
        ->required();
    app.add_option("--side", config.side,
                   "Initiating side: left, right, smaller (default), mean-bidegen")
        ->transform(CLI::CheckedTransformer(side_values, CLI::ignore_case));
    app.add_option("--engine", config.engine, "Search engine: bbk (default), extended, brute")
        ->transform(CLI::CheckedTransformer(engine_values, CLI::ignore_case));
    app.add_option("--output-mode", config.output_mode, "list (default) or count")
        ->transform(CLI::CheckedTransformer(mode_values, CLI::ignore_case));
    app.add_option("--output", config.output_path, "Write results here instead of stdout");
    app.add_option("--stats", config.stats_path, "Write a JSON stats report to this path");
    app.add_flag("--sort-output", config.sort_output,
                 "Sort output lines (list mode only; holds all lines in memory)");
    app.add_flag("--no-trivial", no_trivial, "Suppress the one-sided maximal bicliques");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? bbk::cli::kExitOk : bbk::cli::kExitUsage;
    }
    config.include_trivial = !no_trivial;
    return bbk::cli::run(config, std::cerr);
}
