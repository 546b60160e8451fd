#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

namespace infodecomp::cli {

std::optional<AnalysisConfig> parse_args(int argc, const char* const* argv) {
    AnalysisConfig cfg;
    CLI::App app{"Information-theoretic analysis of tabular data", "infodecomp"};
    app.add_option("-c,--command", cfg.command, "entropy | mi | cmi | pid2 | pid3 | te | time-resolved")
        ->required();
    app.add_option("-i,--input", cfg.input, "CSV file, optional header row")->required();
    app.add_option("-t,--target", cfg.target, "target columns, comma separated");
    app.add_option("-s,--sources", cfg.sources, "source groups, ';' between groups, ',' within a group");
    app.add_option("--cond", cfg.cond, "conditioning columns for cmi");
    app.add_option("-b,--bins", cfg.bins, "bins for every column (8) or per column (x:4,y:6)");
    app.add_option("-r,--range", cfg.range, "explicit ranges, column:min:max, comma separated");
    app.add_option("-d,--discrete", cfg.discrete, "'all' or a comma separated list of discrete columns");
    app.add_option("-m,--shifts", cfg.shifts, "number of averaged shifted histograms")->capture_default_str();
    app.add_option("--lag", cfg.lag, "embedding lag for te")->capture_default_str();
    app.add_option("--timepoint", cfg.timepoint, "single time value for time-resolved");
    app.add_option("--time-column", cfg.time_column, "time column for time-resolved")->capture_default_str();
    app.add_option("--measure", cfg.measure, "measure evaluated per timepoint")->capture_default_str();
    app.add_option("-f,--format", cfg.format, "json | text")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw CliError(ExitCode::Config, e.what());
    }
    return cfg;
}

}  // namespace infodecomp::cli
