#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace infodecomp::cli {

enum class ExitCode : int {
    Ok = 0,
    Config = 2,
    Malformed = 3,
    Estimation = 4,
    MissingFile = 5,
    EmptyFile = 6,
    NonNumeric = 7,
};

class CliError : public std::runtime_error {
public:
    CliError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

struct CsvTable {
    std::vector<std::string> header;  // empty when the file has no header row
    std::size_t columns = 0;
    std::vector<double> values;       // row-major

    std::size_t rows() const noexcept { return columns == 0 ? 0 : values.size() / columns; }
    /// Header name, or the decimal index when there is no header.
    std::string label(std::size_t column) const;
};

/// Comma-separated numeric table with an optional header row. The first
/// row is a header iff any of its cells is non-numeric.
CsvTable read_csv(const std::string& path);
CsvTable parse_csv_text(const std::string& text);

/// Flags exactly as given on the command line; column references are
/// resolved against the table later.
struct AnalysisConfig {
    std::string command;
    std::string input;
    std::string target;
    std::string sources;
    std::string cond;
    std::string bins;
    std::string range;
    std::string discrete;
    std::size_t shifts = 1;
    std::size_t lag = 1;
    std::optional<double> timepoint;
    std::string time_column = "time";
    std::string measure = "mi";
    std::string format = "json";
};

inline constexpr int kDefaultBins = 10;

/// Parses argv into a config. Returns nullopt after printing help.
std::optional<AnalysisConfig> parse_args(int argc, const char* const* argv);

/// Loads the input and evaluates the requested command.
nlohmann::ordered_json run(const AnalysisConfig& config);
nlohmann::ordered_json run(const AnalysisConfig& config, const CsvTable& table);

/// 12 significant digits, no negative zero.
double round12(double v);

std::string render_json(const nlohmann::ordered_json& report);
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace infodecomp::cli
