#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace infodecomp::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::optional<double> number(std::string_view cell) {
    cell = trim(cell);
    if (cell.empty()) return std::nullopt;
    if (cell.front() == '+') cell.remove_prefix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || end != cell.data() + cell.size()) return std::nullopt;
    return v;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

}  // namespace

std::string CsvTable::label(std::size_t column) const {
    return header.empty() ? std::to_string(column) : header.at(column);
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(ExitCode::MissingFile, "cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv_text(buf.str());
}

CsvTable parse_csv_text(const std::string& text) {
    std::string_view rest(text);
    if (rest.substr(0, 3) == "\xEF\xBB\xBF") rest.remove_prefix(3);

    CsvTable table;
    bool first = true;
    std::size_t line_no = 0;
    while (!rest.empty()) {
        const auto nl = rest.find('\n');
        const std::string_view line = rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        ++line_no;
        if (trim(line).empty()) continue;

        const auto cells = split(line);
        if (first) {
            first = false;
            table.columns = cells.size();
            bool header = false;
            for (auto c : cells) header = header || !number(c);
            if (header) {
                for (auto c : cells) table.header.emplace_back(trim(c));
                continue;
            }
        }
        if (cells.size() != table.columns)
            throw CliError(ExitCode::Malformed, "line " + std::to_string(line_no) + ": expected " +
                                                    std::to_string(table.columns) + " cells, found " +
                                                    std::to_string(cells.size()));
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto v = number(cells[c]);
            if (!v || !std::isfinite(*v))
                throw CliError(ExitCode::NonNumeric, "line " + std::to_string(line_no) + ", column " +
                                                         std::to_string(c + 1) + ": non-numeric cell '" +
                                                         std::string(trim(cells[c])) + "'");
            table.values.push_back(*v);
        }
    }
    if (table.values.empty()) throw CliError(ExitCode::EmptyFile, "input contains no data rows");
    return table;
}

}  // namespace infodecomp::cli
