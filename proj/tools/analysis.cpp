#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "infodecomp/dynamics.hpp"
#include "infodecomp/error.hpp"

namespace infodecomp::cli {

using nlohmann::ordered_json;

namespace {

const std::set<std::string> kCommands{"entropy", "mi", "cmi", "pid2", "pid3", "te", "time-resolved"};
const std::set<std::string> kMeasures{"entropy", "mi", "cmi", "pid2", "pid3"};

[[noreturn]] void config_error(const std::string& msg) { throw CliError(ExitCode::Config, msg); }

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

template <class T>
std::optional<T> parse_number(const std::string& s) {
    T v{};
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
    return v;
}

std::size_t resolve_column(const CsvTable& t, const std::string& ref) {
    for (std::size_t c = 0; c < t.header.size(); ++c)
        if (t.header[c] == ref) return c;
    if (const auto idx = parse_number<std::size_t>(ref); idx && *idx < t.columns) return *idx;
    config_error("unknown column '" + ref + "'");
}

DimGroup parse_group(const CsvTable& t, const std::string& text, const char* flag) {
    DimGroup g;
    for (const auto& ref : split(text, ',')) {
        if (ref.empty()) config_error(std::string("empty column reference in ") + flag);
        g.push_back(resolve_column(t, ref));
    }
    if (g.empty()) config_error(std::string(flag) + " names no columns");
    return g;
}

std::vector<DimGroup> parse_groups(const CsvTable& t, const std::string& text, const char* flag) {
    std::vector<DimGroup> out;
    if (trim(text).empty()) return out;
    for (const auto& g : split(text, ';')) out.push_back(parse_group(t, g, flag));
    return out;
}

struct ColumnBinning {
    bool discrete = false;
    int bins = kDefaultBins;
    std::optional<Range> range;
};

std::vector<ColumnBinning> parse_binning(const CsvTable& t, const AnalysisConfig& cfg) {
    std::vector<ColumnBinning> out(t.columns);
    for (const auto& entry : split(cfg.bins, ',')) {
        if (entry.empty()) continue;
        const auto colon = entry.rfind(':');
        const std::string count = colon == std::string::npos ? entry : entry.substr(colon + 1);
        const auto b = parse_number<int>(count);
        if (!b || *b < 1) config_error("--bins: invalid bin count in '" + entry + "'");
        if (colon == std::string::npos) {
            for (auto& c : out) c.bins = *b;
        } else {
            out[resolve_column(t, entry.substr(0, colon))].bins = *b;
        }
    }
    for (const auto& entry : split(cfg.range, ',')) {
        if (entry.empty()) continue;
        const auto hi_colon = entry.rfind(':');
        const auto lo_colon = hi_colon == std::string::npos || hi_colon == 0 ? std::string::npos
                                                                              : entry.rfind(':', hi_colon - 1);
        if (lo_colon == std::string::npos) config_error("--range: expected column:min:max, got '" + entry + "'");
        const auto lo = parse_number<double>(entry.substr(lo_colon + 1, hi_colon - lo_colon - 1));
        const auto hi = parse_number<double>(entry.substr(hi_colon + 1));
        if (!lo || !hi || !(*lo < *hi)) config_error("--range: invalid bounds in '" + entry + "'");
        out[resolve_column(t, entry.substr(0, lo_colon))].range = Range{*lo, *hi};
    }
    if (trim(cfg.discrete) == "all") {
        for (auto& c : out) c.discrete = true;
    } else {
        for (const auto& ref : split(cfg.discrete, ','))
            if (!ref.empty()) out[resolve_column(t, ref)].discrete = true;
    }
    return out;
}

void require_disjoint(const std::vector<DimGroup>& groups) {
    std::set<std::size_t> seen;
    for (const auto& g : groups)
        for (auto c : g)
            if (!seen.insert(c).second) config_error("column " + std::to_string(c) + " is assigned to more than one role");
}

ordered_json num(double v) { return round12(v); }

ordered_json labels(const CsvTable& t, const DimGroup& g) {
    ordered_json a = ordered_json::array();
    for (auto c : g) a.push_back(t.label(c));
    return a;
}

std::vector<std::size_t> used_columns(const std::vector<DimGroup>& groups) {
    std::vector<std::size_t> used;
    for (const auto& g : groups) used.insert(used.end(), g.begin(), g.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return used;
}

ordered_json config_echo(const AnalysisConfig& cfg, const CsvTable& t, const DimGroup& target,
                         const std::vector<DimGroup>& sources, const DimGroup& cond,
                         const std::vector<ColumnBinning>& binning, const std::vector<std::size_t>& used) {
    ordered_json c;
    c["input"] = cfg.input;
    c["target"] = labels(t, target);
    ordered_json src = ordered_json::array();
    for (const auto& g : sources) src.push_back(labels(t, g));
    c["sources"] = src;
    c["cond"] = labels(t, cond);
    ordered_json bins = ordered_json::object(), ranges = ordered_json::object(), discrete = ordered_json::array();
    for (auto col : used) {
        const auto& b = binning[col];
        if (b.discrete) {
            discrete.push_back(t.label(col));
            continue;
        }
        bins[t.label(col)] = b.bins;
        if (b.range) ranges[t.label(col)] = ordered_json::array({num(b.range->min), num(b.range->max)});
    }
    c["bins"] = bins;
    c["ranges"] = ranges;
    c["discrete"] = discrete;
    c["shifts"] = cfg.shifts;
    if (cfg.command == "te") c["lag"] = cfg.lag;
    if (cfg.command == "time-resolved") {
        c["measure"] = cfg.measure;
        c["time_column"] = cfg.time_column;
        c["timepoint"] = cfg.timepoint ? num(*cfg.timepoint) : ordered_json(nullptr);
    }
    c["format"] = cfg.format;
    return c;
}

void put_measure(ordered_json& out, const MeasureValue& v) {
    out["value_bits"] = num(v.value_bits);
    ordered_json per = ordered_json::array();
    for (double x : v.per_shift_values) per.push_back(num(x));
    out["per_shift_values"] = per;
    out["clamped"] = v.clamped;
}

void put_pid(ordered_json& out, const PIDResult& r) {
    const auto& l = *r.lattice;
    out["total_mi_bits"] = num(r.total_mi.value_bits);
    ordered_json atoms = ordered_json::object(), raw = ordered_json::object();
    for (std::size_t i = 0; i < l.size(); ++i) {
        atoms[l.node(i).name()] = num(r.atoms[i]);
        raw[l.node(i).name()] = num(r.raw_atoms[i]);
    }
    out["atoms"] = atoms;
    out["raw_atoms"] = raw;
    ordered_json per = ordered_json::array();
    for (const auto& shift : r.per_shift_atoms) {
        ordered_json a = ordered_json::object();
        for (std::size_t i = 0; i < l.size(); ++i) a[l.node(i).name()] = num(shift[i]);
        per.push_back(a);
    }
    out["per_shift_atoms"] = per;
    out["redundancy"] = num(r.redundancy());
    ordered_json unique = ordered_json::array();
    for (int s = 1; s <= l.sources(); ++s) unique.push_back(num(r.unique(s)));
    out["unique"] = unique;
    out["synergy"] = num(r.synergy());
}

void put_value(ordered_json& out, const TimeResolvedValue& v) {
    if (const auto* m = std::get_if<MeasureValue>(&v))
        put_measure(out, *m);
    else
        put_pid(out, std::get<PIDResult>(v));
}

MeasureRequest::Kind kind_of(const std::string& measure) {
    if (measure == "entropy") return MeasureRequest::Kind::Entropy;
    if (measure == "mi") return MeasureRequest::Kind::MutualInfo;
    if (measure == "cmi") return MeasureRequest::Kind::ConditionalMutualInfo;
    return MeasureRequest::Kind::Pid;
}

struct Roles {
    DimGroup target;
    std::vector<DimGroup> sources;
    DimGroup cond;
};

Roles parse_roles(const AnalysisConfig& cfg, const CsvTable& t, const std::string& measure) {
    Roles r;
    if (trim(cfg.target).empty()) config_error(measure + " requires --target");
    r.target = parse_group(t, cfg.target, "--target");
    r.sources = parse_groups(t, cfg.sources, "--sources");
    if (!trim(cfg.cond).empty()) r.cond = parse_group(t, cfg.cond, "--cond");

    auto expect_sources = [&](std::size_t n) {
        if (r.sources.size() != n)
            config_error(measure + " requires " + std::to_string(n) + " source group(s) in --sources, got " +
                         std::to_string(r.sources.size()));
    };
    if (measure == "entropy") expect_sources(0);
    if (measure == "mi" || measure == "cmi" || measure == "te") expect_sources(1);
    if (measure == "pid2") expect_sources(2);
    if (measure == "pid3") expect_sources(3);
    if (measure == "cmi" && r.cond.empty()) config_error("cmi requires --cond");
    if (measure != "cmi" && !r.cond.empty()) config_error("--cond is only valid for cmi");
    if (measure == "te" && (r.target.size() != 1 || r.sources[0].size() != 1))
        config_error("te takes a single source column and a single target column");

    std::vector<DimGroup> all{r.target};
    all.insert(all.end(), r.sources.begin(), r.sources.end());
    if (!r.cond.empty()) all.push_back(r.cond);
    require_disjoint(all);
    return r;
}

std::vector<DimGroup> request_groups(const Roles& r) {
    std::vector<DimGroup> g{r.target};
    g.insert(g.end(), r.sources.begin(), r.sources.end());
    if (!r.cond.empty()) g.push_back(r.cond);
    return g;
}

DataSet build_dataset(const CsvTable& t, const std::vector<std::size_t>& used,
                      const std::vector<ColumnBinning>& binning, std::size_t shifts) {
    DataSet ds(shifts);
    for (auto c : used) {
        const auto& b = binning[c];
        ds.declare_variable(b.discrete ? VariableSpec::discrete(c) : VariableSpec::continuous(c, b.bins, b.range));
    }
    const std::size_t width = used.back() + 1;
    std::vector<double> rows;
    rows.reserve(t.rows() * width);
    for (std::size_t r = 0; r < t.rows(); ++r) {
        const auto begin = t.values.begin() + static_cast<std::ptrdiff_t>(r * t.columns);
        rows.insert(rows.end(), begin, begin + static_cast<std::ptrdiff_t>(width));
    }
    ds.add_samples(rows, width);
    ds.finalize();
    return ds;
}

ordered_json run_time_resolved(const AnalysisConfig& cfg, const CsvTable& t, ordered_json report,
                               const std::vector<ColumnBinning>& binning) {
    if (!kMeasures.count(cfg.measure)) config_error("--measure must be one of entropy, mi, cmi, pid2, pid3");
    const std::size_t time_col = resolve_column(t, cfg.time_column);
    const Roles roles = parse_roles(cfg, t, cfg.measure);
    for (const auto& g : request_groups(roles))
        if (std::find(g.begin(), g.end(), time_col) != g.end())
            config_error("the time column cannot be part of a measured group");

    std::map<double, std::vector<std::size_t>> by_time;
    for (std::size_t r = 0; r < t.rows(); ++r) by_time[t.values[r * t.columns + time_col]].push_back(r);
    const std::size_t trials = by_time.begin()->second.size();
    for (const auto& [time, rows] : by_time)
        if (rows.size() != trials)
            throw CliError(ExitCode::Malformed, "timepoint " + std::to_string(time) + " has " +
                                                    std::to_string(rows.size()) + " rows, expected " +
                                                    std::to_string(trials));

    std::vector<double> times;
    std::vector<double> values(trials * by_time.size() * t.columns);
    std::size_t ti = 0;
    for (const auto& [time, rows] : by_time) {
        times.push_back(time);
        for (std::size_t tr = 0; tr < trials; ++tr)
            std::copy_n(t.values.begin() + static_cast<std::ptrdiff_t>(rows[tr] * t.columns), t.columns,
                        values.begin() + static_cast<std::ptrdiff_t>((tr * by_time.size() + ti) * t.columns));
        ++ti;
    }
    const TrialTensor tensor(trials, times.size(), t.columns, std::move(values));

    MeasureRequest request;
    request.kind = kind_of(cfg.measure);
    request.groups = request_groups(roles);
    request.shifts = cfg.shifts;
    for (const auto& b : binning) request.binning.push_back({b.discrete, b.bins, b.range});

    std::vector<std::size_t> selected;
    if (cfg.timepoint) {
        const auto it = std::find(times.begin(), times.end(), *cfg.timepoint);
        if (it == times.end()) config_error("--timepoint does not match any value of the time column");
        selected.push_back(static_cast<std::size_t>(it - times.begin()));
    } else {
        for (std::size_t i = 0; i < times.size(); ++i) selected.push_back(i);
    }

    report["config"] = config_echo(cfg, t, roles.target, roles.sources, roles.cond, binning,
                                   used_columns(request.groups));
    report["rows"] = t.rows();
    report["trials"] = trials;
    std::uint64_t clamped = 0;
    ordered_json series = ordered_json::array();
    for (auto i : selected) {
        const DataSet ds = timepoint_dataset(tensor, i, request);
        ordered_json entry;
        entry["time"] = num(times[i]);
        entry["clamp_counter"] = ds.clamp_count();
        put_value(entry, evaluate(ds, request));
        clamped += ds.clamp_count();
        series.push_back(entry);
    }
    report["clamp_counter"] = clamped;
    report["timepoints"] = series;
    return report;
}

ordered_json run_checked(const AnalysisConfig& cfg, const CsvTable& t) {
    if (!kCommands.count(cfg.command)) config_error("unknown command '" + cfg.command + "'");
    if (cfg.format != "json" && cfg.format != "text") config_error("--format must be json or text");
    if (cfg.shifts < 1) config_error("--shifts must be >= 1");
    if (cfg.lag < 1) config_error("--lag must be >= 1");

    const auto binning = parse_binning(t, cfg);
    ordered_json report;
    report["command"] = cfg.command;
    if (cfg.command == "time-resolved") return run_time_resolved(cfg, t, report, binning);

    const Roles roles = parse_roles(cfg, t, cfg.command);
    const auto used = used_columns(request_groups(roles));
    report["config"] = config_echo(cfg, t, roles.target, roles.sources, roles.cond, binning, used);

    if (cfg.command == "te") {
        auto series = [&](std::size_t col) {
            std::vector<double> s(t.rows());
            for (std::size_t r = 0; r < t.rows(); ++r) s[r] = t.values[r * t.columns + col];
            return s;
        };
        const auto x_col = roles.sources[0][0], y_col = roles.target[0];
        TransferEntropyConfig te;
        te.lag = cfg.lag;
        te.shifts = cfg.shifts;
        te.source = {binning[x_col].discrete, binning[x_col].bins, binning[x_col].range};
        te.target = {binning[y_col].discrete, binning[y_col].bins, binning[y_col].range};
        const auto r = transfer_entropy(series(x_col), series(y_col), te);
        report["rows"] = r.rows;
        report["clamp_counter"] = r.clamp_count;
        report["te_bits"] = num(r.te_bits);
        report["cmi_bits"] = num(r.cmi_bits);
        put_pid(report, r.pid);
        return report;
    }

    const DataSet ds = build_dataset(t, used, binning, cfg.shifts);
    report["rows"] = ds.row_count();
    report["clamp_counter"] = ds.clamp_count();
    if (cfg.command == "entropy") {
        put_measure(report, entropy(ds, roles.target));
    } else if (cfg.command == "mi") {
        put_measure(report, mutual_info(ds, roles.target, roles.sources[0]));
    } else if (cfg.command == "cmi") {
        put_measure(report, conditional_mutual_info(ds, roles.target, roles.sources[0], roles.cond));
    } else {
        put_pid(report, pid_decompose(ds, roles.target, roles.sources));
    }
    return report;
}

void flatten(const std::string& prefix, const ordered_json& v, std::ostringstream& out) {
    if (v.is_object()) {
        for (const auto& [k, child] : v.items()) flatten(prefix.empty() ? k : prefix + "." + k, child, out);
        return;
    }
    if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(prefix + "[" + std::to_string(i) + "]", v[i], out);
        return;
    }
    out << prefix << ":";
    if (v.is_array()) {
        for (const auto& x : v) out << " " << (x.is_string() ? x.get<std::string>() : x.dump());
    } else {
        out << " " << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << "\n";
}

}  // namespace

double round12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

ordered_json run(const AnalysisConfig& config, const CsvTable& table) {
    try {
        return run_checked(config, table);
    } catch (const Error& e) {
        throw CliError(ExitCode::Estimation, e.what());
    }
}

ordered_json run(const AnalysisConfig& config) {
    if (!kCommands.count(config.command)) config_error("unknown command '" + config.command + "'");
    return run(config, read_csv(config.input));
}

std::string render_json(const ordered_json& report) { return report.dump(2) + "\n"; }

std::string render_text(const ordered_json& report) {
    std::ostringstream out;
    flatten("", report, out);
    return out.str();
}

}  // namespace infodecomp::cli
