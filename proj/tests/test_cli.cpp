#include <doctest.h>

#include "cli.hpp"
#include "golden_cases.hpp"
#include "infodecomp/dynamics.hpp"
#include "infodecomp/pid.hpp"

using namespace infodecomp;
using namespace infodecomp::cli;

namespace {

const std::string kFixtures = INFODECOMP_FIXTURE_DIR;
const std::string kGolden = INFODECOMP_GOLDEN_DIR;
const std::string kCli = INFODECOMP_CLI_PATH;

ExitCode code_of(auto&& f) {
    try {
        f();
    } catch (const CliError& e) {
        return e.code();
    }
    FAIL("expected a CliError");
    return ExitCode::Ok;
}

AnalysisConfig config(std::string command, std::string target, std::string sources = "") {
    AnalysisConfig c;
    c.command = std::move(command);
    c.target = std::move(target);
    c.sources = std::move(sources);
    return c;
}

const CsvTable& xor_table() {
    static const CsvTable t = parse_csv_text("s1,s2,t\n0,0,0\n0,1,1\n1,0,1\n1,1,0\n");
    return t;
}

}  // namespace

TEST_CASE("csv: header detection and layout") {
    const auto t = parse_csv_text("\xEF\xBB\xBF" "a,b\n1,2\n\n3.5,-4e1\n");
    CHECK(t.header == std::vector<std::string>{"a", "b"});
    CHECK(t.rows() == 2);
    CHECK(t.values == std::vector<double>{1, 2, 3.5, -40});
    CHECK(t.label(1) == "b");

    const auto n = parse_csv_text("1,2,3\n4,5,6\n");
    CHECK(n.header.empty());
    CHECK(n.rows() == 2);
    CHECK(n.label(2) == "2");
}

TEST_CASE("csv: error classes") {
    CHECK(code_of([] { parse_csv_text("a,b\n1,2\n3\n"); }) == ExitCode::Malformed);
    CHECK(code_of([] { parse_csv_text("a,b\n1,2\n3,x\n"); }) == ExitCode::NonNumeric);
    CHECK(code_of([] { parse_csv_text("a,b\n1,nan\n"); }) == ExitCode::NonNumeric);
    CHECK(code_of([] { parse_csv_text(""); }) == ExitCode::EmptyFile);
    CHECK(code_of([] { parse_csv_text("a,b\n"); }) == ExitCode::EmptyFile);
    CHECK(code_of([] { read_csv(kFixtures + "/does_not_exist.csv"); }) == ExitCode::MissingFile);
}

TEST_CASE("config errors map to exit code 2") {
    const auto& t = xor_table();
    auto cfg = config("mi", "t", "t");
    cfg.discrete = "all";
    CHECK(code_of([&] { run(cfg, t); }) == ExitCode::Config);
    CHECK(code_of([&] { run(config("pid2", "t", "s1"), t); }) == ExitCode::Config);
    CHECK(code_of([&] { run(config("mi", "nope", "s1"), t); }) == ExitCode::Config);
    CHECK(code_of([&] { run(config("cmi", "t", "s1"), t); }) == ExitCode::Config);
    CHECK(code_of([&] { run(config("frobnicate", "t", "s1"), t); }) == ExitCode::Config);
    auto bad_bins = config("mi", "t", "s1");
    bad_bins.bins = "0";
    CHECK(code_of([&] { run(bad_bins, t); }) == ExitCode::Config);
    auto bad_range = config("mi", "t", "s1");
    bad_range.range = "s1:1:0";
    CHECK(code_of([&] { run(bad_range, t); }) == ExitCode::Config);
    auto bad_shift = config("mi", "t", "s1");
    bad_shift.shifts = 0;
    CHECK(code_of([&] { run(bad_shift, t); }) == ExitCode::Config);

    const char* argv[] = {"infodecomp", "--command", "mi", "--shifts", "many", "-i", "x.csv"};
    CHECK(code_of([&] { parse_args(7, argv); }) == ExitCode::Config);
}

TEST_CASE("library failures map to exit code 4") {
    auto cfg = config("te", "t", "s1");
    cfg.discrete = "all";
    cfg.lag = 10;
    CHECK(code_of([&] { run(cfg, xor_table()); }) == ExitCode::Estimation);
}

TEST_CASE("argument parsing") {
    const char* argv[] = {"infodecomp", "-c", "pid2", "-i", "f.csv", "-t", "t", "-s", "a;b", "-m", "4", "--timepoint", "1.5"};
    const auto cfg = parse_args(13, argv);
    REQUIRE(cfg);
    CHECK(cfg->command == "pid2");
    CHECK(cfg->sources == "a;b");
    CHECK(cfg->shifts == 4);
    CHECK(cfg->timepoint == 1.5);
    CHECK(cfg->format == "json");

    const char* help[] = {"infodecomp", "--help"};
    CHECK_FALSE(parse_args(2, help));
}

TEST_CASE("xor report") {
    auto cfg = config("pid2", "t", "s1;s2");
    cfg.discrete = "all";
    const auto r = run(cfg, xor_table());
    CHECK(r["atoms"]["{1}{2}"] == 0.0);
    CHECK(r["atoms"]["{1}"] == 0.0);
    CHECK(r["atoms"]["{2}"] == 0.0);
    CHECK(r["atoms"]["{12}"] == 1.0);
    CHECK(r["total_mi_bits"] == 1.0);
    CHECK(r["rows"] == 4);
}

TEST_CASE("columns resolve by name or index") {
    auto by_name = config("mi", "t", "s1,s2");
    by_name.discrete = "all";
    auto by_index = config("mi", "2", "0,1");
    by_index.discrete = "0,1,2";
    CHECK(run(by_name, xor_table())["value_bits"] == run(by_index, xor_table())["value_bits"]);
}

TEST_CASE("reported values agree with the library") {
    const auto table = read_csv(kFixtures + "/continuous.csv");
    auto cfg = config("pid2", "v", "u;w");
    cfg.bins = "u:5,v:6,w:3";
    cfg.shifts = 3;
    const auto r = run(cfg, table);

    DataSet ds(3);
    ds.declare_variable(VariableSpec::continuous(0, 5));
    ds.declare_variable(VariableSpec::continuous(1, 6));
    ds.declare_variable(VariableSpec::continuous(2, 3));
    ds.add_samples(table.values, 3);
    ds.finalize();
    const auto pid = pid_decompose(ds, {1}, {{0}, {2}});
    for (std::size_t i = 0; i < pid.lattice->size(); ++i)
        CHECK(r["raw_atoms"][pid.lattice->node(i).name()].get<double>() == round12(pid.raw_atoms[i]));
    CHECK(r["total_mi_bits"].get<double>() == round12(pid.total_mi.value_bits));
}

TEST_CASE("te report matches the direct conditional mutual information") {
    auto cfg = config("te", "y", "x");
    cfg.discrete = "all";
    const auto r = run(cfg, read_csv(kFixtures + "/copy.csv"));
    CHECK(r["te_bits"] == r["cmi_bits"]);
    CHECK(r["te_bits"].get<double>() == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("time-resolved rejects ragged trials and the time column as a variable") {
    auto cfg = config("time-resolved", "b", "a");
    cfg.bins = "4";
    const auto ragged = parse_csv_text("time,a,b\n0,1,2\n0,2,3\n1,1,1\n");
    CHECK(code_of([&] { run(cfg, ragged); }) == ExitCode::Malformed);
    auto with_time = config("time-resolved", "b", "time");
    CHECK(code_of([&] { run(with_time, ragged); }) == ExitCode::Config);
    cfg.timepoint = 7.0;
    CHECK(code_of([&] { run(cfg, read_csv(kFixtures + "/trials.csv")); }) == ExitCode::Config);
}

TEST_CASE("round12") {
    CHECK(round12(0.1 + 0.2) == 0.3);
    CHECK_FALSE(std::signbit(round12(-0.0)));
    CHECK_FALSE(std::signbit(round12(-1e-300 * 1e-300)));
    CHECK(round12(1.0 / 3.0) == 0.333333333333);
}

TEST_CASE("text rendering flattens keys") {
    auto cfg = config("entropy", "s1");
    cfg.discrete = "all";
    const auto text = render_text(run(cfg, xor_table()));
    CHECK(text.find("value_bits: 1.0\n") != std::string::npos);
    CHECK(text.find("config.target: s1\n") != std::string::npos);
}

TEST_CASE("binary matches golden outputs") {
    const auto cases = golden::load_cases(kGolden);
    REQUIRE(cases.size() >= 8);
    for (const auto& c : cases) {
        CAPTURE(c.name);
        const auto out = golden::run_cli(kCli, kFixtures, c.args);
        CHECK(out.exit_code == 0);
        CHECK(out.stdout_text == golden::slurp(c.golden_path));
    }
}

TEST_CASE("binary exit codes") {
    auto rc = [](std::vector<std::string> args) { return golden::run_cli(kCli, kFixtures, args).exit_code; };
    CHECK(rc({"-c", "mi", "-i", "missing.csv", "-t", "a", "-s", "b"}) == 5);
    CHECK(rc({"-c", "mi", "-i", "empty.csv", "-t", "a", "-s", "b"}) == 6);
    CHECK(rc({"-c", "mi", "-i", "ragged.csv", "-t", "a", "-s", "b"}) == 3);
    CHECK(rc({"-c", "mi", "-i", "nonnumeric.csv", "-t", "a", "-s", "b"}) == 7);
    CHECK(rc({"-c", "mi", "-i", "xor.csv", "-t", "t", "-s", "t"}) == 2);
    CHECK(rc({"--help"}) == 0);
}
