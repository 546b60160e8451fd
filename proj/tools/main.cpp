#include <iostream>

#include "cli.hpp"
#include "infodecomp/parallel.hpp"

int main(int argc, char** argv) {
    using namespace infodecomp::cli;
    try {
        infodecomp::configure_threads_from_env();
        const auto config = parse_args(argc, argv);
        if (!config) return 0;
        const auto report = run(*config);
        std::cout << (config->format == "text" ? render_text(report) : render_json(report));
        return 0;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::Estimation);
    }
}
