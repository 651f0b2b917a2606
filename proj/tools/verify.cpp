#include "surfcert/config.hpp"
#include "surfcert/pipeline.hpp"
#include "surfcert/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"exact certification pipeline for the conic-pencil surface construction"};

    std::string builtin, config_path, report_path, format = "text";
    unsigned seed = 0;
    long long prime_bound = -1;

    app.add_option("--builtin", builtin, "run a built-in instance (wu-example)");
    app.add_option("--config", config_path, "path to a declarative config file");
    app.add_option("--report", report_path, "write the report to this path instead of stdout");
    app.add_option("--format", format, "report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--prime-bound", prime_bound, "odd-prime sweep bound (default 50)");
    app.add_option("--seed", seed, "seed for the fiber-degree parameter draws");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (builtin.empty() == config_path.empty()) {
        std::cerr << "exactly one of --builtin or --config is required\n";
        return 2;
    }

    surfcert::PipelineConfig config;
    try {
        if (!builtin.empty()) {
            config = surfcert::builtin_config(builtin);
        } else {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "cannot open config file: " << config_path << "\n";
                return 2;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            config = surfcert::parse_config(ss.str());
        }
        if (prime_bound > 0) config.prime_bound = prime_bound;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    surfcert::VerificationReport report;
    try {
        report = surfcert::run_pipeline(config, {seed});
    } catch (const std::exception& e) {
        std::cerr << "pipeline error: " << e.what() << "\n";
        return 2;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::string out;
    if (format == "json") out = report.to_json().dump(2) + "\n";
    else out = report.to_text(seconds);

    if (report_path.empty()) {
        std::cout << out;
    } else {
        std::ofstream f(report_path);
        if (!f) {
            std::cerr << "cannot write report to " << report_path << "\n";
            return 2;
        }
        f << out;
    }
    return report.pass() ? 0 : 1;
}
