#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "equihitch/errors.hpp"
#include "equihitch/report.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw equihitch::input_error("cannot open jobspec file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

int thread_cap() {
    if (const char* env = std::getenv("EQUIHITCH_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equihitch: invariants of moduli of group-invariant bundles on Galois covers"};
    app.require_subcommand(1);

    const char* const commands[] = {"validate", "dim",       "hitchin",  "classify",
                                    "enumerate", "verify-local", "parabolic", "report"};
    const char* const descriptions[] = {
        "check the cover data and report violations",
        "moduli dimension breakdown, both forms",
        "Hitchin base table W_i, total, and the dimension identity",
        "smoothness verdicts, shape classes, induced types, quotient genus",
        "shift-equivalence classes of global types with dim/smoothness summary",
        "randomized check of the local valuation bound",
        "parabolic translation with exact degree and slope",
        "all applicable sections in one run"};

    struct Parsed {
        std::string file;
        bool json = false;
        bool csv = false;
        std::optional<std::uint64_t> seed;
        std::optional<int> trials;
        std::optional<int> truncation;
        int max_rank = 6;
    } parsed;

    for (std::size_t c = 0; c < std::size(commands); ++c) {
        CLI::App* sub = app.add_subcommand(commands[c], descriptions[c]);
        sub->add_option("jobspec", parsed.file, "jobspec JSON file, or - for stdin")->required();
        sub->add_flag("--json", parsed.json, "emit the full report as JSON");
        sub->add_flag("--csv", parsed.csv, "emit tabular sections as CSV");
        sub->add_option_function<std::uint64_t>(
            "--seed", [&parsed](std::uint64_t v) { parsed.seed = v; }, "verification seed");
        sub->add_option_function<int>(
            "--trials", [&parsed](int v) { parsed.trials = v; }, "verification trials");
        sub->add_option_function<int>(
            "--truncation", [&parsed](int v) { parsed.truncation = v; },
            "truncation order for local models");
        sub->add_option("--max-r", parsed.max_rank, "enumeration rank cap")->capture_default_str();
    }

    CLI11_PARSE(app, argc, argv);

    equihitch::RunOptions options;
    options.command = app.get_subcommands().front()->get_name();
    options.seed_override = parsed.seed;
    options.trials_override = parsed.trials;
    options.truncation_override = parsed.truncation;
    options.max_rank = parsed.max_rank;
    options.threads = thread_cap();
    if (parsed.json && parsed.csv) {
        std::cerr << "error: --json and --csv are mutually exclusive\n";
        return 1;
    }
    options.format = parsed.json   ? equihitch::OutputFormat::Json
                     : parsed.csv ? equihitch::OutputFormat::Csv
                                  : equihitch::OutputFormat::Text;

    try {
        options.input_text = read_input(parsed.file);
    } catch (const equihitch::input_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }

    const equihitch::RunResult result = equihitch::run_command(options);
    std::cout << result.output;
    if (!result.error.empty()) std::cerr << result.error;
    return result.exit_code;
}
