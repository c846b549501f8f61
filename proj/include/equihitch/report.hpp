#ifndef EQUIHITCH_REPORT_HPP
#define EQUIHITCH_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace equihitch {

enum class OutputFormat { Text, Json, Csv };

// One CLI invocation, already parsed: subcommand, raw input document, format
// and overrides. Kept separate from argv handling so the whole surface is
// testable in-process.
struct RunOptions {
    std::string command;
    std::string input_text;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::uint64_t> seed_override;
    std::optional<int> trials_override;
    std::optional<int> truncation_override;
    int max_rank = 6;
    int threads = 1;
};

struct RunResult {
    std::string output;  // report body (stdout)
    std::string error;   // diagnostic (stderr), set when exit_code != 0
    int exit_code = 0;   // 0 ok, 1 input error, 2 internal-consistency failure
};

// Executes one subcommand deterministically: identical options (including
// seed) produce byte-identical output for any thread count.
RunResult run_command(const RunOptions& options);

} // namespace equihitch

#endif
