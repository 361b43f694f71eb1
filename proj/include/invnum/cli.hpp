#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace invnum {

enum ExitCode : int {
    kExitOk = 0,
    kExitNo = 1,          // decision "no", failed check or rejected certificate
    kExitInputError = 2,
    kExitLimit = 3,       // guard exceeded or timeout
    kExitInternal = 4,
};

struct RunConfig {
    std::string subcommand;
    /// Positional arguments: files, or the construction and its parameters for gen.
    std::vector<std::string> inputs;
    std::optional<std::string> output;
    std::size_t max_k = 8;
    std::optional<double> timeout_seconds;
    bool deterministic = true;
    /// 0 means the available hardware parallelism.
    unsigned workers = 0;
    std::string format = "text";
    std::size_t k = 2;
    std::size_t order = 0;
    std::optional<std::size_t> critical;
    std::optional<std::string> resume;
    std::string suite = "paper";
};

/// Executes one subcommand. JSON goes to `out`, tables and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line into a RunConfig and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace invnum
