#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tropical/serialize.hpp"

namespace tropical {

enum ExitCode : int {
    kExitPass = 0,
    kExitAssertion = 1, // a verifier check failed: implementation bug
    kExitUsage = 2,
    kExitResource = 3,
};

struct RunConfig {
    std::string command;
    std::optional<std::string> graph_path;
    std::vector<std::string> fixtures;
    std::vector<std::string> divisors; // "K", a file path, or inline "chip ..." text
    std::optional<int> resolution;     // command-dependent default, see effective_resolution()
    std::optional<std::int64_t> degree_cap;
    std::size_t budget = 10000;
    std::uint64_t seed = 0;
    std::string format = "json";
    unsigned jobs = 1;
    std::string lengths = "unit";       // unit | random:<max denominator>
    std::string method = "recursive";   // rank only: recursive | brute-force | both
};

const std::vector<std::string>& known_commands();

// 2 for the g^1_2 based commands (g12, clifford-scan, low-genus-check, hunt), else 1.
int effective_resolution(const RunConfig& config);

// Throws UsageError on unknown commands, bad values or conflicting flags.
// Returns nullopt when help was requested (help text goes to `out`).
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out);

struct RunOutcome {
    int exit_code = kExitPass;
    Json report;
};

/// Executes one command. Never throws for domain errors: they are turned
/// into a report with an "error" field and the matching exit code. The
/// "runtime" object holds the only run-dependent fields (timing and jobs).
RunOutcome run_command(const RunConfig& config);

std::string render(const Json& report, const std::string& format);

// Full CLI: parse, run, print. Returns the process exit status.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tropical
