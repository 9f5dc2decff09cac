#pragma once

// Subcommands of the `mediocre` tool. Each returns the process exit status and
// writes CSV to `out` and diagnostics to `err`, so tests can drive them
// without spawning a process.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mediocre/harness.hpp"

namespace mediocre::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_monte_carlo_fail = 3;

int cmd_table(const std::string& which, std::ostream& out, std::ostream& err);

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct BenchOptions {
    RunConfig config; ///< config.seed is unused
    std::uint64_t trials = 1;
    std::uint64_t seed_base = 0;
    bool fr_median_baseline = false;
    unsigned threads = 1;
};

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

int cmd_lower_bound(long long i, long long j, std::ostream& out, std::ostream& err);

int cmd_plot_data(double from, double to, double step, std::ostream& out, std::ostream& err);

/// Thread cap from MEDIOCRE_THREADS; 1 when unset. Empty optional when the
/// variable is set but is not a positive integer.
std::optional<unsigned> threads_from_environment();

/// Parses a full command line (args[0] is the program name) and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mediocre::cli
