#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mobispread::cli {

enum class Subcommand { simulate, meanfield, threshold, sweep, acor };

enum ExitCode : int { exit_ok = 0, exit_usage = 2, exit_runtime = 3, exit_io = 4 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Subcommand subcommand = Subcommand::simulate;
    std::uint32_t size = 128;
    std::vector<double> density{1.0};
    std::vector<double> p{0.5};
    std::vector<double> q{0.05};
    std::uint64_t steps = 0;  ///< 0: 10000, or 50 * size^2 for threshold
    std::uint64_t seed = 1;
    std::uint32_t replicates = 16;
    double f0 = 0.2;
    double resolution = 1.0 / 256.0;
    std::uint64_t thin = 1;
    bool curve = false;
    double tol = 1e-10;
    double window = 7.0;
    std::string input;
    std::string out;  ///< empty: standard output
    unsigned jobs = 0;  ///< 0: all hardware threads

    std::uint64_t effective_steps() const;

    /// Command line that regenerates this run's output. Omits --out and
    /// --jobs, which never change the content.
    std::string canonical_command() const;
};

/// Parses a comma list whose items are numbers or lo:hi:step ranges. Range
/// points are lo + i*step up to hi, rounded to 12 significant digits.
std::vector<double> parse_grid(const std::string& text);

/// argv without the program name. Throws UsageError (message names the
/// offending flag) or HelpRequested.
RunConfig parse_args(std::span<const std::string> args);

/// Runs a parsed configuration. Data goes to `out` unless config.out names a
/// file; diagnostics and progress go to `err`. Returns an ExitCode.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + execute with the process's standard streams.
int run(int argc, char** argv);

}  // namespace mobispread::cli
