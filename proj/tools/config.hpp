#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace CLI {
class App;
}

namespace hcycle::cli {

enum class OutputFormat { csv, json };

/// Settings shared by every subcommand.
struct RunConfig {
    double hbar = 0.3;
    std::size_t modes = 400;   ///< Hermite modes N
    std::size_t grid = 2048;   ///< samples M per coefficient function
    std::size_t quad = 0;      ///< quadrature points K; 0 means 8N + 1
    OutputFormat format = OutputFormat::csv;
    std::string output;        ///< empty writes to stdout

    std::size_t quad_points() const noexcept { return quad ? quad : 8 * modes + 1; }
};

/// Bad but well-formed configuration values.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws ConfigError unless N >= 64 and M is a power of two >= 256.
void validate(const RunConfig& config);

/// Registers --modes, --grid, --quad, --format, --output and --config on app.
/// Values from the key=value file named by --config lose to explicit flags.
void add_run_options(CLI::App& app, RunConfig& config);

std::string to_string(OutputFormat f);

}  // namespace hcycle::cli
