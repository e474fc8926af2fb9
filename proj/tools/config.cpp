#include "config.hpp"

#include "CLI11.hpp"

#include <bit>
#include <map>

namespace hcycle::cli {

void validate(const RunConfig& config)
{
    if (config.modes < 64) throw ConfigError("modes must be at least 64, got " + std::to_string(config.modes));
    if (config.grid < 256 || !std::has_single_bit(config.grid))
        throw ConfigError("grid must be a power of two >= 256, got " + std::to_string(config.grid));
    if (config.quad != 0 && config.quad < config.modes)
        throw ConfigError("quad must be 0 or at least the mode count, got " + std::to_string(config.quad));
}

void add_run_options(CLI::App& app, RunConfig& config)
{
    const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
    app.add_option("--modes,-N", config.modes, "Hermite modes in the truncation")->capture_default_str();
    app.add_option("--grid,-M", config.grid, "Samples per coefficient function")->capture_default_str();
    app.add_option("--quad,-K", config.quad, "Quadrature points (0 = 8N+1)")->capture_default_str();
    app.add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("csv");
    app.add_option("--output,-o", config.output, "Output file (default stdout)");
    app.set_config("--config", "", "key=value file; flags on the command line take precedence");
}

std::string to_string(OutputFormat f)
{
    return f == OutputFormat::csv ? "csv" : "json";
}

}  // namespace hcycle::cli
