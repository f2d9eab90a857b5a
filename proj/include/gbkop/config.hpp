#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gbkop {

enum class Command { Moments, Converge, Rate, Voronovskaja, Derivative, VerifyAll };

std::string command_name(Command c);
Command command_from_name(const std::string& name);

/// Parsed and validated run description. Defaults are materialized on parse,
/// so printing a parsed config always yields a complete document.
struct RunConfig {
    Command command = Command::VerifyAll;
    std::string function; // catalog name; required for function-driven commands
    double a = 1.0;
    double eps = 1e-12;
    std::vector<int> n_list = {10, 20, 40, 80, 160, 320, 640};
    std::vector<std::pair<double, double>> points = {{1.0, 1.0}};
    double grid_start = 0.0;
    double grid_step = 0.25;
    double grid_stop = 10.0;
    double shift_resolution = 0.01;
    std::string variant = "derivative"; // rate command: "derivative" or "modulus"
    std::string out_dir = "out";

    bool needs_function() const;
    void validate() const;
};

struct ConfigError : std::runtime_error {
    int line;
    ConfigError(int line_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ": " + message),
          line(line_) {}
};

/// Line-based key = value grammar with one [command] section. Unknown keys,
/// malformed numbers, and domain violations are reported with line numbers.
/// '#' starts a comment.
RunConfig parse_config(const std::string& text);

/// Canonical printer; parse(print(c)) == c and print o parse is the identity
/// on canonical documents.
std::string print_config(const RunConfig& config);

} // namespace gbkop
