#ifndef VNHC_CONFIG_HPP
#define VNHC_CONFIG_HPP

#include "vnhc/models.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vnhc {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Minimal TOML reader covering the subset used by run configurations:
// [section] headers, key = value lines, values that are strings, booleans,
// numbers or flat arrays of numbers, and # comments. Keys are returned
// flattened as "section.key".
struct TomlValue {
    std::string str;
    std::vector<double> numbers;  // scalars are stored as a 1-element array
    bool is_string = false;
    bool is_array = false;
    int order = 0;  // position of the key in the source file

    double number() const;
    long integer() const;
};

std::map<std::string, TomlValue> parse_toml(const std::string& text);
std::map<std::string, TomlValue> load_toml(const std::string& path);

// A simulation run description.
struct RunConfig {
    std::string model = "double_pendulum";
    models::DoublePendulumParams params;

    Vec q0;
    Vec qdot0;
    std::vector<int> solve_indices;  // velocity entries solved from phi = 0

    double h = 0.1;
    int steps = 100;

    std::string derivative_mode = "analytic";  // "analytic" | "fd"
    double h_fd = 1e-6;

    std::uint64_t seed = 42;
    std::string out_dir = ".";
};

RunConfig run_config_from_toml(const std::map<std::string, TomlValue>& kv);
RunConfig load_run_config(const std::string& path);

// Sweep grid: named initial-condition axes (q1.., dq1..) with their values.
struct SweepGrid {
    std::vector<std::pair<std::string, std::vector<double>>> axes;

    std::size_t points() const;
    // Overrides for grid point i (row-major over the axes).
    std::vector<std::pair<std::string, double>> point(std::size_t i) const;
};

SweepGrid load_sweep_grid(const std::string& path);

// Builds the configured model; in "fd" mode the analytic derivative closures
// are dropped so everything differentiates numerically at step h_fd.
ClosedLoopSystem build_model(const RunConfig& config);

}  // namespace vnhc

#endif
