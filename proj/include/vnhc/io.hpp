#ifndef VNHC_IO_HPP
#define VNHC_IO_HPP

#include "vnhc/checks.hpp"
#include "vnhc/sim.hpp"

#include <string>
#include <vector>

namespace vnhc {

// Summary statistics of a finished run; serialized next to the CSV.
struct RunSummary {
    double initial_energy = 0.0;
    double final_energy = 0.0;
    double max_constraint = 0.0;
    double max_invariance = 0.0;
    Vec final_state;
    double wall_seconds = 0.0;
    bool ok = true;
    std::string failure;
};

RunSummary summarize(const Trajectory& traj, double wall_seconds);

// Column layout: t, q1..qn, dq1..dqn, u1..um, E, phi1..phim, inv_residual.
// All values at 17 significant digits.
void write_trajectory_csv(const std::string& path, const Trajectory& traj, int n, int m);

// Parsed CSV for round-trip checks.
struct CsvTable {
    std::vector<std::string> header;
    Mat rows;
};
CsvTable read_csv(const std::string& path);

void write_summary_json(const std::string& path, const RunSummary& summary);

void write_report_json(const std::string& path, const std::vector<CheckResult>& results);

// Index entry of a sweep run.
struct SweepEntry {
    std::vector<std::pair<std::string, double>> overrides;
    std::string csv;
    RunSummary summary;
};
void write_sweep_index_json(const std::string& path, const std::vector<SweepEntry>& entries);

std::string format_double(double v);  // %.17g

}  // namespace vnhc

#endif
