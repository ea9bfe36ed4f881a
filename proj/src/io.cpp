#include "vnhc/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace vnhc {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

RunSummary summarize(const Trajectory& traj, double wall_seconds) {
    RunSummary s;
    s.wall_seconds = wall_seconds;
    if (traj.energy.size()) {
        s.initial_energy = traj.energy[0];
        s.final_energy = traj.energy[traj.energy.size() - 1];
    }
    if (traj.residuals.size()) s.max_constraint = traj.residuals.cwiseAbs().maxCoeff();
    if (traj.invariance.size()) s.max_invariance = traj.invariance.cwiseAbs().maxCoeff();
    s.final_state = traj.states.row(traj.states.rows() - 1);
    s.ok = traj.ok();
    if (traj.failure) s.failure = traj.failure->message;
    return s;
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj, int n, int m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);

    out << "t";
    for (int i = 1; i <= n; ++i) out << ",q" << i;
    for (int i = 1; i <= n; ++i) out << ",dq" << i;
    for (int a = 1; a <= m; ++a) out << ",u" << a;
    out << ",E";
    for (int a = 1; a <= m; ++a) out << ",phi" << a;
    out << ",inv_residual\n";

    for (int k = 0; k < traj.time.size(); ++k) {
        out << format_double(traj.time[k]);
        for (int j = 0; j < 2 * n; ++j) out << ',' << format_double(traj.states(k, j));
        for (int a = 0; a < m; ++a)
            out << ',' << format_double(traj.controls.cols() ? traj.controls(k, a) : 0.0);
        out << ',' << format_double(traj.energy.size() ? traj.energy[k] : 0.0);
        for (int a = 0; a < m; ++a)
            out << ',' << format_double(traj.residuals.cols() ? traj.residuals(k, a) : 0.0);
        out << ',' << format_double(traj.invariance.size() ? traj.invariance[k] : 0.0);
        out << '\n';
    }
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);

    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV: " + path);
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) table.header.push_back(cell);

    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    table.rows.resize(rows.size(), table.header.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < table.header.size(); ++j) table.rows(i, j) = rows[i][j];
    return table;
}

namespace {

nlohmann::json summary_json(const RunSummary& s) {
    nlohmann::json j;
    j["initial_energy"] = s.initial_energy;
    j["final_energy"] = s.final_energy;
    j["max_constraint"] = s.max_constraint;
    j["max_invariance_residual"] = s.max_invariance;
    j["final_state"] = std::vector<double>(s.final_state.begin(), s.final_state.end());
    j["wall_seconds"] = s.wall_seconds;
    j["ok"] = s.ok;
    if (!s.ok) j["failure"] = s.failure;
    return j;
}

}  // namespace

void write_summary_json(const std::string& path, const RunSummary& summary) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << summary_json(summary).dump(2) << '\n';
}

void write_report_json(const std::string& path, const std::vector<CheckResult>& results) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
        checks.push_back({{"name", r.name},
                          {"samples", r.samples},
                          {"max_residual", r.max_residual},
                          {"tolerance", r.tolerance},
                          {"pass", r.pass}});
    }
    nlohmann::json j;
    j["checks"] = checks;
    j["all_pass"] = all_pass(results);

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

void write_sweep_index_json(const std::string& path, const std::vector<SweepEntry>& entries) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json overrides;
        for (const auto& [key, value] : e.overrides) overrides[key] = value;
        points.push_back(
            {{"overrides", overrides}, {"csv", e.csv}, {"summary", summary_json(e.summary)}});
    }
    nlohmann::json j;
    j["points"] = points;

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace vnhc
