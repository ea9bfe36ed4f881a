// Command-line front end: simulate a model, run the verification suite, or
// sweep a grid of initial conditions.
//
// Exit codes: 0 ok, 1 config error, 2 runtime (transversality/singularity)
// error, 3 verification failure.

#include "vnhc/checks.hpp"
#include "vnhc/config.hpp"
#include "vnhc/control.hpp"
#include "vnhc/io.hpp"
#include "vnhc/sim.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <thread>

namespace fs = std::filesystem;
using namespace vnhc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitVerification = 3;

int worker_count() {
    if (const char* env = std::getenv("VNHC_WORKERS")) {
        const int k = std::atoi(env);
        if (k > 0) return k;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

enum class FieldKind { ClosedLoop, Chetaev, Free };

struct PreparedRun {
    ClosedLoopSystem cls;
    ChetaevSystem chs;  // used when kind == Chetaev
    FieldKind kind = FieldKind::ClosedLoop;
    VectorField field;
    Monitors monitors;
    TangentPoint initial;
};

PreparedRun prepare(const RunConfig& config, bool free_dynamics) {
    PreparedRun run;
    run.cls = build_model(config);
    const ClosedLoopSystem& cls = run.cls;

    if (cls.constraints.m == 0 && !free_dynamics)
        throw ConfigError("model has no constraint; use --free");

    if (free_dynamics) {
        run.kind = FieldKind::Free;
    } else if (cls.inputs.m == 0) {
        // constrained but unactuated: classical Chetaev dynamics
        run.kind = FieldKind::Chetaev;
        run.chs = ChetaevSystem{cls.system, cls.constraints};
    }

    TangentPoint s(config.q0, config.qdot0);
    if (!config.solve_indices.empty()) {
        if (cls.constraints.m == 0)
            throw ConfigError("initial.solve given but the model has no constraint");
        s = project_velocities(cls.constraints, s, config.solve_indices);
    }
    run.initial = s;

    const ClosedLoopSystem* clsp = &run.cls;
    const ChetaevSystem* chsp = &run.chs;
    switch (run.kind) {
        case FieldKind::ClosedLoop:
            run.field = [clsp](const TangentPoint& p) { return closed_loop_vectorfield(*clsp, p); };
            run.monitors.control = [clsp](const TangentPoint& p) { return control_law(*clsp, p); };
            run.monitors.invariance = [clsp](const TangentPoint& p) {
                return invariance_residual(*clsp, p, closed_loop_vectorfield(*clsp, p))
                    .cwiseAbs()
                    .maxCoeff();
            };
            break;
        case FieldKind::Chetaev:
            run.field = [chsp](const TangentPoint& p) { return chetaev_vectorfield(*chsp, p); };
            run.monitors.invariance = [clsp, chsp](const TangentPoint& p) {
                return (clsp->constraints.jacobian_full(p) * chetaev_vectorfield(*chsp, p))
                    .cwiseAbs()
                    .maxCoeff();
            };
            break;
        case FieldKind::Free:
            run.field = [clsp](const TangentPoint& p) {
                return free_vectorfield(clsp->system, p);
            };
            break;
    }
    run.monitors.energy = [clsp](const TangentPoint& p) { return energy(clsp->system, p); };
    if (cls.constraints.m > 0)
        run.monitors.constraint = [clsp](const TangentPoint& p) {
            return clsp->constraints(p);
        };
    return run;
}

RunSummary run_and_write(const RunConfig& config, bool free_dynamics, const fs::path& out_dir,
                         const std::string& stem) {
    const auto t0 = std::chrono::steady_clock::now();
    PreparedRun run = prepare(config, free_dynamics);
    const Trajectory traj =
        simulate(run.field, run.monitors, run.initial, config.h, config.steps);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    fs::create_directories(out_dir);
    const int n = static_cast<int>(run.initial.dim());
    const int m = run.cls.constraints.m;
    write_trajectory_csv((out_dir / (stem + ".csv")).string(), traj, n, m);
    const RunSummary summary = summarize(traj, wall);
    write_summary_json((out_dir / (stem + "_summary.json")).string(), summary);
    return summary;
}

int cmd_simulate(const std::string& config_path, const std::string& out_override,
                 bool free_dynamics) {
    RunConfig config = load_run_config(config_path);
    const fs::path out_dir = out_override.empty() ? config.out_dir : out_override;
    const RunSummary summary = run_and_write(config, free_dynamics, out_dir, "trajectory");

    std::cout << "wrote " << (out_dir / "trajectory.csv").string() << "\n"
              << "E(t0) = " << format_double(summary.initial_energy)
              << "  E(tN) = " << format_double(summary.final_energy)
              << "  max|phi| = " << format_double(summary.max_constraint) << "\n";
    if (!summary.ok) {
        std::cerr << "simulation aborted: " << summary.failure << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

int cmd_check(const std::string& config_path, int samples, long seed, bool corrupt_sign,
              const std::string& out_override) {
    RunConfig config = load_run_config(config_path);
    CheckOptions opt;
    opt.seed = seed >= 0 ? static_cast<std::uint64_t>(seed) : config.seed;
    opt.samples = samples;
    opt.corrupt_control_sign = corrupt_sign;

    const std::vector<CheckResult> results = run_checks(opt);
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  samples=" << r.samples
                  << "  residual=" << format_double(r.max_residual)
                  << "  tol=" << format_double(r.tolerance) << "\n";
    }

    const fs::path out_dir = out_override.empty() ? config.out_dir : out_override;
    fs::create_directories(out_dir);
    write_report_json((out_dir / "report.json").string(), results);
    return all_pass(results) ? kExitOk : kExitVerification;
}

int cmd_sweep(const std::string& config_path, const std::string& grid_path,
              const std::string& out_override) {
    const RunConfig base = load_run_config(config_path);
    const SweepGrid grid = load_sweep_grid(grid_path);
    const fs::path out_dir = out_override.empty() ? base.out_dir : out_override;
    fs::create_directories(out_dir);

    const std::size_t total = grid.points();
    std::vector<SweepEntry> entries(total);
    std::atomic<std::size_t> next{0};

    const auto work = [&]() {
        for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
            SweepEntry& entry = entries[i];
            entry.overrides = grid.point(i);
            const std::string stem = "point_" + std::to_string(i);
            entry.csv = stem + ".csv";

            RunConfig config = base;
            try {
                for (const auto& [name, value] : entry.overrides) {
                    const int n = static_cast<int>(config.q0.size());
                    if (name.size() >= 2 && name[0] == 'q')
                        config.q0[std::stoi(name.substr(1)) - 1] = value;
                    else if (name.size() >= 3 && name.rfind("dq", 0) == 0)
                        config.qdot0[std::stoi(name.substr(2)) - 1] = value;
                    else
                        throw ConfigError("unknown grid axis: " + name);
                    (void)n;
                }
                entry.summary = run_and_write(config, false, out_dir, stem);
            } catch (const std::exception& e) {
                entry.summary.ok = false;
                entry.summary.failure = e.what();
            }
        }
    };

    const int workers = std::min<int>(worker_count(), static_cast<int>(total));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    write_sweep_index_json((out_dir / "index.json").string(), entries);
    std::cout << "wrote " << total << " trajectories to " << out_dir.string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual nonholonomic constraint simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, grid_path;
    bool free_dynamics = false, corrupt_sign = false;
    int samples = 1000;
    long seed = -1;

    auto* sim = app.add_subcommand("simulate", "integrate the configured model");
    sim->add_option("--config", config_path, "run configuration (TOML)")->required();
    sim->add_option("--out", out_dir, "output directory (overrides config)");
    sim->add_flag("--free", free_dynamics, "integrate the unconstrained dynamics");

    auto* chk = app.add_subcommand("check", "run the numerical verification suite");
    chk->add_option("--config", config_path, "run configuration (TOML)")->required();
    chk->add_option("--samples", samples, "sample count for sampled properties");
    chk->add_option("--seed", seed, "RNG seed (overrides config)");
    chk->add_option("--out", out_dir, "output directory (overrides config)");
    chk->add_flag("--corrupt-sign", corrupt_sign,
                  "debug: negate the control law; invariance must then fail");

    auto* swp = app.add_subcommand("sweep", "run a grid of initial conditions");
    swp->add_option("--config", config_path, "run configuration (TOML)")->required();
    swp->add_option("--grid", grid_path, "grid specification (TOML)")->required();
    swp->add_option("--out", out_dir, "output directory (overrides config)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(config_path, out_dir, free_dynamics);
        if (chk->parsed()) return cmd_check(config_path, samples, seed, corrupt_sign, out_dir);
        if (swp->parsed()) return cmd_sweep(config_path, grid_path, out_dir);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitConfig;
}
