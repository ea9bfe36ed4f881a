// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include "vnhc/checks.hpp"
#include "vnhc/config.hpp"
#include "vnhc/control.hpp"
#include "vnhc/geometry.hpp"
#include "vnhc/io.hpp"
#include "vnhc/sim.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

using namespace vnhc;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

double now_seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Vec v2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}

// 1. closed-loop invariance at 1000 seeded states, analytic and FD modes
void criterion_invariance() {
    const auto t0 = std::chrono::steady_clock::now();
    const ClosedLoopSystem dp = models::double_pendulum();

    ClosedLoopSystem fd = dp;
    fd.system.metric.derivative = nullptr;
    fd.system.potential_gradient = nullptr;
    fd.constraints.jac_q = nullptr;
    fd.constraints.jac_qdot = nullptr;

    std::mt19937_64 rng(42);
    double worst_analytic = 0, worst_fd = 0;
    for (int t = 0; t < 1000; ++t) {
        const TangentPoint s = random_on_manifold_state(dp, rng);
        worst_analytic = std::max(
            worst_analytic,
            invariance_residual(dp, s, closed_loop_vectorfield(dp, s)).cwiseAbs().maxCoeff());
        worst_fd = std::max(
            worst_fd,
            invariance_residual(fd, s, closed_loop_vectorfield(fd, s)).cwiseAbs().maxCoeff());
    }
    const double elapsed = now_seconds(t0);
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "analytic %.3e < 1e-9, fd %.3e < 1e-5, %.2f s < 5 s", worst_analytic,
                  worst_fd, elapsed);
    report(1, "closed-loop invariance", worst_analytic < 1e-9 && worst_fd < 1e-5 && elapsed < 5,
           detail);
}

// 2-5. sampled identities, reusing the shared verification suite
void criteria_from_checks() {
    CheckOptions opt;
    opt.seed = 42;
    opt.samples = 1000;
    const auto results = run_checks(opt);
    const auto find = [&](const std::string& name) -> const CheckResult& {
        for (const auto& r : results)
            if (r.name == name) return r;
        throw std::logic_error("missing check: " + name);
    };

    char detail[160];
    const auto fmt = [&](const CheckResult& r) {
        std::snprintf(detail, sizeof detail, "max residual %.3e, tol %.0e", r.max_residual,
                      r.tolerance);
        return detail;
    };

    const auto& t2 = find("symplectic_characterization");
    report(2, "symplectic characterization", t2.pass, fmt(t2));
    const auto& l2 = find("sharp_map_agreement");
    report(3, "sharp-map agreement on lifted one-forms", l2.pass, fmt(l2));
    const auto& l1a = find("lift_metric_vertical_complete");
    const auto& l1b = find("lift_metric_vertical_vertical");
    std::snprintf(detail, sizeof detail, "pairing %.3e < 1e-8, vertical %.3e < 1e-12",
                  l1a.max_residual, l1b.max_residual);
    report(4, "complete-lift metric identities", l1a.pass && l1b.pass, detail);
    const auto& p3 = find("projection_formulation");
    const auto& pa = find("projector_algebra");
    std::snprintf(detail, sizeof detail, "field gap %.3e < 1e-10, algebra %.3e < 1e-10",
                  p3.max_residual, pa.max_residual);
    report(5, "projection formulation", p3.pass && pa.pass, detail);
}

// 6. inputs spanning S-perp reproduce the Chetaev dynamics
void criterion_chetaev_equivalence() {
    const ClosedLoopSystem aff = models::double_pendulum_affine();
    const ChetaevSystem chs{aff.system, aff.constraints};

    std::mt19937_64 rng(42);
    double worst_field = 0;
    for (int t = 0; t < 200; ++t) {
        const TangentPoint s = random_on_manifold_state(aff, rng);
        worst_field = std::max(
            worst_field, (closed_loop_vectorfield(aff, s) - chetaev_vectorfield(chs, s))
                             .cwiseAbs()
                             .maxCoeff());
    }

    const TangentPoint init =
        project_velocities(aff.constraints, TangentPoint(v2(0.3, 0.1), v2(0.0, 2.0)), {0});
    const VectorField closed = [&](const TangentPoint& s) {
        return closed_loop_vectorfield(aff, s);
    };
    const VectorField chet = [&](const TangentPoint& s) {
        return chetaev_vectorfield(chs, s);
    };
    const Trajectory a = simulate(closed, {}, init, 0.01, 100);
    const Trajectory b = simulate(chet, {}, init, 0.01, 100);
    const double worst_traj =
        a.ok() && b.ok() ? (a.states - b.states).cwiseAbs().maxCoeff() : 1.0;

    char detail[160];
    std::snprintf(detail, sizeof detail, "field gap %.3e < 1e-9, trajectory gap %.3e < 1e-8",
                  worst_field, worst_traj);
    report(6, "Chetaev equivalence for S-perp inputs", worst_field < 1e-9 && worst_traj < 1e-8,
           detail);
}

// 7. the reference double-pendulum run: dissipation, bounded drift,
//    approach to the hanging equilibrium
void criterion_reference_run() {
    const auto t0 = std::chrono::steady_clock::now();
    const ClosedLoopSystem dp = models::double_pendulum();
    const TangentPoint init =
        project_velocities(dp.constraints, TangentPoint(v2(0.4, 0.0), v2(0.0, 10.0)), {0});

    const VectorField field = [&](const TangentPoint& s) {
        return closed_loop_vectorfield(dp, s);
    };
    Monitors mon;
    mon.energy = [&](const TangentPoint& s) { return energy(dp.system, s); };
    mon.constraint = [&](const TangentPoint& s) { return dp.constraints(s); };

    const Trajectory run = simulate(field, mon, init, 0.1, 100);
    const Trajectory half = simulate(field, mon, init, 0.05, 200);
    const double elapsed = now_seconds(t0);

    bool pass = run.ok() && half.ok();
    double max_phi = -1, drift_shrink = -1, first_mean = 0, last_mean = 0;
    bool dissipates = false;
    if (pass) {
        dissipates = run.energy[100] < run.energy[0];
        max_phi = run.residuals.cwiseAbs().maxCoeff();
        const double max_phi_half = half.residuals.cwiseAbs().maxCoeff();
        // fourth-order drift: halving the step must shrink the worst
        // constraint violation by at least an order of magnitude
        drift_shrink = max_phi / max_phi_half;

        for (int k = 0; k <= 25; ++k)
            first_mean += std::abs(run.states(k, 0)) + std::abs(run.states(k, 1));
        for (int k = 75; k <= 100; ++k)
            last_mean += std::abs(run.states(k, 0)) + std::abs(run.states(k, 1));
        first_mean /= 26;
        last_mean /= 26;
        pass = dissipates && max_phi < 0.1 && drift_shrink >= 10.0 &&
               last_mean < first_mean && elapsed < 1.0;
    }
    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "dissipates %d, max|phi| %.3e < 0.1, drift shrink x%.2f >= 10, "
                  "|q| mean %.3f -> %.3f, %.2f s < 1 s",
                  dissipates, max_phi, drift_shrink, first_mean, last_mean, elapsed);
    report(7, "reference closed-loop run", pass, detail);
}

// 8. fourth-order global convergence on the harmonic oscillator
void criterion_integrator_order() {
    const VectorField harmonic = [](const TangentPoint& s) {
        BundleVector g(2);
        g << s.qdot[0], -s.q[0];
        return g;
    };
    const double horizon = 2.0;
    const std::vector<double> hs = {0.1, 0.05, 0.025, 0.0125};
    double sum_x = 0, sum_y = 0, sum_xx = 0, sum_xy = 0;
    for (const double h : hs) {
        TangentPoint s((Vec(1) << 1.0).finished(), (Vec(1) << 0.0).finished());
        const int steps = static_cast<int>(std::round(horizon / h));
        for (int k = 0; k < steps; ++k) s = rk4_step(harmonic, s, h);
        const double x = std::log(h);
        const double y = std::log(std::abs(s.q[0] - std::cos(horizon)));
        sum_x += x;
        sum_y += y;
        sum_xx += x * x;
        sum_xy += x * y;
    }
    const double n = static_cast<double>(hs.size());
    const double slope = (n * sum_xy - sum_x * sum_y) / (n * sum_xx - sum_x * sum_x);
    char detail[120];
    std::snprintf(detail, sizeof detail, "slope %.3f in [3.7, 4.3]", slope);
    report(8, "integrator order", std::abs(slope - 4.0) < 0.3, detail);
}

// 9. unit-speed particle stays on a straight line at unit speed
void criterion_chetaev_oracle() {
    const ChetaevSystem chs = models::unit_speed_particle();
    const VectorField field = [&](const TangentPoint& s) {
        return chetaev_vectorfield(chs, s);
    };
    TangentPoint s(v2(0, 0), v2(1, 0));
    double worst_q2 = 0, worst_speed = 0;
    for (int k = 0; k < 1000; ++k) {
        s = rk4_step(field, s, 0.01);
        worst_q2 = std::max(worst_q2, std::abs(s.q[1]));
        worst_speed = std::max(worst_speed, std::abs(s.qdot.squaredNorm() - 1.0));
    }
    char detail[120];
    std::snprintf(detail, sizeof detail, "|q2| %.3e < 1e-10, speed drift %.3e < 1e-8",
                  worst_q2, worst_speed);
    report(9, "Chetaev oracle", worst_q2 < 1e-10 && worst_speed < 1e-8, detail);
}

}  // namespace

int main() {
    criterion_invariance();
    criteria_from_checks();
    criterion_chetaev_equivalence();
    criterion_reference_run();
    criterion_integrator_order();
    criterion_chetaev_oracle();

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
