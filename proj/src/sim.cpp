#include "vnhc/sim.hpp"

#include <stdexcept>

namespace vnhc {

TangentPoint rk4_step(const VectorField& field, const TangentPoint& state, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("rk4_step: step size must be positive");

    const BundleVector x = state.flatten();
    const BundleVector k1 = field(state);
    const BundleVector k2 = field(TangentPoint::unflatten(x + 0.5 * h * k1));
    const BundleVector k3 = field(TangentPoint::unflatten(x + 0.5 * h * k2));
    const BundleVector k4 = field(TangentPoint::unflatten(x + h * k3));
    return TangentPoint::unflatten(x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

namespace {

void record(Trajectory& traj, const Monitors& monitors, int k, double t,
            const TangentPoint& s) {
    traj.time[k] = t;
    traj.states.row(k) = s.flatten();
    if (monitors.energy) traj.energy[k] = monitors.energy(s);
    if (monitors.control) traj.controls.row(k) = monitors.control(s);
    if (monitors.constraint) traj.residuals.row(k) = monitors.constraint(s);
    if (monitors.invariance) traj.invariance[k] = monitors.invariance(s);
}

void truncate(Trajectory& traj, int rows) {
    traj.time.conservativeResize(rows);
    traj.states.conservativeResize(rows, Eigen::NoChange);
    if (traj.energy.size()) traj.energy.conservativeResize(rows);
    if (traj.controls.cols()) traj.controls.conservativeResize(rows, Eigen::NoChange);
    if (traj.residuals.cols()) traj.residuals.conservativeResize(rows, Eigen::NoChange);
    if (traj.invariance.size()) traj.invariance.conservativeResize(rows);
}

}  // namespace

Trajectory simulate(const VectorField& field, const Monitors& monitors,
                    const TangentPoint& initial, double h, int steps, double t0) {
    if (steps < 0) throw std::invalid_argument("simulate: negative step count");

    const int n = static_cast<int>(initial.dim());
    int m_ctrl = 0, m_res = 0;
    if (monitors.control) m_ctrl = static_cast<int>(monitors.control(initial).size());
    if (monitors.constraint) m_res = static_cast<int>(monitors.constraint(initial).size());

    Trajectory traj;
    traj.time.resize(steps + 1);
    traj.states.resize(steps + 1, 2 * n);
    if (monitors.energy) traj.energy.resize(steps + 1);
    traj.controls.resize(steps + 1, m_ctrl);
    traj.residuals.resize(steps + 1, m_res);
    if (monitors.invariance) traj.invariance.resize(steps + 1);

    TangentPoint s = initial;
    record(traj, monitors, 0, t0, s);

    for (int k = 1; k <= steps; ++k) {
        try {
            s = rk4_step(field, s, h);
            record(traj, monitors, k, t0 + k * h, s);
        } catch (const std::exception& e) {
            truncate(traj, k);
            traj.failure = SimulationFailure{k, std::string("step ") + std::to_string(k) +
                                                    ": " + e.what()};
            return traj;
        }
    }
    return traj;
}

}  // namespace vnhc
