#include "vnhc/dynamics.hpp"

namespace vnhc {

double lagrangian(const MechanicalSystem& system, const TangentPoint& state) {
    const double kinetic = 0.5 * state.qdot.dot(system.metric(state.q) * state.qdot);
    return kinetic - system.potential(state.q);
}

double energy(const MechanicalSystem& system, const TangentPoint& state) {
    const double kinetic = 0.5 * state.qdot.dot(system.metric(state.q) * state.qdot);
    return kinetic + system.potential(state.q);
}

BundleCovector energy_differential_fd(const MechanicalSystem& system, const TangentPoint& state,
                                      double h) {
    const int n = system.dim();
    BundleCovector d(2 * n);
    const double hq = fd_scale(h, state.q);
    const double hv = fd_scale(h, state.qdot);
    TangentPoint sp = state, sm = state;
    for (int k = 0; k < n; ++k) {
        sp.q[k] = state.q[k] + hq;
        sm.q[k] = state.q[k] - hq;
        d[k] = (energy(system, sp) - energy(system, sm)) / (2.0 * hq);
        sp.q[k] = state.q[k];
        sm.q[k] = state.q[k];
    }
    for (int k = 0; k < n; ++k) {
        sp.qdot[k] = state.qdot[k] + hv;
        sm.qdot[k] = state.qdot[k] - hv;
        d[n + k] = (energy(system, sp) - energy(system, sm)) / (2.0 * hv);
        sp.qdot[k] = state.qdot[k];
        sm.qdot[k] = state.qdot[k];
    }
    return d;
}

Vec free_acceleration(const MechanicalSystem& system, const TangentPoint& state) {
    const int n = system.dim();
    const std::vector<Mat> gamma = christoffel_at(system.metric, state.q);

    Vec acc(n);
    for (int k = 0; k < n; ++k) acc[k] = -state.qdot.dot(gamma[k] * state.qdot);
    acc -= metric_solver(system.metric, state.q).solve(system.grad_potential(state.q));
    return acc;
}

BundleVector free_vectorfield(const MechanicalSystem& system, const TangentPoint& state) {
    const int n = system.dim();
    BundleVector g(2 * n);
    g.head(n) = state.qdot;
    g.tail(n) = free_acceleration(system, state);
    return g;
}

}  // namespace vnhc
