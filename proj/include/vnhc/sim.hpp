#ifndef VNHC_SIM_HPP
#define VNHC_SIM_HPP

#include "vnhc/types.hpp"

#include <functional>
#include <optional>
#include <string>

namespace vnhc {

using VectorField = std::function<BundleVector(const TangentPoint&)>;

// Per-step observers, evaluated at accepted states only (not at RK stages).
// Any of them may be empty; the matching trajectory column block is then
// left empty.
struct Monitors {
    std::function<double(const TangentPoint&)> energy;
    std::function<Vec(const TangentPoint&)> control;             // m values
    std::function<Vec(const TangentPoint&)> constraint;          // m residuals
    std::function<double(const TangentPoint&)> invariance;       // |dphi(Gamma)|
};

struct SimulationFailure {
    int step = -1;
    std::string message;
};

struct Trajectory {
    Vec time;        // N+1
    Mat states;      // (N+1) x 2n
    Mat controls;    // (N+1) x m (0 cols when unmonitored)
    Vec energy;      // N+1 (empty when unmonitored)
    Mat residuals;   // (N+1) x m
    Vec invariance;  // N+1

    std::optional<SimulationFailure> failure;

    int steps() const { return static_cast<int>(time.size()) - 1; }
    TangentPoint state_at(int k) const { return TangentPoint::unflatten(states.row(k)); }
    bool ok() const { return !failure.has_value(); }
};

// One classical RK4 step of the first-order system on the bundle.
TangentPoint rk4_step(const VectorField& field, const TangentPoint& state, double h);

// Fixed-step integration with monitor sampling at every stored state.
// A field error mid-run yields a truncated trajectory carrying the failing
// step index and message.
Trajectory simulate(const VectorField& field, const Monitors& monitors,
                    const TangentPoint& initial, double h, int steps, double t0 = 0.0);

}  // namespace vnhc

#endif
