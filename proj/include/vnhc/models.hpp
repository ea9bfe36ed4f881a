#ifndef VNHC_MODELS_HPP
#define VNHC_MODELS_HPP

#include "vnhc/chetaev.hpp"
#include "vnhc/control.hpp"

#include <string>

namespace vnhc {
namespace models {

struct DoublePendulumParams {
    double m = 1.0;  // link mass, kg
    double l = 1.0;  // link length, m
    double g = 10.0; // gravity, m/s^2
};

// Shoulder-actuated double pendulum with the velocity-level virtual
// constraint q2 = arctan[(3 + 2 cos q2) qdot1 + (1 + cos q2) qdot2] and the
// input one-form f = dq1. All derivatives are analytic.
ClosedLoopSystem double_pendulum(const DoublePendulumParams& params = {});

// Variant whose constraint is the affine-in-velocity function
//   phi = (3 + 2 cos q2) qdot1 + (1 + cos q2) qdot2,
// paired with inputs f(q) = dphi/dqdot so that the vertical input
// distribution equals S-perp pointwise.
ClosedLoopSystem double_pendulum_affine(const DoublePendulumParams& params = {});

// Test fixtures.
MechanicalSystem free_particle(int n);
MechanicalSystem pendulum_1d(double g = 10.0);

// Identity-metric particle in the plane constrained to unit speed,
// phi = qdot1^2 + qdot2^2 - 1.
ChetaevSystem unit_speed_particle();

// Lookup by the names addressable from run configurations. Throws
// std::invalid_argument for unknown names. Models without a constraint
// (free_particle, pendulum_1d) return a ClosedLoopSystem with m = 0.
ClosedLoopSystem by_name(const std::string& name, const DoublePendulumParams& params = {});

// Wrap angles to (-pi, pi] for reporting; internal state stays unwrapped.
double wrap_angle(double theta);

}  // namespace models
}  // namespace vnhc

#endif
