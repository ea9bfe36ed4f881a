#ifndef VNHC_CHECKS_HPP
#define VNHC_CHECKS_HPP

#include "vnhc/models.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace vnhc {

struct CheckResult {
    std::string name;
    int samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct CheckOptions {
    std::uint64_t seed = 42;
    int samples = 1000;
    // Debug switch: negates the synthesized control before the invariance
    // check, which must then fail.
    bool corrupt_control_sign = false;
};

// Draws a random double-pendulum state and projects its velocity onto M.
TangentPoint random_on_manifold_state(const ClosedLoopSystem& cls, std::mt19937_64& rng);

// Runs the full numerical verification suite on the double pendulum:
// complete-lift metric identities, the sharp-map agreement of omega_L and
// G^c on vertical one-forms, the symplectic characterization of the closed
// loop, projector algebra, agreement of the control-law and projection
// constructions, agreement with Chetaev dynamics when the inputs span
// S-perp, uniqueness of the control, input-scaling invariance, and the
// fiberwise-linear form of the lifted inputs.
std::vector<CheckResult> run_checks(const CheckOptions& options);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace vnhc

#endif
