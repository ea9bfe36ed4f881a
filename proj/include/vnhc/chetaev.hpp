#ifndef VNHC_CHETAEV_HPP
#define VNHC_CHETAEV_HPP

#include "vnhc/constraint.hpp"
#include "vnhc/dynamics.hpp"

#include <vector>

namespace vnhc {

// Classical nonlinear nonholonomic dynamics: the constraint force lies along
// sharp_G(dphi/dqdot) with Lagrange multipliers enforcing tangency to M.
struct ChetaevSystem {
    MechanicalSystem system;
    ConstraintSet constraints;

    int dim() const { return system.dim(); }
};

// Multipliers solving A lambda = -[dphi/dq . qdot + dphi/dqdot . accel] with
// A^{ab} = (dphi^a/dqdot) G^{-1} (dphi^b/dqdot)'.
Vec multipliers(const ChetaevSystem& chs, const TangentPoint& state);

// Gamma_nh = (qdot, free_accel + lambda_a sharp_G(dphi^a/dqdot)).
BundleVector chetaev_vectorfield(const ChetaevSystem& chs, const TangentPoint& state);

// Basis of S-perp: the vertical bundle vectors (0, G^{-1} (dphi^a/dqdot)').
std::vector<BundleVector> sbot_basis(const ChetaevSystem& chs, const TangentPoint& state);

}  // namespace vnhc

#endif
