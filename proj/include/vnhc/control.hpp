#ifndef VNHC_CONTROL_HPP
#define VNHC_CONTROL_HPP

#include "vnhc/constraint.hpp"
#include "vnhc/dynamics.hpp"

#include <functional>
#include <utility>

namespace vnhc {

// m input one-forms f^a(q) on Q, returned as the rows of an m x n matrix.
// The input vector fields are Y^a = sharp_G(f^a).
struct InputSet {
    int n = 0;
    int m = 0;
    std::function<Mat(const Vec&)> forms;

    Mat operator()(const Vec& q) const { return forms(q); }

    // Columns are the Y^a at q.
    Mat vector_fields(const MetricField& metric, const Vec& q) const {
        return metric_solver(metric, q).solve(forms(q).transpose());
    }
};

struct TransversalityReport {
    bool ok = false;
    double condition = 0.0;
};

// The closed-loop package: free dynamics, virtual constraint, inputs.
struct ClosedLoopSystem {
    MechanicalSystem system;
    ConstraintSet constraints;
    InputSet inputs;
    double condition_threshold = 1e8;

    int dim() const { return system.dim(); }
};

// C^{ab} = (Y^b)^V(phi^a) = dphi^a/dqdot . Y^b.
Mat coupling_matrix(const ClosedLoopSystem& cls, const TangentPoint& state);

// Transversality of TM and the vertical input distribution, decided by the
// invertibility of C.
TransversalityReport transversality_check(const ClosedLoopSystem& cls, const TangentPoint& state);

// Derivative of phi along the free flow: G(phi^a) = dphi/dq . qdot + dphi/dqdot . accel.
Vec constraint_drift(const ClosedLoopSystem& cls, const TangentPoint& state);

// The unique control making M invariant: solves C tau = -G(phi).
Vec control_law(const ClosedLoopSystem& cls, const TangentPoint& state);

// Gamma = G + tau_a (Y^a)^V.
BundleVector closed_loop_vectorfield(const ClosedLoopSystem& cls, const TangentPoint& state);

// Oblique projectors Q = C_{ab} (Y^a)^V (x) dphi^b and P = Id - Q,
// projecting onto the vertical input distribution and onto TM respectively.
std::pair<Mat, Mat> projectors(const ClosedLoopSystem& cls, const TangentPoint& state);

// Gamma built the second way, as P applied to the free field.
BundleVector closed_loop_via_projection(const ClosedLoopSystem& cls, const TangentPoint& state);

// Residual of the invariance condition, dphi(Gamma), for a given bundle vector.
Vec invariance_residual(const ClosedLoopSystem& cls, const TangentPoint& state,
                        const BundleVector& gamma);

}  // namespace vnhc

#endif
