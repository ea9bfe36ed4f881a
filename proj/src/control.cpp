#include "vnhc/control.hpp"

namespace vnhc {

namespace {

Eigen::FullPivLU<Mat> coupling_lu(const ClosedLoopSystem& cls, const TangentPoint& state) {
    const Mat c = coupling_matrix(cls, state);
    Eigen::FullPivLU<Mat> lu(c);
    const double cond = lu.isInvertible()
                            ? c.cwiseAbs().maxCoeff() * lu.inverse().cwiseAbs().maxCoeff()
                            : std::numeric_limits<double>::infinity();
    if (!lu.isInvertible() || cond >= cls.condition_threshold)
        throw TransversalityError("transversality violated at state", cond);
    return lu;
}

}  // namespace

Mat coupling_matrix(const ClosedLoopSystem& cls, const TangentPoint& state) {
    const Mat y = cls.inputs.vector_fields(cls.system.metric, state.q);  // n x m
    const Mat jv = cls.constraints.jacobian_qdot(state);                 // m x n
    return jv * y;
}

TransversalityReport transversality_check(const ClosedLoopSystem& cls, const TangentPoint& state) {
    const Mat c = coupling_matrix(cls, state);
    Eigen::JacobiSVD<Mat> svd(c);
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    TransversalityReport r;
    r.condition = smin > 0 ? smax / smin : std::numeric_limits<double>::infinity();
    r.ok = smin > 0 && r.condition < cls.condition_threshold;
    return r;
}

Vec constraint_drift(const ClosedLoopSystem& cls, const TangentPoint& state) {
    const Vec acc = free_acceleration(cls.system, state);
    return cls.constraints.jacobian_q(state) * state.qdot +
           cls.constraints.jacobian_qdot(state) * acc;
}

Vec control_law(const ClosedLoopSystem& cls, const TangentPoint& state) {
    return coupling_lu(cls, state).solve(-constraint_drift(cls, state));
}

BundleVector closed_loop_vectorfield(const ClosedLoopSystem& cls, const TangentPoint& state) {
    const int n = cls.dim();
    const Vec tau = control_law(cls, state);
    const Mat y = cls.inputs.vector_fields(cls.system.metric, state.q);

    BundleVector gamma = free_vectorfield(cls.system, state);
    gamma.tail(n) += y * tau;
    return gamma;
}

std::pair<Mat, Mat> projectors(const ClosedLoopSystem& cls, const TangentPoint& state) {
    const int n = cls.dim();
    const Mat y = cls.inputs.vector_fields(cls.system.metric, state.q);  // n x m
    const Mat dphi = cls.constraints.jacobian_full(state);               // m x 2n
    const Mat cinv_dphi = coupling_lu(cls, state).solve(dphi);           // m x 2n

    // columns (Y^a)^V, rows C_{ab} dphi^b
    Mat lifted(2 * n, cls.inputs.m);
    lifted.topRows(n).setZero();
    lifted.bottomRows(n) = y;

    const Mat q = lifted * cinv_dphi;
    const Mat p = Mat::Identity(2 * n, 2 * n) - q;
    return {p, q};
}

BundleVector closed_loop_via_projection(const ClosedLoopSystem& cls, const TangentPoint& state) {
    const auto [p, q] = projectors(cls, state);
    return p * free_vectorfield(cls.system, state);
}

Vec invariance_residual(const ClosedLoopSystem& cls, const TangentPoint& state,
                        const BundleVector& gamma) {
    return cls.constraints.jacobian_full(state) * gamma;
}

}  // namespace vnhc
