#include "vnhc/chetaev.hpp"

namespace vnhc {

Vec multipliers(const ChetaevSystem& chs, const TangentPoint& state) {
    const Mat jv = chs.constraints.jacobian_qdot(state);  // m x n
    const Mat raised = metric_solver(chs.system.metric, state.q).solve(jv.transpose());
    const Mat a = jv * raised;  // m x m, symmetric PD for regular constraints

    const Vec acc = free_acceleration(chs.system, state);
    const Vec drift = chs.constraints.jacobian_q(state) * state.qdot + jv * acc;

    Eigen::FullPivLU<Mat> lu(a);
    if (!lu.isInvertible())
        throw SingularMatrixError("Chetaev system singular at state",
                                  std::numeric_limits<double>::infinity());
    return lu.solve(-drift);
}

BundleVector chetaev_vectorfield(const ChetaevSystem& chs, const TangentPoint& state) {
    const int n = chs.dim();
    const Mat jv = chs.constraints.jacobian_qdot(state);
    const Mat raised = metric_solver(chs.system.metric, state.q).solve(jv.transpose());

    BundleVector gamma = free_vectorfield(chs.system, state);
    gamma.tail(n) += raised * multipliers(chs, state);
    return gamma;
}

std::vector<BundleVector> sbot_basis(const ChetaevSystem& chs, const TangentPoint& state) {
    const Mat jv = chs.constraints.jacobian_qdot(state);
    const Mat raised = metric_solver(chs.system.metric, state.q).solve(jv.transpose());

    std::vector<BundleVector> basis;
    basis.reserve(chs.constraints.m);
    for (int a = 0; a < chs.constraints.m; ++a)
        basis.push_back(vertical_lift(raised.col(a)));
    return basis;
}

}  // namespace vnhc
