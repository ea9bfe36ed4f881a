#include "vnhc/geometry.hpp"

namespace vnhc {

std::vector<Mat> christoffel_at(const MetricField& metric, const Vec& q) {
    const int n = metric.n;
    const std::vector<Mat> dg = metric.partials(q);
    const GuardedSolver solver = metric_solver(metric, q);

    // first-kind symbols contracted with the inverse metric
    std::vector<Mat> gamma(n, Mat::Zero(n, n));
    Mat first(n, n);  // first(l, .) column for fixed (i, j)
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Vec col(n);
            for (int l = 0; l < n; ++l)
                col[l] = 0.5 * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
            const Vec gk = solver.solve(col);
            for (int k = 0; k < n; ++k) {
                gamma[k](i, j) = gk[k];
                gamma[k](j, i) = gk[k];
            }
        }
    }
    return gamma;
}

Vec flat(const MetricField& metric, const Vec& q, const Vec& vector) {
    return metric(q) * vector;
}

Vec sharp(const MetricField& metric, const Vec& q, const Vec& covector) {
    return metric_solver(metric, q).solve(covector);
}

Mat complete_lift_metric_at(const MetricField& metric, const TangentPoint& state) {
    const int n = metric.n;
    const Mat g = metric(state.q);
    const std::vector<Mat> dg = metric.partials(state.q);

    Mat upper = Mat::Zero(n, n);
    for (int k = 0; k < n; ++k) upper += state.qdot[k] * dg[k];

    Mat gc = Mat::Zero(2 * n, 2 * n);
    gc.topLeftCorner(n, n) = upper;
    gc.topRightCorner(n, n) = g;
    gc.bottomLeftCorner(n, n) = g;
    return gc;
}

Mat lagrangian_symplectic_at(const MetricField& metric, const TangentPoint& state) {
    const int n = metric.n;
    const Mat g = metric(state.q);
    const std::vector<Mat> dg = metric.partials(state.q);

    // A_ij = qdot_k (d_j G_ik - d_i G_jk)
    Mat a = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                a(i, j) += state.qdot[k] * (dg[j](i, k) - dg[i](j, k));

    Mat omega = Mat::Zero(2 * n, 2 * n);
    omega.topLeftCorner(n, n) = a;
    omega.topRightCorner(n, n) = g;
    omega.bottomLeftCorner(n, n) = -g;
    return omega;
}

BundleCovector flat_symplectic(const MetricField& metric, const TangentPoint& state,
                               const BundleVector& x) {
    return lagrangian_symplectic_at(metric, state).transpose() * x;
}

BundleVector sharp_symplectic(const MetricField& metric, const TangentPoint& state,
                              const BundleCovector& alpha) {
    // contraction in the second slot of omega_L: solve Omega x = alpha. This
    // is the convention under which vertically lifted one-forms raise to
    // vertical vectors, matching the sharp map of the complete-lift metric.
    const Mat omega = lagrangian_symplectic_at(metric, state);
    Eigen::FullPivLU<Mat> lu(omega);
    if (!lu.isInvertible())
        throw SingularMatrixError("omega_L not invertible at state",
                                  std::numeric_limits<double>::infinity());
    return lu.solve(alpha);
}

BundleVector sharp_complete_lift(const MetricField& metric, const TangentPoint& state,
                                 const BundleCovector& alpha) {
    const Mat gc = complete_lift_metric_at(metric, state);
    Eigen::FullPivLU<Mat> lu(gc);
    if (!lu.isInvertible())
        throw SingularMatrixError("complete-lift metric not invertible at state",
                                  std::numeric_limits<double>::infinity());
    return lu.solve(alpha);
}

BundleCovector chetaev_oneform_at(const ConstraintSet& constraints, const TangentPoint& state,
                                  int index) {
    if (index < 0 || index >= constraints.m)
        throw std::out_of_range("chetaev_oneform_at: constraint index out of range");
    const Mat jv = constraints.jacobian_qdot(state);
    return oneform_vertical_lift(jv.row(index).transpose());
}

}  // namespace vnhc
