#ifndef VNHC_CONSTRAINT_HPP
#define VNHC_CONSTRAINT_HPP

#include "vnhc/metric.hpp"
#include "vnhc/types.hpp"

#include <functional>
#include <vector>

namespace vnhc {

// m scalar constraint functions phi^a(q, qdot) with m < n. Jacobians in q and
// qdot come from analytic closures when supplied, otherwise from central
// finite differences.
struct ConstraintSet {
    int n = 0;
    int m = 0;
    std::function<Vec(const TangentPoint&)> value;
    std::function<Mat(const TangentPoint&)> jac_q;     // m x n, may be empty
    std::function<Mat(const TangentPoint&)> jac_qdot;  // m x n, may be empty
    double fd_step = kDefaultFdStep;
    double tol_membership = 1e-9;

    Vec operator()(const TangentPoint& s) const { return value(s); }

    bool analytic_jacobians() const { return jac_q && jac_qdot; }

    bool on_manifold(const TangentPoint& s) const {
        return value(s).cwiseAbs().maxCoeff() <= tol_membership;
    }

    Mat jacobian_q(const TangentPoint& s) const {
        if (jac_q) return jac_q(s);
        return fd_jacobian(s, /*wrt_velocity=*/false, fd_scale(fd_step, s.q));
    }

    Mat jacobian_qdot(const TangentPoint& s) const {
        if (jac_qdot) return jac_qdot(s);
        return fd_jacobian(s, /*wrt_velocity=*/true, fd_scale(fd_step, s.qdot));
    }

    // Full m x 2n Jacobian [dphi/dq, dphi/dqdot].
    Mat jacobian_full(const TangentPoint& s) const {
        Mat j(m, 2 * n);
        j.leftCols(n) = jacobian_q(s);
        j.rightCols(n) = jacobian_qdot(s);
        return j;
    }

    Mat fd_jacobian(const TangentPoint& s, bool wrt_velocity, double h) const {
        Mat j(m, n);
        TangentPoint sp = s, sm = s;
        Vec& vp = wrt_velocity ? sp.qdot : sp.q;
        Vec& vm = wrt_velocity ? sm.qdot : sm.q;
        for (int k = 0; k < n; ++k) {
            const double saved = vp[k];
            vp[k] = saved + h;
            vm[k] = saved - h;
            j.col(k) = (value(sp) - value(sm)) / (2.0 * h);
            vp[k] = saved;
            vm[k] = saved;
        }
        return j;
    }
};

struct ProjectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Newton-solves phi(q, qdot) = 0 by adjusting only the velocity entries in
// free_indices (|free_indices| = m); the configuration is never touched.
TangentPoint project_velocities(const ConstraintSet& constraints, const TangentPoint& state,
                                const std::vector<int>& free_indices, int max_iter = 50,
                                double tol = 1e-12);

}  // namespace vnhc

#endif
