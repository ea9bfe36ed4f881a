#include "vnhc/constraint.hpp"

namespace vnhc {

TangentPoint project_velocities(const ConstraintSet& constraints, const TangentPoint& state,
                                const std::vector<int>& free_indices, int max_iter,
                                double tol) {
    if (static_cast<int>(free_indices.size()) != constraints.m)
        throw ProjectionError("project_velocities: need exactly m free velocity indices");

    TangentPoint s = state;
    Vec r = constraints(s);
    if (r.cwiseAbs().maxCoeff() < tol) return s;  // already on M

    for (int it = 0; it < max_iter; ++it) {
        const Mat jv = constraints.jacobian_qdot(s);
        Mat sub(constraints.m, constraints.m);
        for (int a = 0; a < constraints.m; ++a)
            for (int b = 0; b < constraints.m; ++b) sub(a, b) = jv(a, free_indices[b]);

        Eigen::FullPivLU<Mat> lu(sub);
        if (!lu.isInvertible())
            throw ProjectionError("project_velocities: singular sub-Jacobian");

        const Vec delta = lu.solve(r);

        // damped step: backtrack until the residual actually decreases, which
        // keeps Newton from diverging on saturating constraints (arctan etc.)
        const double before = r.norm();
        double alpha = 1.0;
        TangentPoint trial = s;
        for (int cut = 0; cut < 40; ++cut) {
            trial = s;
            for (int b = 0; b < constraints.m; ++b)
                trial.qdot[free_indices[b]] -= alpha * delta[b];
            const Vec rt = constraints(trial);
            if (std::isfinite(rt.norm()) && rt.norm() < before) break;
            alpha *= 0.5;
        }
        s = trial;
        r = constraints(s);
        if (r.cwiseAbs().maxCoeff() < tol) return s;
    }
    throw ProjectionError("projection did not converge (best residual " +
                          std::to_string(r.cwiseAbs().maxCoeff()) + ")");
}

}  // namespace vnhc
