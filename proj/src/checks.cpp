#include "vnhc/checks.hpp"

#include "vnhc/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace vnhc {

namespace {

Vec random_vec(std::mt19937_64& rng, int n, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = dist(rng);
    return v;
}

// Smooth non-constant test metric G(q) = I + q q' / (1 + |q|^2).
MetricField bump_metric(int n) {
    MetricField g;
    g.n = n;
    g.value = [n](const Vec& q) {
        return Mat(Mat::Identity(n, n) + q * q.transpose() / (1.0 + q.squaredNorm()));
    };
    return g;
}

struct Stat {
    double worst = 0.0;
    void update(double r) { worst = std::max(worst, std::abs(r)); }
};

CheckResult make(const std::string& name, int samples, double worst, double tol,
                 bool pass_iff_below = true) {
    CheckResult r;
    r.name = name;
    r.samples = samples;
    r.max_residual = worst;
    r.tolerance = tol;
    r.pass = pass_iff_below ? (worst < tol) : (worst >= tol);
    return r;
}

}  // namespace

TangentPoint random_on_manifold_state(const ClosedLoopSystem& cls, std::mt19937_64& rng) {
    const int n = cls.dim();
    TangentPoint s(random_vec(rng, n, -1.2, 1.2), random_vec(rng, n, -8.0, 8.0));
    return project_velocities(cls.constraints, s, {0});
}

std::vector<CheckResult> run_checks(const CheckOptions& opt) {
    std::vector<CheckResult> results;
    std::mt19937_64 rng(opt.seed);
    const ClosedLoopSystem dp = models::double_pendulum();
    const int n = dp.dim();

    // Complete-lift metric against base-metric pairings on random lifts of
    // linear vector fields.
    {
        const MetricField g = bump_metric(3);
        Stat vc, vv;
        for (int i = 0; i < 100; ++i) {
            const TangentPoint s(random_vec(rng, 3, -2, 2), random_vec(rng, 3, -2, 2));
            const Mat gc = complete_lift_metric_at(g, s);
            const Mat b = Mat::NullaryExpr(3, 3, [&](Eigen::Index, Eigen::Index) {
                return std::uniform_real_distribution<double>(-1, 1)(rng);
            });
            const Vec x = random_vec(rng, 3, -2, 2);  // X at s.q (vertical lift)
            const Vec y = b * s.q;                    // Y(q) = B q
            BundleVector ycomp(6);
            ycomp.head(3) = y;
            ycomp.tail(3) = b * s.qdot;  // complete lift of Y
            const BundleVector xvert = vertical_lift(x);

            vc.update(xvert.dot(gc * ycomp) - x.dot(g(s.q) * y));
            vv.update(xvert.dot(gc * vertical_lift(y)));
        }
        results.push_back(make("lift_metric_vertical_complete", 100, vc.worst, 1e-8));
        results.push_back(make("lift_metric_vertical_vertical", 100, vv.worst, 1e-12));
    }

    // The sharp maps of omega_L and G^c agree on lifted one-forms,
    // and both produce the vertical lift of sharp_G(f).
    {
        Stat st;
        for (int i = 0; i < 100; ++i) {
            const TangentPoint s = random_on_manifold_state(dp, rng);
            const Vec f = random_vec(rng, n, -2, 2);
            const BundleCovector fv = oneform_vertical_lift(f);
            const BundleVector expected = vertical_lift(sharp(dp.system.metric, s.q, f));
            st.update((sharp_symplectic(dp.system.metric, s, fv) - expected)
                          .cwiseAbs()
                          .maxCoeff());
            st.update((sharp_complete_lift(dp.system.metric, s, fv) - expected)
                          .cwiseAbs()
                          .maxCoeff());
        }
        results.push_back(make("sharp_map_agreement", 100, st.worst, 1e-8));
    }

    // sharp_{G^c}(J*(dphi)) must be vertical.
    {
        Stat st;
        for (int i = 0; i < 100; ++i) {
            const TangentPoint s = random_on_manifold_state(dp, rng);
            const BundleCovector alpha = chetaev_oneform_at(dp.constraints, s, 0);
            const BundleVector v = sharp_complete_lift(dp.system.metric, s, alpha);
            st.update(v.head(n).cwiseAbs().maxCoeff());
        }
        results.push_back(make("chetaev_sharp_vertical", 100, st.worst, 1e-12));
    }

    // Closed-loop invariance dphi(Gamma) = 0 (the debug sign flip must break
    // this one).
    {
        Stat st;
        for (int i = 0; i < opt.samples; ++i) {
            const TangentPoint s = random_on_manifold_state(dp, rng);
            const Vec tau = control_law(dp, s) * (opt.corrupt_control_sign ? -1.0 : 1.0);
            BundleVector gamma = free_vectorfield(dp.system, s);
            gamma.tail(n) += dp.inputs.vector_fields(dp.system.metric, s.q) * tau;
            st.update(invariance_residual(dp, s, gamma).cwiseAbs().maxCoeff());
        }
        results.push_back(make("invariance", opt.samples, st.worst, 1e-9));
    }

    // Symplectic characterization of the closed loop.
    {
        Stat st;
        for (int i = 0; i < 100; ++i) {
            const TangentPoint s = random_on_manifold_state(dp, rng);
            const Vec tau = control_law(dp, s);
            const BundleVector gamma = closed_loop_vectorfield(dp, s);
            const BundleCovector lhs = flat_symplectic(dp.system.metric, s, gamma) -
                                       energy_differential_fd(dp.system, s);
            BundleCovector rhs = BundleCovector::Zero(2 * n);
            const Mat f = dp.inputs(s.q);
            for (int a = 0; a < dp.inputs.m; ++a)
                rhs -= tau[a] * oneform_vertical_lift(f.row(a).transpose());
            st.update((lhs - rhs).cwiseAbs().maxCoeff());
        }
        results.push_back(make("symplectic_characterization", 100, st.worst, 1e-6));
    }

    // Projector algebra and the projection form of the closed loop.
    {
        Stat alg, proj;
        for (int i = 0; i < opt.samples; ++i) {
            const TangentPoint s = random_on_manifold_state(dp, rng);
            const auto [p, q] = projectors(dp, s);
            const Mat id = Mat::Identity(2 * n, 2 * n);
            alg.update((p * p - p).cwiseAbs().maxCoeff());
            alg.update((q * q - q).cwiseAbs().maxCoeff());
            alg.update((p + q - id).cwiseAbs().maxCoeff());
            proj.update((closed_loop_vectorfield(dp, s) - closed_loop_via_projection(dp, s))
                            .cwiseAbs()
                            .maxCoeff());
        }
        results.push_back(make("projector_algebra", opt.samples, alg.worst, 1e-10));
        results.push_back(make("projection_formulation", opt.samples, proj.worst, 1e-10));
    }

    // With inputs spanning S-perp (affine constraint variant), the
    // closed loop is the Chetaev dynamics.
    {
        const ClosedLoopSystem aff = models::double_pendulum_affine();
        const ChetaevSystem chs{aff.system, aff.constraints};
        Stat st;
        for (int i = 0; i < 100; ++i) {
            const TangentPoint s = random_on_manifold_state(aff, rng);
            st.update((closed_loop_vectorfield(aff, s) - chetaev_vectorfield(chs, s))
                          .cwiseAbs()
                          .maxCoeff());
        }
        results.push_back(make("chetaev_equivalence", 100, st.worst, 1e-9));
    }

    // Uniqueness: perturbing the control off tau* must break invariance by a
    // margin proportional to |C|.
    {
        double worst_margin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 100; ++i) {
            const TangentPoint s = random_on_manifold_state(dp, rng);
            const double cmag = coupling_matrix(dp, s).cwiseAbs().maxCoeff();
            const Vec tau = control_law(dp, s);
            for (const double delta : {-1e-3, 1e-3}) {
                BundleVector gamma = free_vectorfield(dp.system, s);
                gamma.tail(n) += dp.inputs.vector_fields(dp.system.metric, s.q) *
                                 (tau.array() + delta).matrix();
                const double res = invariance_residual(dp, s, gamma).cwiseAbs().maxCoeff();
                worst_margin = std::min(worst_margin, res / cmag);
            }
        }
        results.push_back(make("uniqueness_margin", 100, worst_margin, 1e-4,
                               /*pass_iff_below=*/false));
    }

    // Scaling the input one-forms leaves the closed loop invariant and
    // rescales the control inversely.
    {
        Stat st;
        for (int i = 0; i < 100; ++i) {
            const TangentPoint s = random_on_manifold_state(dp, rng);
            const double lambda = std::uniform_real_distribution<double>(0.5, 3.0)(rng);
            ClosedLoopSystem scaled = dp;
            scaled.inputs.forms = [lambda, base = dp.inputs.forms](const Vec& q) {
                return Mat(lambda * base(q));
            };
            st.update((closed_loop_vectorfield(dp, s) - closed_loop_vectorfield(scaled, s))
                          .cwiseAbs()
                          .maxCoeff());
            st.update((control_law(scaled, s) * lambda - control_law(dp, s))
                          .cwiseAbs()
                          .maxCoeff() /
                      std::max(1.0, control_law(dp, s).cwiseAbs().maxCoeff()));
        }
        results.push_back(make("input_scaling", 100, st.worst, 1e-12));
    }

    // Lifted constant-coefficient inputs equal J*(d fhat) with
    // fhat(q, qdot) = <f(q), qdot>, checked by finite differences.
    {
        const Mat f = dp.inputs(Vec::Zero(n));
        const auto fhat = [&](const TangentPoint& s) { return f.row(0).dot(s.qdot); };
        Stat st;
        for (int i = 0; i < 20; ++i) {
            const TangentPoint s(random_vec(rng, n, -1, 1), random_vec(rng, n, -2, 2));
            const double h = 1e-6;
            BundleCovector jstar(2 * n);
            for (int k = 0; k < n; ++k) {
                TangentPoint sp = s, sm = s;
                sp.qdot[k] += h;
                sm.qdot[k] -= h;
                jstar[k] = (fhat(sp) - fhat(sm)) / (2 * h);  // J* swaps slots
                jstar[n + k] = 0.0;
            }
            st.update((jstar - oneform_vertical_lift(f.row(0).transpose()))
                          .cwiseAbs()
                          .maxCoeff());
        }
        results.push_back(make("fiberwise_linear_inputs", 20, st.worst, 1e-8));
    }

    return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace vnhc
