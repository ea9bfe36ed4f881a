#ifndef VNHC_METRIC_HPP
#define VNHC_METRIC_HPP

#include "vnhc/types.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace vnhc {

// Condition-number guard used for every factorization in the library.
inline constexpr double kSingularityGuard = 1e12;

// Default relative step for central finite differences.
inline constexpr double kDefaultFdStep = 1e-6;

// Scales an FD step by the magnitude of the point being differenced at.
inline double fd_scale(double h, const Vec& q) {
    const double s = q.size() ? q.cwiseAbs().maxCoeff() : 0.0;
    return h * std::max(1.0, s);
}

// A Riemannian metric on Q given by a pointwise evaluator. The partial
// derivatives dG/dq^k come from an analytic closure when one is supplied and
// from central finite differences otherwise.
struct MetricField {
    int n = 0;
    std::function<Mat(const Vec&)> value;
    // derivative(q)[k] = dG/dq^k (an n x n matrix). May be empty.
    std::function<std::vector<Mat>(const Vec&)> derivative;
    double fd_step = kDefaultFdStep;

    Mat operator()(const Vec& q) const { return value(q); }

    bool analytic_derivative() const { return static_cast<bool>(derivative); }

    std::vector<Mat> partials(const Vec& q) const {
        if (derivative) return derivative(q);
        return fd_partials(q, fd_scale(fd_step, q));
    }

    std::vector<Mat> fd_partials(const Vec& q, double h) const {
        std::vector<Mat> d(n);
        Vec qp = q, qm = q;
        for (int k = 0; k < n; ++k) {
            qp[k] = q[k] + h;
            qm[k] = q[k] - h;
            d[k] = (value(qp) - value(qm)) / (2.0 * h);
            qp[k] = q[k];
            qm[k] = q[k];
        }
        return d;
    }
};

// LDLT factorization of a symmetric matrix with a singularity guard.
// Throws SingularMatrixError when the estimated condition exceeds the guard.
class GuardedSolver {
  public:
    GuardedSolver(const Mat& a, const std::string& context) : ldlt_(a) {
        // LDLT::rcond() is unreliable near singularity; the spread of the
        // D diagonal is a cheap estimate of the right order for SPD input.
        const Vec d = ldlt_.vectorD().cwiseAbs();
        const double dmax = d.maxCoeff();
        const double dmin = d.minCoeff();
        rcond_ = dmax > 0 ? dmin / dmax : 0.0;
        if (ldlt_.info() != Eigen::Success || !(rcond_ > 1.0 / kSingularityGuard))
            throw SingularMatrixError(context, condition());
    }

    template <typename Rhs>
    auto solve(const Eigen::MatrixBase<Rhs>& b) const {
        return ldlt_.solve(b).eval();
    }
    double condition() const { return rcond_ > 0 ? 1.0 / rcond_ : std::numeric_limits<double>::infinity(); }

  private:
    Eigen::LDLT<Mat> ldlt_;
    double rcond_;
};

inline GuardedSolver metric_solver(const MetricField& g, const Vec& q) {
    return GuardedSolver(g(q), "metric not invertible at q");
}

}  // namespace vnhc

#endif
