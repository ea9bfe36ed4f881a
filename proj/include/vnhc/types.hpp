#ifndef VNHC_TYPES_HPP
#define VNHC_TYPES_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace vnhc {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Vectors and covectors on the tangent bundle, written in the fixed
// coordinate frame (d/dq, d/dqdot). Length is always 2n.
using BundleVector = Eigen::VectorXd;
using BundleCovector = Eigen::VectorXd;

// A point of TQ: configuration and velocity.
struct TangentPoint {
    Vec q;
    Vec qdot;

    TangentPoint() = default;
    TangentPoint(Vec q_, Vec qdot_) : q(std::move(q_)), qdot(std::move(qdot_)) {
        if (q.size() != qdot.size())
            throw std::invalid_argument("TangentPoint: q and qdot dimensions differ");
    }

    Eigen::Index dim() const { return q.size(); }

    // Flatten to a 2n vector (q, qdot); used by the integrator.
    BundleVector flatten() const {
        BundleVector x(2 * dim());
        x.head(dim()) = q;
        x.tail(dim()) = qdot;
        return x;
    }

    static TangentPoint unflatten(const BundleVector& x) {
        const Eigen::Index n = x.size() / 2;
        return TangentPoint(x.head(n), x.tail(n));
    }
};

// Raised when a matrix that must be inverted is numerically singular.
struct SingularMatrixError : std::runtime_error {
    double condition;
    SingularMatrixError(const std::string& what, double cond)
        : std::runtime_error(what + " (condition estimate " + std::to_string(cond) + ")"),
          condition(cond) {}
};

// Raised when the coupling matrix C is singular, i.e. the tangent space of
// the constraint manifold and the vertical input distribution fail to be
// transversal.
struct TransversalityError : std::runtime_error {
    double condition;
    TransversalityError(const std::string& what, double cond)
        : std::runtime_error(what), condition(cond) {}
};

}  // namespace vnhc

#endif
