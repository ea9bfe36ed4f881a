#ifndef VNHC_GEOMETRY_HPP
#define VNHC_GEOMETRY_HPP

#include "vnhc/constraint.hpp"
#include "vnhc/metric.hpp"
#include "vnhc/types.hpp"

#include <vector>

namespace vnhc {

// Christoffel symbols of the Levi-Civita connection,
//   Gamma^k_ij = 1/2 G^{kl} (d_i G_jl + d_j G_il - d_l G_ij).
// Returned as gamma[k](i, j); symmetric in (i, j).
std::vector<Mat> christoffel_at(const MetricField& metric, const Vec& q);

// Musical isomorphisms on Q. flat lowers a vector, sharp raises a covector.
Vec flat(const MetricField& metric, const Vec& q, const Vec& vector);
Vec sharp(const MetricField& metric, const Vec& q, const Vec& covector);

// Complete lift of the metric at a bundle point, as the symmetric 2n x 2n
// matrix [[qdot . dG, G], [G, 0]].
Mat complete_lift_metric_at(const MetricField& metric, const TangentPoint& state);

// Coordinate matrix Omega of the Lagrangian symplectic form of the mechanical
// Lagrangian L = 1/2 qdot' G(q) qdot - V(q). Block form [[A, G], [-G, 0]]
// with A_ij = qdot_k (d_j G_ik - d_i G_jk) skew-symmetric. The potential does
// not enter. Pairing convention: omega(X, Y) = X' Omega Y, so the flat map is
// X -> Omega' X.
Mat lagrangian_symplectic_at(const MetricField& metric, const TangentPoint& state);

// Lowers a bundle vector with omega_L: returns Omega' X.
BundleCovector flat_symplectic(const MetricField& metric, const TangentPoint& state,
                               const BundleVector& x);

// Raises a bundle covector with omega_L, contracting in the second slot
// (for skew omega this is the negated inverse of flat_symplectic).
BundleVector sharp_symplectic(const MetricField& metric, const TangentPoint& state,
                              const BundleCovector& alpha);

// Raises a bundle covector with the complete-lift metric G^c.
BundleVector sharp_complete_lift(const MetricField& metric, const TangentPoint& state,
                                 const BundleCovector& alpha);

// Chetaev one-form J*(d phi^a) at a state: the 2n covector
// (dphi^a/dqdot, 0) -- the q-slot carries the velocity Jacobian.
BundleCovector chetaev_oneform_at(const ConstraintSet& constraints, const TangentPoint& state,
                                  int index);

// Vertical lift of a vector (resp. one-form) on Q to the bundle frame.
inline BundleVector vertical_lift(const Vec& x) {
    BundleVector v = BundleVector::Zero(2 * x.size());
    v.tail(x.size()) = x;
    return v;
}

inline BundleCovector oneform_vertical_lift(const Vec& f) {
    BundleCovector a = BundleCovector::Zero(2 * f.size());
    a.head(f.size()) = f;
    return a;
}

}  // namespace vnhc

#endif
