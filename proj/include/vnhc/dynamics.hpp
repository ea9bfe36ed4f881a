#ifndef VNHC_DYNAMICS_HPP
#define VNHC_DYNAMICS_HPP

#include "vnhc/geometry.hpp"
#include "vnhc/metric.hpp"
#include "vnhc/types.hpp"

#include <functional>

namespace vnhc {

// A mechanical system: kinetic energy from a Riemannian metric plus a
// potential, L = 1/2 qdot' G(q) qdot - V(q).
struct MechanicalSystem {
    MetricField metric;
    std::function<double(const Vec&)> potential;
    std::function<Vec(const Vec&)> potential_gradient;  // may be empty -> FD
    double fd_step = kDefaultFdStep;

    int dim() const { return metric.n; }

    Vec grad_potential(const Vec& q) const {
        if (potential_gradient) return potential_gradient(q);
        const double h = fd_scale(fd_step, q);
        Vec g(q.size());
        Vec qp = q, qm = q;
        for (int k = 0; k < q.size(); ++k) {
            qp[k] = q[k] + h;
            qm[k] = q[k] - h;
            g[k] = (potential(qp) - potential(qm)) / (2.0 * h);
            qp[k] = q[k];
            qm[k] = q[k];
        }
        return g;
    }
};

double lagrangian(const MechanicalSystem& system, const TangentPoint& state);

// Energy E_L = 1/2 qdot' G qdot + V.
double energy(const MechanicalSystem& system, const TangentPoint& state);

// Full differential of E_L over (q, qdot), assembled by central differences.
BundleCovector energy_differential_fd(const MechanicalSystem& system, const TangentPoint& state,
                                      double h = kDefaultFdStep);

// Acceleration of the free (unactuated) flow:
//   qddot^k = -Gamma^k_ij qdot^i qdot^j - (G^{-1} dV/dq)^k.
Vec free_acceleration(const MechanicalSystem& system, const TangentPoint& state);

// The free SODE G = (qdot, free_acceleration).
BundleVector free_vectorfield(const MechanicalSystem& system, const TangentPoint& state);

}  // namespace vnhc

#endif
