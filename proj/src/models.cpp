#include "vnhc/models.hpp"

#include <cmath>

namespace vnhc {
namespace models {

namespace {

MetricField identity_metric(int n) {
    MetricField g;
    g.n = n;
    g.value = [n](const Vec&) { return Mat::Identity(n, n); };
    g.derivative = [n](const Vec&) { return std::vector<Mat>(n, Mat::Zero(n, n)); };
    return g;
}

MechanicalSystem double_pendulum_mechanics(const DoublePendulumParams& p) {
    const double ml2 = p.m * p.l * p.l;
    const double mgl = p.m * p.g * p.l;

    MetricField metric;
    metric.n = 2;
    metric.value = [ml2](const Vec& q) {
        const double c2 = std::cos(q[1]);
        Mat d(2, 2);
        d << ml2 * (3.0 + 2.0 * c2), ml2 * (1.0 + c2),
             ml2 * (1.0 + c2),       ml2;
        return d;
    };
    metric.derivative = [ml2](const Vec& q) {
        const double s2 = std::sin(q[1]);
        std::vector<Mat> d(2, Mat::Zero(2, 2));
        d[1] << -2.0 * ml2 * s2, -ml2 * s2,
                -ml2 * s2,        0.0;
        return d;
    };

    MechanicalSystem sys;
    sys.metric = metric;
    sys.potential = [mgl](const Vec& q) {
        return -mgl * (2.0 * std::cos(q[0]) + std::cos(q[0] + q[1]));
    };
    sys.potential_gradient = [mgl](const Vec& q) {
        const double s1 = std::sin(q[0]);
        const double s12 = std::sin(q[0] + q[1]);
        Vec g(2);
        g << mgl * (2.0 * s1 + s12), mgl * s12;
        return g;
    };
    return sys;
}

// arctan argument of the pendulum constraint
double pendulum_phi_arg(const TangentPoint& s) {
    const double c2 = std::cos(s.q[1]);
    return (3.0 + 2.0 * c2) * s.qdot[0] + (1.0 + c2) * s.qdot[1];
}

}  // namespace

ClosedLoopSystem double_pendulum(const DoublePendulumParams& p) {
    ClosedLoopSystem cls;
    cls.system = double_pendulum_mechanics(p);

    cls.constraints.n = 2;
    cls.constraints.m = 1;
    cls.constraints.value = [](const TangentPoint& s) {
        Vec phi(1);
        phi << s.q[1] - std::atan(pendulum_phi_arg(s));
        return phi;
    };
    cls.constraints.jac_qdot = [](const TangentPoint& s) {
        const double c2 = std::cos(s.q[1]);
        const double u = pendulum_phi_arg(s);
        Mat j(1, 2);
        j << -(3.0 + 2.0 * c2), -(1.0 + c2);
        return Mat(j / (1.0 + u * u));
    };
    cls.constraints.jac_q = [](const TangentPoint& s) {
        const double s2 = std::sin(s.q[1]);
        const double u = pendulum_phi_arg(s);
        Mat j(1, 2);
        j << 0.0, 1.0 + s2 * (2.0 * s.qdot[0] + s.qdot[1]) / (1.0 + u * u);
        return j;
    };

    cls.inputs.n = 2;
    cls.inputs.m = 1;
    cls.inputs.forms = [](const Vec&) {
        Mat f(1, 2);
        f << 1.0, 0.0;  // f = dq1
        return f;
    };
    return cls;
}

ClosedLoopSystem double_pendulum_affine(const DoublePendulumParams& p) {
    ClosedLoopSystem cls;
    cls.system = double_pendulum_mechanics(p);

    cls.constraints.n = 2;
    cls.constraints.m = 1;
    cls.constraints.value = [](const TangentPoint& s) {
        Vec phi(1);
        phi << pendulum_phi_arg(s);
        return phi;
    };
    cls.constraints.jac_qdot = [](const TangentPoint& s) {
        const double c2 = std::cos(s.q[1]);
        Mat j(1, 2);
        j << 3.0 + 2.0 * c2, 1.0 + c2;
        return j;
    };
    cls.constraints.jac_q = [](const TangentPoint& s) {
        const double s2 = std::sin(s.q[1]);
        Mat j(1, 2);
        j << 0.0, -s2 * (2.0 * s.qdot[0] + s.qdot[1]);
        return j;
    };

    // dphi/dqdot depends on q only, so it defines genuine one-forms on Q and
    // the vertical input distribution coincides with S-perp.
    cls.inputs.n = 2;
    cls.inputs.m = 1;
    cls.inputs.forms = [](const Vec& q) {
        const double c2 = std::cos(q[1]);
        Mat f(1, 2);
        f << 3.0 + 2.0 * c2, 1.0 + c2;
        return f;
    };
    return cls;
}

MechanicalSystem free_particle(int n) {
    MechanicalSystem sys;
    sys.metric = identity_metric(n);
    sys.potential = [](const Vec&) { return 0.0; };
    sys.potential_gradient = [n](const Vec&) { return Vec(Vec::Zero(n)); };
    return sys;
}

MechanicalSystem pendulum_1d(double g) {
    MechanicalSystem sys;
    sys.metric = identity_metric(1);
    sys.potential = [g](const Vec& q) { return -g * std::cos(q[0]); };
    sys.potential_gradient = [g](const Vec& q) {
        Vec grad(1);
        grad << g * std::sin(q[0]);
        return grad;
    };
    return sys;
}

ChetaevSystem unit_speed_particle() {
    ChetaevSystem chs;
    chs.system = free_particle(2);
    chs.constraints.n = 2;
    chs.constraints.m = 1;
    chs.constraints.value = [](const TangentPoint& s) {
        Vec phi(1);
        phi << s.qdot.squaredNorm() - 1.0;
        return phi;
    };
    chs.constraints.jac_q = [](const TangentPoint&) { return Mat(Mat::Zero(1, 2)); };
    chs.constraints.jac_qdot = [](const TangentPoint& s) {
        Mat j(1, 2);
        j << 2.0 * s.qdot[0], 2.0 * s.qdot[1];
        return j;
    };
    return chs;
}

ClosedLoopSystem by_name(const std::string& name, const DoublePendulumParams& params) {
    if (name == "double_pendulum") return double_pendulum(params);
    if (name == "double_pendulum_affine") return double_pendulum_affine(params);
    if (name == "free_particle") {
        ClosedLoopSystem cls;
        cls.system = free_particle(2);
        cls.constraints.n = 2;
        cls.inputs.n = 2;
        return cls;
    }
    if (name == "pendulum_1d") {
        ClosedLoopSystem cls;
        cls.system = pendulum_1d(params.g);
        cls.constraints.n = 1;
        cls.inputs.n = 1;
        return cls;
    }
    if (name == "unit_speed_particle") {
        const ChetaevSystem chs = unit_speed_particle();
        ClosedLoopSystem cls;
        cls.system = chs.system;
        cls.constraints = chs.constraints;
        cls.inputs.n = 2;
        return cls;
    }
    throw std::invalid_argument("unknown model: " + name);
}

double wrap_angle(double theta) {
    double w = std::remainder(theta, 2.0 * M_PI);
    if (w <= -M_PI) w += 2.0 * M_PI;
    return w;
}

}  // namespace models
}  // namespace vnhc
