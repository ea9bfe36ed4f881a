#include "vnhc/geometry.hpp"
#include "vnhc/models.hpp"
#include "vnhc/sim.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace vnhc;

namespace {

Vec v2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}

}  // namespace

TEST_CASE("double-pendulum inertia matrix at the straight configuration") {
    const auto dp = models::double_pendulum();
    const Mat d = dp.system.metric(v2(0.7, 0.0));
    Mat expected(2, 2);
    expected << 5, 2, 2, 1;
    CHECK((d - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("inertia determinant is 2 - cos^2 q2") {
    const auto dp = models::double_pendulum();
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-3, 3);
    for (int t = 0; t < 100; ++t) {
        const double q2 = dist(rng);
        const double c2 = std::cos(q2);
        CHECK(dp.system.metric(v2(0, q2)).determinant() ==
              doctest::Approx(2.0 - c2 * c2).epsilon(1e-12));
    }
}

TEST_CASE("raised input form spans the catalog control direction") {
    const auto dp = models::double_pendulum();
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-3, 3);
    for (int t = 0; t < 100; ++t) {
        const double q2 = dist(rng);
        const double c2 = std::cos(q2);
        const Vec y = sharp(dp.system.metric, v2(0.3, q2), v2(1, 0));
        const double scale = 1.0 / (2.0 - c2 * c2);
        CHECK(y[0] == doctest::Approx(scale).epsilon(1e-10));
        CHECK(y[1] == doctest::Approx(-scale * (1.0 + c2)).epsilon(1e-10));
    }
}

TEST_CASE("analytic metric derivatives match finite differences") {
    const auto dp = models::double_pendulum();
    MetricField fd = dp.system.metric;
    fd.derivative = nullptr;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-3, 3);
    for (int t = 0; t < 50; ++t) {
        const Vec q = v2(dist(rng), dist(rng));
        const auto analytic = dp.system.metric.partials(q);
        const auto numeric = fd.partials(q);
        for (int k = 0; k < 2; ++k)
            CHECK((analytic[k] - numeric[k]).cwiseAbs().maxCoeff() < 1e-6);
    }
}

TEST_CASE("finite-difference metric partials re-difference consistently at half step") {
    const auto dp = models::double_pendulum();
    MetricField fd = dp.system.metric;
    fd.derivative = nullptr;
    const Vec q = v2(0.4, 1.1);
    const auto at_h = fd.fd_partials(q, 1e-4);
    const auto at_h2 = fd.fd_partials(q, 5e-5);
    for (int k = 0; k < 2; ++k)
        CHECK((at_h[k] - at_h2[k]).cwiseAbs().maxCoeff() < 1e-8);  // O(h^2) gap
}

TEST_CASE("generic dynamics path matches the explicit double-pendulum equations") {
    const auto dp = models::double_pendulum();
    const double g = 10.0;
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> dist(-2.5, 2.5);
    for (int t = 0; t < 1000; ++t) {
        const TangentPoint s(v2(dist(rng), dist(rng)), v2(3 * dist(rng), 3 * dist(rng)));
        const double s1 = std::sin(s.q[0]);
        const double s2 = std::sin(s.q[1]);
        const double s12 = std::sin(s.q[0] + s.q[1]);
        const double qd1 = s.qdot[0], qd2 = s.qdot[1];

        Vec p(2);
        p << -2 * s2 * qd1 * qd2 - s2 * qd2 * qd2 + g * (2 * s1 + s12),
            s2 * qd1 * qd1 + g * s12;
        const Vec direct = dp.system.metric(s.q).ldlt().solve(Vec(-p));
        CHECK((free_acceleration(dp.system, s) - direct).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("free particle never accelerates") {
    const auto sys = models::free_particle(2);
    CHECK(free_acceleration(sys, TangentPoint(v2(3, -1), v2(5, 7))).cwiseAbs().maxCoeff() ==
          0.0);
}

TEST_CASE("1d pendulum conserves energy under the free flow") {
    const auto sys = models::pendulum_1d();
    const VectorField field = [&](const TangentPoint& s) { return free_vectorfield(sys, s); };
    Monitors mon;
    mon.energy = [&](const TangentPoint& s) { return energy(sys, s); };
    Vec q(1), qd(1);
    q << 1.2;
    qd << 0.5;
    const Trajectory traj = simulate(field, mon, TangentPoint(q, qd), 1e-3, 1000);
    REQUIRE(traj.ok());
    CHECK(std::abs(traj.energy[1000] - traj.energy[0]) < 1e-8);
}

TEST_CASE("unit-speed particle flow stays on its initial line") {
    const auto chs = models::unit_speed_particle();
    const VectorField field = [&](const TangentPoint& s) {
        return chetaev_vectorfield(chs, s);
    };
    TangentPoint s(v2(0, 0), v2(1, 0));
    for (int k = 0; k < 200; ++k) s = rk4_step(field, s, 0.01);
    CHECK(std::abs(s.q[1]) < 1e-12);
    CHECK(std::abs(s.qdot.squaredNorm() - 1.0) < 1e-10);
}

TEST_CASE("model catalog lookup") {
    CHECK(models::by_name("double_pendulum").constraints.m == 1);
    CHECK(models::by_name("double_pendulum_affine").inputs.m == 1);
    CHECK(models::by_name("free_particle").constraints.m == 0);
    CHECK(models::by_name("pendulum_1d").system.dim() == 1);
    CHECK(models::by_name("unit_speed_particle").inputs.m == 0);
    CHECK_THROWS_AS(models::by_name("acrobot"), std::invalid_argument);
}

TEST_CASE("angle wrapping maps to (-pi, pi]") {
    CHECK(models::wrap_angle(0.0) == 0.0);
    CHECK(models::wrap_angle(M_PI) == doctest::Approx(M_PI));
    CHECK(models::wrap_angle(-M_PI) == doctest::Approx(M_PI));
    CHECK(models::wrap_angle(3 * M_PI / 2) == doctest::Approx(-M_PI / 2));
    CHECK(models::wrap_angle(2 * M_PI + 0.3) == doctest::Approx(0.3));
}
