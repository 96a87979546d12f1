#include <gtest/gtest.h>

#include "kin2d/presets.hpp"
#include "support.hpp"

using namespace kin2d;

namespace {

void expect_point(cplx got, cplx want, double tol) { EXPECT_LT(std::abs(got - want), tol) << got << " vs " << want; }

void expect_circle(const CircleReport& c, cplx center, double radius, double tol) {
    ASSERT_TRUE(c.defined);
    expect_point(c.circle.center, center, tol);
    EXPECT_NEAR(c.circle.radius, radius, tol);
}

FrameState unit_state() { return frame_state(fourbar_motion(presets::fourbar_unit()), pi / 2); }

} // namespace

TEST(UnitFourBar, AngleChain) {
    auto s = unit_state();
    expect_point(s.eps[0], cplx(1, 1) / std::sqrt(2.0), 1e-10);
    EXPECT_NEAR(s.th[1], -1.0, 1e-10);
    EXPECT_NEAR(s.th[2], -1.5, 1e-10);
    EXPECT_NEAR(s.th[3], -9.75, 1e-10);
}

TEST(UnitFourBar, PolesAndCircles) {
    auto s = unit_state();
    expect_point(pole(s, 1), cplx(0, 2), 1e-9);
    expect_point(pole(s, 2), cplx(-6.0 / 13, 9.0 / 13), 1e-9);
    expect_point(pole(s, 3), cplx(72.0 / 1549, 1409.0 / 1549), 1e-9);
    auto cs = characteristic_circles(s);
    expect_circle(cs[0], cplx(0.75, 1), 1.25, 1e-9);
    expect_circle(cs[1], cplx(-2.0 / 3, 1.5), 5.0 / 6, 1e-9);
    expect_circle(cs[2], cplx(13.0 / 12, 1.5), std::sqrt(205.0) / 12, 1e-9);
    expect_circle(cs[3], cplx(-9.0 / 35, 101.0 / 70), 3.0 / 14 * std::sqrt(41.0 / 5), 1e-9);
    expect_point(balls_point(s), cplx(51.0 / 26, 9.0 / 13), 1e-9);
    auto alt = balls_point_by_intersection(s);
    ASSERT_TRUE(alt);
    expect_point(*alt, cplx(51.0 / 26, 9.0 / 13), 1e-9);
}

TEST(UnitFourBar, BallsPointSatisfiesBothLoci) {
    auto s = unit_state();
    cplx u = balls_point(s);
    EXPECT_LT(std::abs(inflection_residual(s, u)), 1e-10);
    EXPECT_LT(std::abs(cubic_residual(s, u)), 1e-10);
    EXPECT_LT(std::abs(zero_normal_jerk_residual(s, u)), 1e-10);
    // the trajectory of U has kappa = 0 and kappa' = 0 at this instant
    auto traj = frame_point_curve(fourbar_motion(presets::fourbar_unit()), to_frame(s, u));
    EXPECT_NEAR(kappa(traj, pi / 2), 0.0, 1e-9);
    EXPECT_NEAR(kappa_prime(traj, pi / 2), 0.0, 1e-8);
}

TEST(UnitFourBar, InflectionCircleCarriesZeroCurvature) {
    auto s = unit_state();
    auto m = fourbar_motion(presets::fourbar_unit());
    auto k1 = characteristic_circles(s)[0].circle;
    for (double a : {0.3, 1.7, 4.0}) {
        cplx z = k1.center + k1.radius * expi(a);
        EXPECT_LT(std::abs(inflection_residual(s, z)), 1e-10);
        auto traj = frame_point_curve(m, to_frame(s, z));
        EXPECT_NEAR(kappa(traj, pi / 2), 0.0, 1e-9);
    }
}

TEST(UnitFourBar, RelabeledDrive) {
    auto s = unit_state();
    // rocker angle as parameter
    Jet g = presets::fourbar_unit_rocker_angle(pi / 2);
    double f1 = 1.0 / g[1], f2 = -g[2] / std::pow(g[1], 3);
    expect_point(reparametrized_pole2(s, f1, f2), cplx(1.1, 2.2), 1e-9);

    auto r = frame_state(fourbar_motion(presets::fourbar_unit_relabeled()), pi);
    expect_point(pole(r, 1), cplx(0, 2), 1e-9);
    expect_point(pole(r, 2), cplx(1.1, 2.2), 1e-9);
    auto cs = characteristic_circles(r);
    expect_circle(cs[0], cplx(0.75, 1), 1.25, 1e-9);
    expect_circle(cs[1], cplx(0.5, 19.0 / 8), 5.0 / 8, 1e-9);
    expect_circle(cs[2], cplx(0.5, 5.0 / 8), std::sqrt(137.0) / 8, 1e-9);
    expect_circle(cs[3], cplx(33.0 / 65, 142.0 / 65), 3 * std::sqrt(137.0) / 65, 1e-9);
    expect_point(balls_point(r), cplx(51.0 / 26, 9.0 / 13), 1e-9);
}

TEST(LargeFourBar, At345Degrees) {
    auto s = frame_state(fourbar_motion(presets::fourbar_large()), rad(345));
    const double tol = 5e-4;
    EXPECT_NEAR(s.th[0], 0.964415, tol);
    EXPECT_NEAR(deg(s.th[0]), 55.2569, tol);
    EXPECT_NEAR(s.th[1], -0.264825, tol);
    EXPECT_NEAR(s.th[2], -0.259041, tol);
    EXPECT_NEAR(s.th[3], 0.568709, tol);
    expect_point(pole(s, 1), cplx(55.3600, -14.8337), tol);
    expect_point(pole(s, 2), cplx(11.4748, 41.6089), tol);
    expect_point(pole(s, 3), cplx(27.5188, -13.9759), tol);
    expect_point(pole_velocity(s), cplx(-27.9792, 66.8317), tol);
    auto cs = characteristic_circles(s);
    expect_circle(cs[0], cplx(-70.8208, -67.6595), 136.792, tol);
    expect_circle(cs[2], cplx(42.6633, 25.3195), 42.1127, tol);
    cplx u = balls_point(s);
    expect_point(u, cplx(5.7919, 45.6660), tol);
    expect_point(to_frame(s, u), cplx(36.7715, 32.5603), tol);
}

TEST(Centrodes, FixedCentrodeIsFirstPole) {
    auto m = fourbar_motion(presets::fourbar_unit());
    for (double phi : {0.0, 0.8, 1.6}) {
        auto c = centrodes(m, phi);
        auto s = frame_state(m, phi);
        expect_point(c.fixed, pole(s, 1), 1e-12);
        expect_point(c.moving, to_frame(s, pole(s, 1)), 1e-12);
    }
}

TEST(Poles, PureTranslationHasNoPole) {
    PlanarMotion m;
    m.origin = [](double p) { return CJet{cplx(p, 0), 1.0, 0.0, 0.0}; };
    m.angle = [](double) { return Jet{0.3, 0.0, 0.0, 0.0}; };
    EXPECT_THROW(pole(m, 0.0, 1), PoleAtInfinity);
    EXPECT_THROW(centrodes(m, 0.0), PoleAtInfinity);
}

TEST(Poles, FirstPoleHasZeroVelocity) {
    auto m = fourbar_motion(presets::fourbar_large());
    for (double phi : {0.3, 2.0, rad(345)}) {
        auto s = frame_state(m, phi);
        auto j = frame_point_jet(s, to_frame(s, pole(s, 1)));
        EXPECT_LT(std::abs(j[1]), 1e-10);
        auto j2 = frame_point_jet(s, to_frame(s, pole(s, 2)));
        EXPECT_LT(std::abs(j2[2]), 1e-9);
    }
}

TEST(FrameJets, PassFdCheck) {
    auto m = fourbar_motion(presets::fourbar_large());
    auto c = frame_point_curve(m, cplx(10, 5));
    auto ts = kin2d::test::interior(0, 2 * pi, 120);
    for (int k = 0; k < 3; ++k)
        EXPECT_LT(fd_check([&](double t) { return c.der(t, k); }, [&](double t) { return c.der(t, k + 1); }, ts), 1e-5);
}
