#include <gtest/gtest.h>

#include "kin2d/presets.hpp"
#include "support.hpp"

using namespace kin2d;
using kin2d::test::interior;

namespace {

double worst_fd(const ParametricCurve& c, int orders, const std::vector<double>& ts) {
    double w = 0;
    for (int k = 0; k < orders; ++k)
        w = std::max(w, fd_check([&](double t) { return c.der(t, k); }, [&](double t) { return c.der(t, k + 1); }, ts));
    return w;
}

} // namespace

// ------------------------------------------------------------ flat face

TEST(FlatFace, PerimeterAndCurvatureExtremes) {
    auto cam = presets::flat_face_cam();
    auto m = tff_metrics(cam);
    EXPECT_NEAR(m.perimeter, 549 * pi / 7, 1e-9);
    EXPECT_NEAR(m.rho_min.value, 10.7168, 1e-3);
    EXPECT_NEAR(m.rho_min.at, 4.32691, 1e-3);
    EXPECT_NEAR(m.rho_max.value, 67.2832, 1e-3);
    EXPECT_NEAR(m.rho_max.at, 5.09787, 1e-3);
    ASSERT_FALSE(m.dwell_radii.empty());
    EXPECT_NEAR(m.dwell_radii.front(), 48.0, 1e-10);
    EXPECT_NEAR(m.dwell_radii.back(), 30.0, 1e-10);
}

TEST(FlatFace, AreaMatchesIndependentQuadrature) {
    // frozen from the closed form 9(8626176 - 44212981 pi^2)/(256256 pi)
    auto cam = presets::flat_face_cam();
    auto m = tff_metrics(cam);
    EXPECT_NEAR(m.signed_area, -4781.860377198169, 1e-8);
    double closed = 9 * (8626176 - 44212981 * pi * pi) / (256256 * pi);
    EXPECT_NEAR(m.signed_area, closed, 1e-8);
    EXPECT_NEAR(enclosed_area(tff_curve(cam)), m.signed_area, 1e-8);
    EXPECT_NEAR(arc_length(tff_curve(cam)), m.perimeter, 1e-9);
}

TEST(FlatFace, ContourDerivativesPassFdCheck) {
    auto cam = presets::flat_face_cam();
    EXPECT_LT(worst_fd(tff_curve(cam), 2, interior(0, 2 * pi, 400, cam.r.knots())), 1e-5);
}

TEST(FlatFace, CurvatureIsReciprocalRadius) {
    auto cam = presets::flat_face_cam();
    auto c = tff_curve(cam);
    for (double t : interior(0, 2 * pi, 50, cam.r.knots()))
        EXPECT_NEAR(kappa(c, t), tff_kappa(cam, t), 1e-12);
    EXPECT_EQ(tff_undercut(cam).kind, UndercutKind::convex);
}

TEST(Undercut, ThresholdAndSubThresholdCam) {
    auto law = presets::flat_face_cam().r;
    auto th = tff_cusp_thresholds(law);
    ASSERT_FALSE(th.empty());
    EXPECT_NEAR(th.front().value, 4.4022287, 1e-5);
    EXPECT_NEAR(th.front().at, 2.17476, 1e-4);
    auto glob = tff_cusp_threshold(law);
    EXPECT_NEAR(glob.value, 19.2832237687511, 1e-9);

    TranslatingFlatFaceCam cam{th.front().value, law};
    auto u = tff_undercut(cam);
    EXPECT_EQ(u.kind, UndercutKind::loop);
    std::vector<double> want{2.17476, 4.04221, 4.59237};
    ASSERT_EQ(u.cusps.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(u.cusps[i], want[i], 1e-3);
    ASSERT_EQ(u.loops.size(), 1u);
    EXPECT_NEAR(u.loops[0].ta, 3.78000, 1e-3);
    EXPECT_NEAR(u.loops[0].tb, 4.82395, 1e-3);
    EXPECT_LT(std::abs(u.loops[0].point - cplx(-18.0484, 13.2662)), 1e-3);
}

TEST(Undercut, BetweenBoundsGivesCuspsOrLoop) {
    auto law = presets::flat_face_cam().r;
    EXPECT_EQ(tff_undercut({25.0, law}).kind, UndercutKind::convex);
    EXPECT_NE(tff_undercut({10.0, law}).kind, UndercutKind::convex);
}

TEST(Undercut, ReducedTransferFollowsTheCorner) {
    auto law = presets::flat_face_cam().r;
    TranslatingFlatFaceCam cam{tff_cusp_thresholds(law).front().value, law};
    auto u = tff_undercut(cam);
    ASSERT_FALSE(u.loops.empty());
    auto red = tff_reduced_transfer(cam, u.loops[0]);
    double a = u.loops[0].ta, b = u.loops[0].tb;
    EXPECT_NEAR(red(a), law(a), 1e-9);
    EXPECT_NEAR(red(b), law(b), 1e-6);
    EXPECT_NEAR(red(0.5), law(0.5), 0.0);
    // the face lines cut the loop away, so the corner holds the follower below the nominal law
    for (double t : {a + 0.1 * (b - a), 0.5 * (a + b), b - 0.1 * (b - a)}) EXPECT_LT(red(t), law(t));
}

// -------------------------------------------------------- swinging face

TEST(SwingingFace, AngleAndTotalCurvature) {
    auto cam = presets::swinging_cam();
    EXPECT_NEAR(deg(cam.psi(rad(230))), 6.88725, 1e-4);
    EXPECT_NEAR(total_curvature(sff_curve(cam)), -2 * pi, 1e-8);
}

TEST(SwingingFace, ContourDerivativesPassFdCheck) {
    auto cam = presets::swinging_cam();
    EXPECT_LT(worst_fd(sff_curve(cam), 2, interior(0, 2 * pi, 300, cam.psi.knots())), 1e-5);
}

TEST(SwingingFace, ContactPointLiesOnTheFace) {
    auto cam = presets::swinging_cam();
    for (double phi : {0.5, 3.5, 4.4}) {
        auto p = sff_contour(cam, phi);
        // back in fixed coordinates the point sits on the face line through zB0 + a E
        cplx zf = p.z[0] * expi(phi);
        cplx E = expi(cam.psi0 + cam.psi(phi));
        EXPECT_NEAR(scalar_product(zf - cam.zB0, E), cam.a, 1e-12);
    }
}

TEST(SwingingFace, SingularWhenFollowerMatchesCam) {
    // psi' = 1 somewhere: the face turns with the cam
    SwingingFlatFaceCam cam{cplx(2, 2), 0.0, 1.0, make_motion_law({Segment::dwell(pi), Segment::hump(pi, 2.0, 2)})};
    auto g = [&](double t) { return cam.psi(t, 1) - 1.0; };
    double t = find_root_1d(g, pi + 0.01, 1.25 * pi);
    EXPECT_NEAR(t, pi + pi / 12, 1e-9);
    EXPECT_THROW(sff_contour(cam, t), FollowerSingular);
}

// --------------------------------------------------------------- roller

TEST(Roller, LengthsAreasAndIdentities) {
    auto cam = presets::roller_cam();
    auto m = roller_metrics(cam);
    EXPECT_TRUE(m.identities_apply);
    EXPECT_NEAR(m.L_B, 367.5036483978, 1e-6);
    EXPECT_NEAR(m.L_K, m.L_B - 2 * pi * cam.rho, 1e-6);
    EXPECT_NEAR(m.A_B, -10589.1488, 1e-3);
    EXPECT_NEAR(m.A_K, m.A_B + cam.rho * m.L_B - pi * cam.rho * cam.rho, 1e-3);
    EXPECT_NEAR(arc_length(roller_contour_curve(cam)), m.L_K, 1e-6);
}

TEST(Roller, TransmissionAngleExtremum) {
    auto cam = presets::roller_cam();
    auto mx = max_transmission_angle(cam);
    EXPECT_NEAR(deg(mx.value), 129.1068, 1e-3);
    EXPECT_NEAR(deg(mx.at), 274.4098, 1e-3);
    for (double t : interior(0, 2 * pi, 360))
        EXPECT_NEAR(transmission_angle(cam, t), transmission_angle_complex(cam, t), 1e-12);
}

TEST(Roller, ContactIsOneRadiusFromCenter) {
    auto cam = presets::roller_cam();
    for (double t : interior(0, 2 * pi, 40, cam.psi.knots())) {
        auto p = roller_curves(cam, t);
        EXPECT_NEAR(std::abs(p.zK - p.zB[0]), cam.rho, 1e-12);
        // normal contact: zK - zB is perpendicular to the center-curve tangent
        EXPECT_NEAR(scalar_product(p.zK - p.zB[0], p.zB[1]), 0.0, 1e-9 * std::abs(p.zB[1]));
    }
}

TEST(Roller, CenterCurveDerivativesPassFdCheck) {
    auto cam = presets::roller_cam();
    EXPECT_LT(worst_fd(roller_center_curve(cam), 3, interior(0, 2 * pi, 300, cam.psi.knots())), 1e-5);
}

// ----------------------------------------------------------- A0 regions

TEST(A0Regions, IntersectionsAndMinimumCams) {
    auto f = presets::a0_follower();
    auto rep = a0_regions(f, rad(50));
    std::vector<A0Candidate> ok;
    for (auto& c : rep.candidates)
        if (c.admissible) ok.push_back(c);
    ASSERT_EQ(ok.size(), 2u);
    std::sort(ok.begin(), ok.end(), [](auto& a, auto& b) { return a.point.real() < b.point.real(); });
    EXPECT_LT(std::abs(ok[0].point - cplx(-68.4388, -5.3116)), 1e-3);
    EXPECT_LT(std::abs(ok[1].point - cplx(-9.34509, 67.8047)), 1e-3);
    EXPECT_NEAR(deg(ok[0].phi_plus), 114.142, 1e-3);
    EXPECT_NEAR(deg(ok[0].phi_minus), 271.485, 1e-3);
    EXPECT_NEAR(deg(ok[1].phi_plus), 269.281, 1e-3);
    EXPECT_NEAR(deg(ok[1].phi_minus), 58.7963, 1e-3);
    EXPECT_NEAR(ok[0].max_radius, 55.1931, 1e-3);
    EXPECT_NEAR(ok[1].max_radius, 53.1475, 1e-3);
    EXPECT_TRUE(ok[0].p_cam);
    EXPECT_FALSE(ok[1].p_cam);
    for (auto& c : ok) {
        EXPECT_GE(c.mu_min, rad(50) - 1e-6);
        EXPECT_LE(c.mu_max, pi - rad(50) + 1e-6);
    }
}

TEST(A0Regions, EnvelopePointsLieOnTheirLines) {
    auto f = presets::a0_follower();
    for (int s : {1, -1})
        for (double phi : interior(0.05, 5 * pi / 6 - 0.05, 30)) {
            auto g = a0_family_line(f, rad(50), s, phi);
            cplx z = a0_envelope_point(f, rad(50), s, phi);
            EXPECT_LT(std::abs(point_line_distance(z, g)), 1e-9 * (1 + std::abs(z)));
        }
}

TEST(A0Regions, MirrorSwapsCamType) {
    auto f = presets::a0_follower();
    A0Options opt;
    opt.mirror = true;
    auto rep = a0_regions(f, rad(50), opt);
    for (auto& c : rep.candidates)
        if (c.admissible) {
            EXPECT_EQ(c.p_cam, c.point.real() > -30.0);
        }
}
