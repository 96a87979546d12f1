#include <gtest/gtest.h>

#include "kin2d/presets.hpp"
#include "support.hpp"

using namespace kin2d;
using kin2d::test::interior;

namespace {

CJet fixed(cplx z) { return {z, 0.0, 0.0, 0.0}; }

} // namespace

TEST(Dyad, UnitFourBarAtQuarterTurn) {
    double phi = pi / 2;
    auto s = solve_dyad(std::sqrt(2.0), 2.0, crank_jet(0.0, 1.0, phi), fixed(cplx(3, 2)), 1);
    ASSERT_FALSE(s.singular);
    EXPECT_LT(std::abs(s.unit - cplx(1, 1) / std::sqrt(2.0)), 1e-10);
    EXPECT_NEAR(s.d1, -1.0, 1e-10);
    EXPECT_NEAR(s.d2, -1.5, 1e-10);
    EXPECT_NEAR(s.d3, -39.0 / 4.0, 1e-10);
    cplx cf = dyad_unit_cosine_form(std::sqrt(2.0), 2.0, expi(phi), cplx(3, 2), 1);
    EXPECT_LT(std::abs(cf - s.unit), 1e-12);
}

TEST(Dyad, BranchesAreMirrorImages) {
    CJet A = fixed(0.0), B = fixed(4.0);
    auto up = solve_dyad(3.0, 2.0, A, B, 1), down = solve_dyad(3.0, 2.0, A, B, -1);
    EXPECT_LT(std::abs(up.unit - std::conj(down.unit)), 1e-14);
    // the joint closes the triangle
    EXPECT_NEAR(std::abs(4.0 - 3.0 * up.unit), 2.0, 1e-13);
}

TEST(Dyad, ClosedFormsAgreeOnRandomConfigurations) {
    kin2d::test::Rng rng(21);
    int checked = 0;
    while (checked < 2000) {
        cplx a = rng.point(5), b = rng.point(5);
        double d = std::abs(b - a), l1 = rng.uniform(0.5, 6), l2 = rng.uniform(0.5, 6);
        if (!(d < l1 + l2 - 1e-3 && d > std::abs(l1 - l2) + 1e-3)) continue;
        for (int br : {1, -1}) {
            auto s = solve_dyad(l1, l2, fixed(a), fixed(b), br);
            EXPECT_LT(std::abs(s.unit - dyad_unit_cosine_form(l1, l2, a, b, br)), 1e-12);
            EXPECT_NEAR(std::abs(b - a - l1 * s.unit), l2, 1e-11 * (1 + l2));
        }
        ++checked;
    }
}

TEST(Dyad, Errors) {
    EXPECT_THROW(solve_dyad(1.0, 1.0, fixed(0.0), fixed(5.0), 1), Unassemblable);
    EXPECT_THROW(solve_dyad(-1.0, 1.0, fixed(0.0), fixed(1.0), 1), DomainError);
    EXPECT_THROW(dyad_unit_cosine_form(1.0, 1.0, 0.0, 5.0, 1), Unassemblable);
    auto s = solve_dyad(1.5, 0.5, crank_jet(0.0, 1.0, 0.0), fixed(3.0), 1);
    EXPECT_TRUE(s.singular);
    EXPECT_THROW(require_regular(s), StretchedSingular);
}

TEST(Dyad, DerivativesPassFdCheck) {
    auto angle = [](double phi) { return presets::fourbar_unit_rocker_angle(phi); };
    auto ts = interior(-0.4, 1.6, 60);
    for (int k = 0; k < 3; ++k) {
        double w = fd_check(
            [&](double t) {
                // unwrap the angle near t so the difference quotient sees no jump
                double v = angle(t)[k];
                return k == 0 ? v - 2 * pi * std::round((v - angle(1.5)[0]) / (2 * pi)) : v;
            },
            [&](double t) { return angle(t)[k + 1]; }, ts);
        EXPECT_LT(w, 1e-5) << "order " << k + 1;
    }
}

TEST(FiveBar, LengthAreaAndLoops) {
    auto cfg = presets::fivebar();
    auto c = fivebar_curve(cfg);
    EXPECT_NEAR(arc_length(c), 289.414489645, 1e-5);
    auto xs = self_intersections(c);
    ASSERT_EQ(xs.size(), 3u);
    const double want[3][2] = {{12.18109598202294059, 60.79145803836321748},
                               {171.21734636777756458, 330.79977628841437926},
                               {197.44955305572769338, 322.29595150395381415}};
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(deg(xs[i].ta), want[i][0], 1e-4);
        EXPECT_NEAR(deg(xs[i].tb), want[i][1], 1e-4);
    }
    auto loops = loop_areas(c, xs);
    EXPECT_TRUE(loops.complete);
    EXPECT_NEAR(loops.signed_total, 984.03111500882125140, 1e-6);
    EXPECT_NEAR(loops.absolute_total, 1039.94097285931976352, 1e-6);
    std::vector<double> got;
    for (auto& l : loops.loops) got.push_back(l.area);
    std::sort(got.begin(), got.end());
    std::vector<double> ref{-21.73689201894431442, -6.21803690630494164, 232.53267867845424667, 779.45336525561626079};
    ASSERT_EQ(got.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(got[i], ref[i], 1e-6);
}

TEST(FiveBar, FourInflections) {
    auto cp = critical_points(fivebar_curve(presets::fivebar()));
    EXPECT_EQ(cp.inflections.size(), 4u);
}

TEST(FiveBar, CouplerJetPassesFdCheck) {
    auto c = fivebar_curve(presets::fivebar());
    auto ts = interior(0, 2 * pi, 180);
    for (int k = 0; k < 3; ++k)
        EXPECT_LT(fd_check([&](double t) { return c.der(t, k); }, [&](double t) { return c.der(t, k + 1); }, ts), 1e-5);
}

TEST(FourBar, CrankJetPassesFdCheck) {
    auto ts = interior(0, 2 * pi, 50);
    for (int k = 0; k < 3; ++k)
        EXPECT_LT(fd_check([&](double t) { return crank_jet(cplx(1, 2), 3.0, t)[k]; },
                           [&](double t) { return crank_jet(cplx(1, 2), 3.0, t)[k + 1]; }, ts),
                  1e-5);
}
