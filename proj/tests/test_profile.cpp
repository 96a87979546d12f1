#include <gtest/gtest.h>

#include "kin2d/envelope.hpp"
#include "kin2d/presets.hpp"
#include "support.hpp"

using namespace kin2d;
using kin2d::test::interior;

namespace {

const std::vector<PnProfile> kSmooth{{1.0, 0.072, 3}, {1.0, 0.1, 3}, {2.0, 0.05, 4}, {1.0, 0.03, 5}, {9.0, 0.5, 3}};

} // namespace

TEST(PnProfile, ClosedFormAreaAndLength) {
    for (auto& p : kSmooth) {
        auto m = profile_metrics(p);
        auto c = pn_curve(p);
        EXPECT_NEAR(enclosed_area(c), m.area, 1e-8) << p.R << " " << p.e << " " << p.n;
        EXPECT_NEAR(arc_length(c), m.length, 1e-8);
        EXPECT_NEAR(m.area, pi * p.R * p.R - 0.5 * pi * (p.n * p.n - 1) * p.e * p.e, 1e-15);
    }
    // the area formula also holds as a loop-signed total past the smooth range
    PnProfile big{1.0, 0.25, 3};
    EXPECT_NEAR(enclosed_area(pn_curve(big)), profile_metrics(big).area, 1e-8);
}

TEST(PnProfile, ConstantWidthForOddLobes) {
    for (auto& p : kSmooth) {
        if (p.n % 2 == 0) continue;
        double worst = 0;
        for (double t : interior(0, 2 * pi, 720)) worst = std::max(worst, std::abs(pn_width(p, t) - 2 * p.R));
        EXPECT_LT(worst, 1e-12);
        auto c = pn_curve(p);
        for (double t : {0.1, 0.9, 2.2})
            EXPECT_NEAR(support_of_convex(c, t) + support_of_convex(c, t + pi), 2 * p.R, 1e-9);
    }
    PnProfile even{2.0, 0.05, 4};
    EXPECT_FALSE(profile_metrics(even).constant_width);
    EXPECT_GT(std::abs(pn_width(even, 0.0) - pn_width(even, pi / 4)), 0.1);
}

TEST(PnProfile, TangentOrthogonalToSupportNormal) {
    for (auto& p : kSmooth) {
        double worst = 0;
        for (double t : interior(0, 2 * pi, 720)) {
            CJet z = pn_point(p, t);
            worst = std::max(worst, std::abs(scalar_product(z[1], expi(t))) / std::abs(z[1]));
            // the point sits on its support line
            worst = std::max(worst, std::abs(scalar_product(z[0], expi(t)) - pn_support(p, t)));
        }
        EXPECT_LT(worst, 1e-12);
    }
}

TEST(PnProfile, DerivativesPassFdCheck) {
    auto ts = interior(0, 2 * pi, 300);
    for (auto& p : kSmooth) {
        auto c = pn_curve(p);
        for (int k = 0; k < 3; ++k)
            EXPECT_LT(fd_check([&](double t) { return c.der(t, k); }, [&](double t) { return c.der(t, k + 1); }, ts), 1e-5);
    }
}

TEST(PnProfile, Validity) {
    EXPECT_EQ(validity_check(presets::p3g()), ProfileValidity::smooth);
    EXPECT_EQ(validity_check({1.0, 0.125, 3}), ProfileValidity::cusps);
    EXPECT_EQ(validity_check({1.0, 0.25, 3}), ProfileValidity::self_intersecting);
    auto loops = profile_loops({1.0, 0.25, 3});
    EXPECT_EQ(loops.loops.size(), 4u);
    double sum = 0;
    for (auto& l : loops.loops) sum += l.area;
    EXPECT_NEAR(sum, profile_metrics({1.0, 0.25, 3}).area, 1e-9);
}

TEST(Generator, RabinowitzDecomposition) {
    auto p = presets::rabinowitz();
    auto g = generator_bars(p);
    EXPECT_EQ(g.l2, 9.0);
    EXPECT_EQ(g.l3, 2.0);
    EXPECT_EQ(g.l4, 1.0);
    for (double t : interior(0, 2 * pi, 360)) {
        cplx ref = 9.0 * expi(t) + 2.0 * expi(pi - 2 * t) + expi(4 * t);
        EXPECT_LT(std::abs(pn_point(p, t)[0] - ref), 1e-13);
        EXPECT_LT(std::abs(bar_sum(p, t) - ref), 1e-13);
    }
}

TEST(Generator, BarSumReproducesCurveForAnyLobeCount) {
    for (auto& p : kSmooth)
        for (double t : interior(0, 2 * pi, 90)) EXPECT_LT(std::abs(bar_sum(p, t) - pn_point(p, t)[0]), 1e-12);
    auto g = generator_bars(presets::p4_generator());
    EXPECT_DOUBLE_EQ(g.l3, 0.625);
    EXPECT_DOUBLE_EQ(g.l4, 0.375);
    EXPECT_NEAR(g.rho1, 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(g.rho3, 1.0 / 3.0, 1e-15);
    EXPECT_DOUBLE_EQ(g.rho2, 1.25);
    EXPECT_DOUBLE_EQ(g.rho4, 0.625);
}

TEST(Cnc, ToolOffsetApproachesLimitMonotonically) {
    auto p = presets::rabinowitz();
    std::vector<double> phis;
    for (int i = 0; i <= 72; ++i) phis.push_back(2 * pi * i / 72 / 3);
    double prev = INFINITY;
    for (double r : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 256.0, 1024.0, 4096.0}) {
        auto sw = cnc_sweep(p, r, phis);
        double gap = 0;
        for (std::size_t i = 0; i < phis.size(); ++i)
            gap = std::max(gap, std::abs(sw[i].x_shifted + p.e * std::cos(p.n * phis[i])));
        EXPECT_LT(gap, prev) << "r = " << r;
        // the gap decays like 1/r
        EXPECT_LT(gap * r, 4.5) << "r = " << r;
        prev = gap;
    }
    EXPECT_LT(prev, 1.2e-3);
}

TEST(Cnc, ToolCentreIsOneRadiusFromContact) {
    auto p = presets::p3g();
    const double r = 0.3;
    for (double phi : {0.0, 0.4, 1.1}) {
        auto q = cnc_linear_toolpath(p, r, phi);
        cplx z = pn_point(p, q.f)[0] * expi(-phi);
        cplx centre(q.x, 0.0);
        EXPECT_NEAR(std::abs(centre - z), r, 1e-10);
    }
    EXPECT_THROW(cnc_linear_toolpath(p, 0.0, 0.0), DomainError);
}

TEST(ToolPath, EllipseCentredAtOffsetRadius) {
    auto p = presets::p3g();
    auto c = tool_ellipse_path(p, 0.2);
    for (double t : {0.3, 1.0}) {
        cplx z = c(t) - (p.R + 0.2);
        EXPECT_NEAR(std::norm(z.real() / p.e) + std::norm(z.imag() / (p.n * p.e)), 1.0, 1e-12);
    }
    EXPECT_THROW(tool_ellipse_path(p, -1.0), DomainError);
}

TEST(Reuleaux, ComparisonAndEqualArea) {
    auto rc = reuleaux_compare({1.0, 0.125, 3});
    EXPECT_TRUE(rc.profile_larger);
    EXPECT_NEAR(rc.reuleaux_area, (pi - std::sqrt(3.0)) / 2 * 4, 1e-14);
    double e = equal_area_eccentricity(1.0, 3);
    EXPECT_NEAR(profile_metrics({1.0, e, 3}).area, reuleaux_area(1.0), 1e-13);
    EXPECT_THROW(reuleaux_compare({1.0, 0.1, 4}), DomainError);
}

TEST(PnC, ClippedByArcCircle) {
    auto p = presets::p4_generator();
    auto q = pnc_profile(p, 0.914);
    ASSERT_TRUE(q.blended);
    EXPECT_EQ(q.blend_params.size(), 8u);
    for (double t : q.blend_params) EXPECT_NEAR(std::abs(pn_point(p, t)[0]), 0.914, 1e-12);
    for (double t : interior(0, 2 * pi, 360)) EXPECT_LE(std::abs(pnc_point(q, t)), 0.914 + 1e-12);
    EXPECT_FALSE(pnc_profile(p, 5.0).blended);
}
