#include <cmath>

#include <gtest/gtest.h>

#include <Eigen/Geometry>

#include "support.hpp"

using namespace cusp;
using namespace cusp::test;

TEST(Locate, NormalFormSamplesLieOnTheAxis) {
    const auto s = fixture("normal_form");
    const auto pts = locate_singular_points(s, 32);
    ASSERT_FALSE(pts.empty());
    for (const auto& p : pts) {
        EXPECT_NEAR(p.location.y(), 0.0, 1e-10);
        EXPECT_TRUE(p.is_front);
        EXPECT_TRUE(p.is_cuspidal_edge);
        EXPECT_NEAR(std::abs(p.eta.y()), 1.0, 1e-10);
    }
}

TEST(Locate, RegularSurfaceHasNoSingularPoints) {
    EXPECT_TRUE(locate_singular_points(fixture("sphere"), 32).empty());
}

TEST(CuspidalEdge, NormalFormEtaLambdaIsTwo) {
    const CuspidalEdgeEvidence e = is_cuspidal_edge(fixture("normal_form"), {0.0, 0.0});
    EXPECT_TRUE(e.corank_one);
    EXPECT_TRUE(e.is_front);
    EXPECT_TRUE(e.is_cuspidal_edge);
    EXPECT_NEAR(e.eta_lambda, 2.0, 1e-8);
}

TEST(CuspidalEdge, CuspidalCrossCapIsNotAFront) {
    const CuspidalEdgeEvidence e = is_cuspidal_edge(fixture("not_front"), {0.0, 0.0});
    EXPECT_TRUE(e.corank_one);
    EXPECT_FALSE(e.is_front);
    EXPECT_FALSE(e.is_cuspidal_edge);
    EXPECT_LT(e.nu_eta_normalized, 1e-10);
}

TEST(CuspidalEdge, CorankTwoIsRejected) {
    const auto s = parse_surface_text("[surface]\nx = u^2\ny = v^2\nz = u*v\nu_range=-1,1\nv_range=-1,1\n");
    EXPECT_THROW(null_direction(s, {0.0, 0.0}), SingularLocusError);
    EXPECT_FALSE(is_cuspidal_edge(s, {0.0, 0.0}).corank_one);
}

TEST(Trace, FPlusCurveIsTheUAxis) {
    const auto s = fixture("fplus");
    const SingularCurve c = first_curve(s);
    EXPECT_FALSE(c.closed);
    EXPECT_LT(c.t_min(), -0.95);
    EXPECT_GT(c.t_max(), 0.95);
    EXPECT_NEAR(seed_of(c).t, 0.0, 1e-15);
    EXPECT_NEAR(seed_of(c).uv.norm(), 0.0, 1e-9);
    for (const auto& p : c.samples) {
        EXPECT_NEAR(p.uv.y(), 0.0, 1e-10);
        EXPECT_NEAR(p.uv.x(), p.t, 1e-9);
        EXPECT_GT(p.tangent.x(), 0.999);
    }
}

TEST(Trace, CycloidCurveRunsAlongV) {
    const auto s = fixture("cycloid");
    const SingularCurve c = first_curve(s);
    for (const auto& p : c.samples) EXPECT_NEAR(p.uv.x(), 0.0, 1e-10);
    EXPECT_GT(c.samples.back().uv.y() - c.samples.front().uv.y(), 2 * M_PI - 0.1);
    EXPECT_GT(seed_of(c).tangent.y(), 0.999);
}

TEST(Trace, ClosedCurveIsDetected) {
    // cycloid profile revolved about the z-axis in Cartesian parameters: edge on the unit circle
    const auto s = parse_surface_text(
        "[surface]\nx = (2+cos(sqrt(u^2+v^2)-1))*u/sqrt(u^2+v^2)\n"
        "y = (2+cos(sqrt(u^2+v^2)-1))*v/sqrt(u^2+v^2)\n"
        "z = sqrt(u^2+v^2)-1-sin(sqrt(u^2+v^2)-1)\nu_range = -1.7, 1.9\nv_range = -1.8, 1.6\n");
    AnalysisOptions opt;
    opt.grid = 33;
    const SingularCurve c = first_curve(s, opt);
    EXPECT_TRUE(c.closed) << c.diagnostic;
    for (const auto& p : c.samples) EXPECT_NEAR(p.uv.norm(), 1.0, 1e-9);
    EXPECT_NEAR(c.period, 2 * M_PI, 1e-3);
    EXPECT_LT(c.t_max(), c.period);
}

TEST(Trace, CoOrientationReversesTheCurve) {
    auto s = fixture("fplus");
    const SingularCurve a = first_curve(s);
    s.co_orientation = -1;
    const SingularCurve b = first_curve(s);
    EXPECT_GT(seed_of(a).tangent.x(), 0.0);
    EXPECT_LT(seed_of(b).tangent.x(), 0.0);
}

TEST(Charts, AdaptedChartHasLambdaPositiveOnTheLeft) {
    const auto s = fixture("fplus");
    const SingularCurve c = first_curve(s);
    for (double t : {-0.5, 0.0, 0.3}) {
        const CurvePoint p = point_at(s, c, t);
        const AdaptedChart A = build_adapted_chart(s, p);
        const ChartJets J = chart_jets(s, A);
        const Eigen::Vector3d fs = partial(J.f, 0, 1);
        EXPECT_LT(fs.norm(), 1e-12);
        const Eigen::Vector2d left(-p.tangent.y(), p.tangent.x());
        EXPECT_GT(oriented_lambda(s, p.uv + 1e-3 * left, J.nu.value()), 0.0);
        EXPECT_LT(oriented_lambda(s, p.uv - 1e-3 * left, J.nu.value()), 0.0);
    }
}

TEST(Charts, FPlusNormalMatchesClosedForm) {
    const auto s = fixture("fplus");
    const SingularCurve c = first_curve(s);
    for (double u : {-0.6, 0.0, 0.4}) {
        const CurvePoint p = point_at(s, c, u);
        const Eigen::Vector3d nu = chart_jets(s, build_adapted_chart(s, p)).nu.value();
        const Eigen::Vector3d expect =
            Eigen::Vector3d(8 * u * u * u, -2 * u * u, 1) / std::sqrt(1 + 4 * std::pow(u, 4) + 64 * std::pow(u, 6));
        EXPECT_NEAR((nu - expect).norm(), 0.0, 1e-10);
    }
}

TEST(Charts, SpecialChartFrameIsOrthonormal) {
    for (const char* name : {"fplus", "cycloid"}) {
        const auto s = fixture(name);
        const SingularCurve c = first_curve(s);
        for (double frac : {0.2, 0.5, 0.8}) {
            const CurvePoint p = point_at(s, c, c.t_min() + frac * (c.t_max() - c.t_min()));
            const ChartJets J = chart_jets(s, build_special_adapted_chart(s, p));
            const Eigen::Vector3d ft = partial(J.f, 1, 0), h = J.h.value(), fss = partial(J.f, 0, 2);
            EXPECT_NEAR(ft.norm(), 1.0, 1e-10) << name;
            EXPECT_NEAR(fss.norm(), 1.0, 1e-10) << name;
            EXPECT_NEAR(ft.dot(fss), 0.0, 1e-10) << name;
            EXPECT_NEAR((h - fss).norm(), 0.0, 1e-10) << name;
        }
    }
}

TEST(Charts, ShiftedChartAgreesWithOriginal) {
    const auto s = fixture("cycloid");
    const SingularCurve c = first_curve(s);
    const AdaptedChart A = build_adapted_chart(s, seed_of(c));
    const AdaptedChart B = shifted_chart(A, 0.1, 0.05);
    EXPECT_NEAR(B.u.evaluate(0.02, -0.01), A.u.evaluate(0.12, 0.04), 1e-14);
    EXPECT_NEAR(B.v.evaluate(0.02, -0.01), A.v.evaluate(0.12, 0.04), 1e-14);
}

TEST(Charts, CurveJetsFollowTheCurve) {
    const auto s = fixture("fplus");
    const SingularCurve c = first_curve(s);
    const auto [U, V] = curve_jets(s, point_at(s, c, 0.2), 6);
    EXPECT_NEAR(U.evaluate(0.1), 0.3, 1e-12);
    EXPECT_NEAR(V.evaluate(0.1), 0.0, 1e-12);
}

TEST(Trace, DefaultStepIsDiameterOver200) {
    const auto s = fixture("fplus");
    AnalysisOptions opt;
    EXPECT_NEAR(trace_step(s, opt), s.domain.diameter() / 200, 1e-15);
    opt.step = 0.01;
    EXPECT_DOUBLE_EQ(trace_step(s, opt), 0.01);
}
