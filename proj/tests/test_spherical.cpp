#include <cmath>

#include <gtest/gtest.h>

#include "support.hpp"
#include "cuspidal/spherical.hpp"

using namespace cusp;
using namespace cusp::test;

namespace {

/// c(t) = normalize(eps a t^2, eps b t^3, 1): a cusp at t = 0 with mu = 6 b / (2 a)^(3/2) eps^(-1/2).
JetVec1d gnomonic_cusp(double eps, double a, double b, int order = 6) {
    const Jet1 t = Jet1::variable(order, 0.0);
    const JetVec1d c{eps * a * t * t, eps * b * t * t * t, t * 0.0 + 1.0};
    return normalized(c);
}

}  // namespace

TEST(Spherical, CovariantDerivativeIsTangent) {
    const Jet1 t = Jet1::variable(6, 0.2);
    const JetVec1d c{cos(t), sin(t), t * 0.0};
    const JetVec1d X = derivative(c);
    const JetVec1d D = covariant_derivative(c, X);
    // great circle: the covariant acceleration vanishes
    EXPECT_NEAR(D.value().norm(), 0.0, 1e-14);
}

TEST(Spherical, CuspidalCurvatureOfGnomonicCusp) {
    for (double eps : {1.0, 0.25}) {
        const CuspData d = cuspidal_curvature(gnomonic_cusp(eps, 1.0, 1.0), 1.0);
        EXPECT_TRUE(d.ordinary_cusp);
        EXPECT_NEAR(d.mu, 12.0 / std::pow(2.0, 2.5) / std::sqrt(eps), 1e-12);
        EXPECT_EQ(d.sign, "zig");
    }
    const CuspData neg = cuspidal_curvature(gnomonic_cusp(1.0, 1.0, -1.0), 1.0);
    EXPECT_EQ(neg.sign, "zag");
    EXPECT_LT(neg.mu, 0.0);
}

TEST(Spherical, RegularCurveIsNotACusp) {
    const Jet1 t = Jet1::variable(6, 0.0);
    const JetVec1d c = normalized(JetVec1d{t, t * t, t * 0.0 + 1.0});
    const CuspData d = cuspidal_curvature(c, 1.0);
    EXPECT_FALSE(d.ordinary_cusp);
    EXPECT_EQ(d.sign, "none");
}

TEST(Spherical, DegenerateCuspIsRejected) {
    // (t^2, t^4): D c' and D D c' are parallel
    const Jet1 t = Jet1::variable(6, 0.0);
    const JetVec1d c = normalized(JetVec1d{t * t, t * t * t * t, t * 0.0 + 1.0});
    EXPECT_FALSE(cuspidal_curvature(c, 1.0).ordinary_cusp);
}

TEST(Spherical, GaussLocusOfFPlusMatchesClosedForm) {
    const auto s = fixture("fplus");
    const JetVec1d c = gauss_locus_jet(s, seed_of(first_curve(s)));
    // nu(u, 0) = (8u^3, -2u^2, 1) / sqrt(1 + 4u^4 + 64u^6); the chart parameter is arclength (u + O(u^3))
    EXPECT_NEAR((c.value() - Eigen::Vector3d(0, 0, 1)).norm(), 0.0, 1e-12);
    EXPECT_NEAR(c.y[2], -2.0, 1e-9);
    EXPECT_NEAR(c.x[3], 8.0, 1e-9);
    const CuspData d = cuspidal_curvature(c, 1.0);
    EXPECT_TRUE(d.ordinary_cusp);
    EXPECT_NEAR(d.mu, 6.0, 1e-8);
}

TEST(Spherical, CycloidGaussLocusIsConstant) {
    const auto s = fixture("cycloid");
    const JetVec1d c = gauss_locus_jet(s, seed_of(first_curve(s)));
    EXPECT_NEAR((c.value() - Eigen::Vector3d(0, 0, 1)).norm(), 0.0, 1e-12);
    for (int k = 1; k <= c.x.order(); ++k) EXPECT_NEAR(std::abs(c.x[k]) + std::abs(c.y[k]) + std::abs(c.z[k]), 0.0, 1e-9);
}
