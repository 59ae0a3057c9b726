#include <cmath>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace cusp;
using namespace cusp::test;

namespace {

// Closed forms along the u-axis of f^+ (derived symbolically).
double ks_plus(double u) {
    return 6 * std::sqrt(1 + 4 * std::pow(u, 4) + 64 * std::pow(u, 6)) /
           std::pow(1 + 36 * u * u + 16 * std::pow(u, 6), 1.5);
}
double kc_plus(double u) {
    return 2 * std::pow(1 + 36 * u * u + 16 * std::pow(u, 6), 0.75) /
           std::pow(1 + 4 * std::pow(u, 4) + 64 * std::pow(u, 6), 1.25);
}
double kt_plus(double u) { return 4 * u / (1 + 4 * std::pow(u, 4) + 64 * std::pow(u, 6)); }

double K_plus(double u, double v) {
    const double d = 1 + 64 * std::pow(u, 6) + v * v + 4 * std::pow(u, 4) * (1 + 24 * v - 8 * v * v) +
                     4 * u * u * v * (1 + 9 * v - 6 * v * v + v * v * v);
    return -2 * (3 + 8 * u * u - v) / (d * d);
}

}  // namespace

TEST(Invariants, FPlusMatchesClosedFormsAlongTheCurve) {
    const auto s = fixture("fplus");
    const SingularCurve c = first_curve(s);
    for (double u : {-0.8, -0.3, 0.0, 0.25, 0.5, 0.9}) {
        const EdgeInvariants e = invariants_at(s, point_at(s, c, u), {}, false);
        EXPECT_NEAR(e.uv.x(), u, 1e-9);
        EXPECT_NEAR(e.kappa_s, ks_plus(u), 1e-8) << u;
        EXPECT_NEAR(e.kappa_nu, 0.0, 1e-10) << u;
        EXPECT_NEAR(e.kappa_c, kc_plus(u), 1e-8) << u;
        EXPECT_NEAR(e.kappa_t, kt_plus(u), 1e-8) << u;
    }
}

TEST(Invariants, FPlusDerivativesAtTheOrigin) {
    const auto s = fixture("fplus");
    const SingularCurve c = first_curve(s);
    const EdgeInvariants e = invariants_at(s, seed_of(c));
    EXPECT_NEAR(e.kappa_s, 6.0, 1e-10);
    EXPECT_NEAR(e.kappa_c, 2.0, 1e-10);
    EXPECT_NEAR(e.kappa_t_prime, 4.0, 1e-8);
    EXPECT_NEAR(e.kappa_t_prime_fd, 4.0, 1e-6);
    EXPECT_NEAR(e.kappa_nu_prime, 0.0, 1e-10);
    EXPECT_NEAR(e.kappa_s_prime, 0.0, 1e-8);
    EXPECT_NEAR(e.eta_lambda, 1.0, 1e-10);
}

TEST(Invariants, FMinusIsTheMirrorImage) {
    const auto s = fixture("fminus");
    const SingularCurve c = first_curve(s);
    const EdgeInvariants e = invariants_at(s, seed_of(c));
    EXPECT_NEAR(e.kappa_s, -6.0, 1e-10);
    EXPECT_NEAR(e.kappa_t_prime, -4.0, 1e-8);
    EXPECT_NEAR(invariants_at(s, point_at(s, c, 0.5), {}, false).kappa_t, -kt_plus(0.5), 1e-8);
}

TEST(Invariants, CycloidIsALineOfCurvature) {
    const auto s = fixture("cycloid");
    const SingularCurve c = first_curve(s);
    const auto samples = sample_invariants(s, c, 12);
    for (const auto& e : samples) {
        EXPECT_NEAR(std::abs(e.kappa_s), 1.0 / 3.0, 1e-8);
        EXPECT_NEAR(std::abs(e.kappa_c), 1.0, 1e-8);
        EXPECT_NEAR(e.kappa_t, 0.0, 1e-9);
        EXPECT_NEAR(e.kappa_nu, 0.0, 1e-9);
        EXPECT_NEAR((e.nu - Eigen::Vector3d(0, 0, 1)).norm(), 0.0, 1e-9);
    }
    EXPECT_TRUE(is_bounded_K(samples, {}));
    EXPECT_TRUE(is_curvature_line(samples, {}));
}

TEST(Invariants, NormalFormValues) {
    const auto s = fixture("normal_form");
    const EdgeInvariants e = invariants_at(s, seed_of(first_curve(s)));
    EXPECT_NEAR(e.kappa_s, 0.0, 1e-12);
    EXPECT_NEAR(e.kappa_nu, 0.0, 1e-12);
    EXPECT_NEAR(e.kappa_t, 0.0, 1e-12);
    EXPECT_NEAR(e.kappa_c, 3.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(e.Lambda_max, 0.0, 1e-12);
}

TEST(Invariants, UnboundedCurvatureIsDetected) {
    const auto s = fixture("unbounded");
    const SingularCurve c = first_curve(s);
    const auto samples = sample_invariants(s, c, 8);
    EXPECT_FALSE(is_bounded_K(samples, {}));
    EXPECT_NEAR(invariants_at(s, seed_of(c)).kappa_nu, 2.0, 1e-10);
}

TEST(Invariants, ParallelSamplingEqualsSerial) {
    const auto s = fixture("fplus");
    const SingularCurve c = first_curve(s);
    const auto a = sample_invariants(s, c, 16), b = sample_invariants_parallel(s, c, 16);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].kappa_s, b[i].kappa_s);
        EXPECT_EQ(a[i].kappa_t_prime_fd, b[i].kappa_t_prime_fd);
    }
}

TEST(LimitCurvature, FPlusBothRoutes) {
    const auto s = fixture("fplus");
    const SingularCurve c = first_curve(s);
    for (double u : {0.0, 0.5}) {
        const CurvePoint p = point_at(s, c, u);
        const EdgeInvariants e = invariants_at(s, p, {}, false);
        const LimitCurvature L = limit_gaussian_curvature(s, p, e);
        EXPECT_NEAR(L.formula, K_plus(u, 0.0), 1e-8);
        EXPECT_NEAR(L.extrapolated, K_plus(u, 0.0), 1e-6);
        EXPECT_TRUE(L.agree);
    }
}

TEST(LimitCurvature, OffCurveValuesMatchClosedForm) {
    const auto s = fixture("fplus");
    for (double u : {-0.4, 0.1, 0.6})
        for (double v : {-0.3, 0.05, 0.5}) EXPECT_NEAR(*curvatures_at(s, u, v).K, K_plus(u, v), 1e-10);
}

TEST(PrincipalCurvatures, KappaHatAndTransverseDerivative) {
    for (const char* name : {"fplus", "fminus", "cycloid"}) {
        const auto s = fixture(name);
        const CurvePoint p = seed_of(first_curve(s));
        const EdgeInvariants e = invariants_at(s, p);
        const BoundedCurvatureData b = principal_curvature_data(s, p, e);
        EXPECT_NEAR(b.kappa, 0.0, 1e-6) << name;
        EXPECT_NEAR(b.kappa_hat, e.kappa_c / 2, 1e-5) << name;
        EXPECT_NEAR(b.d_v_kappa, d_v_kappa_formula(e), 1e-4) << name;
    }
}
