#include <cmath>

#include <gtest/gtest.h>

#include "cuspidal/jet.hpp"

using namespace cusp;

TEST(Jet1, ProductMatchesPolynomialProduct) {
    Jet1 a(4, 1.0), b(4, 2.0);
    a[1] = 3.0;
    b[1] = -1.0;
    b[2] = 0.5;
    const Jet1 c = a * b;
    EXPECT_DOUBLE_EQ(c[0], 2.0);
    EXPECT_DOUBLE_EQ(c[1], 5.0);
    EXPECT_DOUBLE_EQ(c[2], -2.5);
    EXPECT_DOUBLE_EQ(c[3], 1.5);
    EXPECT_DOUBLE_EQ(c[4], 0.0);
}

TEST(Jet1, MixedOrdersTruncateToSmaller) {
    const Jet1 a = Jet1::variable(6, 0.0), b = Jet1::variable(3, 0.0);
    EXPECT_EQ((a * b).order(), 3);
    EXPECT_EQ((a + b).order(), 3);
}

TEST(Jet1, ElementaryFunctionsMatchTaylorSeries) {
    const Jet1 t = Jet1::variable(8, 0.3);
    const Jet1 e = exp(t), s = sin(t), l = log(t);
    for (int k = 0; k <= 8; ++k) {
        EXPECT_NEAR(e.derivative_value(k), std::exp(0.3), 1e-12);
        EXPECT_NEAR(s.derivative_value(k), std::sin(0.3 + k * M_PI / 2), 1e-10);
    }
    EXPECT_NEAR(l.derivative_value(3), 2.0 / std::pow(0.3, 3), 1e-9);
}

TEST(Jet1, QuotientInvertsProduct) {
    const Jet1 t = Jet1::variable(7, 0.5);
    const Jet1 a = cos(t) + 2.0, b = exp(t * t);
    const Jet1 q = (a * b) / b;
    for (int k = 0; k <= 7; ++k) EXPECT_NEAR(q[k], a[k], 1e-13);
}

TEST(Jet1, SqrtSquaresBack) {
    const Jet1 t = Jet1::variable(6, 0.2);
    const Jet1 a = 1.0 + t * t + sin(t);
    const Jet1 r = sqrt(a);
    const Jet1 back = r * r;
    for (int k = 0; k <= 6; ++k) EXPECT_NEAR(back[k], a[k], 1e-13);
    EXPECT_THROW(sqrt(t - 0.2), JetError);
}

TEST(Jet1, PowConstMatchesClosedForm) {
    const Jet1 t = Jet1::variable(5, 2.0);
    const Jet1 p = pow_const(t, 1.5);
    EXPECT_NEAR(p.derivative_value(0), std::pow(2.0, 1.5), 1e-13);
    EXPECT_NEAR(p.derivative_value(1), 1.5 * std::sqrt(2.0), 1e-13);
    EXPECT_NEAR(p.derivative_value(2), 0.75 / std::sqrt(2.0), 1e-13);
}

TEST(Jet1, DerivativeAndIntegralAreInverse) {
    const Jet1 t = Jet1::variable(6, 0.0);
    const Jet1 a = exp(t);
    const Jet1 b = a.derivative().integral(a.value());
    for (int k = 0; k <= 5; ++k) EXPECT_NEAR(b[k], a[k], 1e-15);
}

TEST(Jet1, ComposeMatchesChainRule) {
    const Jet1 t = Jet1::variable(5, 0.0);
    const Jet1 g = exp(Jet1::variable(5, 0.0));  // e^x about 0
    const Jet1 T = sin(t);
    const Jet1 c = compose(g, T);                // e^{sin t}
    const Jet1 direct = exp(sin(t));
    for (int k = 0; k <= 5; ++k) EXPECT_NEAR(c[k], direct[k], 1e-14);
}

TEST(Jet2, PartialsOfProduct) {
    const Jet2 u = Jet2::variable_u(5, {1.0, 2.0}), v = Jet2::variable_v(5, {1.0, 2.0});
    const Jet2 f = u * u * v + sin(u * v);
    // d_u d_v (u^2 v + sin(uv)) = 2u + cos(uv) - uv sin(uv)
    EXPECT_NEAR(f.partial(1, 1), 2.0 + std::cos(2.0) - 2.0 * std::sin(2.0), 1e-13);
    EXPECT_NEAR(f.partial(0, 2), -1.0 * std::sin(2.0), 1e-13);
}

TEST(Jet2, ShiftedReexpandsExactly) {
    Jet2 a(3);
    a.coeff(0, 0) = 1.0;
    a.coeff(1, 0) = 2.0;
    a.coeff(1, 1) = -3.0;
    a.coeff(0, 3) = 0.5;
    const Jet2 b = a.shifted(0.3, -0.2);
    EXPECT_NEAR(b.value(), a.evaluate(0.3, -0.2), 1e-15);
    EXPECT_NEAR(b.evaluate(-0.1, 0.4), a.evaluate(0.2, 0.2), 1e-14);
}

TEST(Jet2, DivideByVRemovesAxisFactor) {
    const Jet2 u = Jet2::variable_u(5, {0.0, 0.0}), v = Jet2::variable_v(5, {0.0, 0.0});
    const Jet2 F = v * (1.0 + u + v * v);
    const Jet2 H = F.divide_by_v(1e-12);
    EXPECT_EQ(H.order(), 4);
    EXPECT_DOUBLE_EQ(H.coeff(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(H.coeff(1, 0), 1.0);
    EXPECT_DOUBLE_EQ(H.coeff(0, 2), 1.0);
    EXPECT_THROW((F + u).divide_by_v(1e-12), JetError);
}

TEST(Jet2, ComposeThroughChart) {
    const Jet2 x = Jet2::variable_u(4, {0.0, 0.0}), y = Jet2::variable_v(4, {0.0, 0.0});
    const Jet2 F = x * x + 3.0 * y;  // about (0, 0)
    const Jet2 t = Jet2::variable_u(4, {0.0, 0.0}), s = Jet2::variable_v(4, {0.0, 0.0});
    const Jet2 G = compose(F, t + s, t * s);
    EXPECT_NEAR(G.evaluate(0.1, 0.2), 0.09 + 3.0 * 0.02, 1e-15);
}

TEST(Jet2, PlugCurveRestrictsToCurve) {
    const Jet2 u = Jet2::variable_u(5, {0.0, 0.0}), v = Jet2::variable_v(5, {0.0, 0.0});
    const Jet2 F = exp(u) * cos(v);
    const Jet1 t = Jet1::variable(5, 0.0);
    const Jet1 g = plug_curve(F, t, t * t);
    const Jet1 direct = exp(t) * cos(t * t);
    for (int k = 0; k <= 5; ++k) EXPECT_NEAR(g[k], direct[k], 1e-14);
}

TEST(JetVec, CrossAndNormalize) {
    const Jet1 t = Jet1::variable(4, 0.0);
    const JetVec1d a{cos(t), sin(t), t * 0.0};
    const JetVec1d b{t * 0.0, t * 0.0, t * 0.0 + 1.0};
    const JetVec1d c = cross(a, b);
    EXPECT_NEAR(c.x.value(), 0.0, 1e-15);
    EXPECT_NEAR(c.y.value(), -1.0, 1e-15);
    const Jet1 n = norm(a * 3.0);
    for (int k = 1; k <= 4; ++k) EXPECT_NEAR(n[k], 0.0, 1e-14);
    EXPECT_NEAR(n.value(), 3.0, 1e-15);
}
