#include <cmath>

#include <gtest/gtest.h>

#include "cuspidal/expr.hpp"

using namespace cusp;

TEST(Expr, EvaluatesWithPrecedence) {
    EXPECT_DOUBLE_EQ(eval_scalar(parse_expression("1 + 2*3^2"), 0, 0), 19.0);
    EXPECT_DOUBLE_EQ(eval_scalar(parse_expression("-u^2"), 3, 0), -9.0);
    EXPECT_DOUBLE_EQ(eval_scalar(parse_expression("2^-1"), 0, 0), 0.5);
    EXPECT_DOUBLE_EQ(eval_scalar(parse_expression("2^3^2"), 0, 0), 512.0);
    EXPECT_DOUBLE_EQ(eval_scalar(parse_expression("u - v - 1"), 5, 2), 2.0);
    EXPECT_DOUBLE_EQ(eval_scalar(parse_expression("pow(u, 3) / v"), 2, 4), 2.0);
}

TEST(Expr, ConstantsAndFunctions) {
    EXPECT_NEAR(eval_scalar(parse_expression("(2+cos(u))*cos(v)"), 0, M_PI), -3.0, 1e-15);
    EXPECT_NEAR(eval_scalar(parse_expression("sqrt(e) * exp(-1/2)"), 0, 0), 1.0, 1e-15);
    EXPECT_NEAR(eval_scalar(parse_expression("atan(1) * 4 - pi"), 0, 0), 0.0, 1e-15);
    EXPECT_NEAR(eval_scalar(parse_expression("abs(u) + log(v)"), -2, std::exp(1.0)), 3.0, 1e-15);
}

TEST(Expr, ParseErrorsCarryPosition) {
    try {
        parse_expression("u + * v");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(parse_expression("sin(u"), ParseError);
    EXPECT_THROW(parse_expression("foo(u)"), ParseError);
    EXPECT_THROW(parse_expression("w"), ParseError);
    EXPECT_THROW(parse_expression("u v"), ParseError);
    EXPECT_THROW(parse_expression(""), ParseError);
}

TEST(Expr, DomainErrorsCarryPosition) {
    try {
        eval_scalar(parse_expression("1 + sqrt(u)"), -1, 0);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(eval_scalar(parse_expression("log(v)"), 0, -1), DomainError);
    EXPECT_THROW(eval_scalar(parse_expression("u / v"), 1, 0), DomainError);
}

TEST(Expr, JetMatchesAnalyticDerivatives) {
    const Expr e = parse_expression("v^3/3 + u^4 + u^2*v^2");
    const Jet2 j = eval_jet(e, 0.5, -0.25, 5);
    const double u = 0.5, v = -0.25;
    EXPECT_NEAR(j.partial(1, 0), 4 * u * u * u + 2 * u * v * v, 1e-14);
    EXPECT_NEAR(j.partial(0, 1), v * v + 2 * u * u * v, 1e-14);
    EXPECT_NEAR(j.partial(1, 1), 4 * u * v, 1e-14);
    EXPECT_NEAR(j.partial(0, 3), 2.0, 1e-13);
    EXPECT_NEAR(j.partial(4, 0), 24.0, 1e-12);
    EXPECT_NEAR(j.partial(3, 2), 0.0, 1e-12);
}

TEST(Expr, JetOfTranscendentalMatchesFiniteDifference) {
    const Expr e = parse_expression("(2+cos(u))*sin(v) + exp(u*v)");
    const Jet2 j = eval_jet(e, 0.3, 0.7, 4);
    const double h = 1e-5;
    auto f = [&](double u, double v) { return eval_scalar(e, u, v); };
    const double fuv = (f(0.3 + h, 0.7 + h) - f(0.3 + h, 0.7 - h) - f(0.3 - h, 0.7 + h) + f(0.3 - h, 0.7 - h)) / (4 * h * h);
    EXPECT_NEAR(j.partial(1, 1), fuv, 1e-5);
}

TEST(Expr, ToStringRoundTrips) {
    const Expr e = parse_expression("-u^2 + 3*sin(v)/(1+u) - 2^-v");
    const Expr back = parse_expression(to_string(e));
    for (double u : {0.1, 0.7})
        for (double v : {-0.4, 0.9}) EXPECT_DOUBLE_EQ(eval_scalar(back, u, v), eval_scalar(e, u, v));
}

TEST(Expr, SubstituteComposes) {
    const Expr e = parse_expression("u*v + v");
    const Expr s = substitute(e, parse_expression("u + v"), parse_expression("u - v"));
    EXPECT_DOUBLE_EQ(eval_scalar(s, 2, 1), 3.0 * 1.0 + 1.0);
}
