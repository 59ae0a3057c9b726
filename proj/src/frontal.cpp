#include "cuspidal/frontal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cuspidal/numerics.hpp"

namespace cusp {

JetVec2d unit_normal(const JetVec2d& f, int co_orientation, const Tolerances& tol) {
    const JetVec2d n = cross(derivative_u(f), derivative_v(f));
    const double len = n.value().norm();
    if (len <= tol.reg) {
        std::ostringstream os;
        os << "singular point: |f_u x f_v| = " << len << " at (" << f.x.base()[0] << ", " << f.x.base()[1] << ")";
        throw GeometryError(os.str());
    }
    return normalized(n) * static_cast<double>(co_orientation);
}

AdaptedNormal frontal_unit_normal_adapted(const JetVec2d& f, const Tolerances& tol) {
    AdaptedNormal out;
    try {
        out.h = divide_by_v(derivative_v(f), tol.axis);
    } catch (const JetError& e) {
        throw GeometryError(std::string("chart is not adapted: ") + e.what());
    }
    const JetVec2d n = cross(derivative_u(f), out.h);
    const double len = n.value().norm();
    if (len <= tol.reg) {
        std::ostringstream os;
        os << "degenerate frame: |f_u x h| = " << len << " (worse than a cuspidal edge)";
        throw GeometryError(os.str());
    }
    out.nu = normalized(n);
    return out;
}

AreaDensity area_density_and_discriminant(const JetVec2d& f, const JetVec2d& nu) {
    return {det3(derivative_u(f), derivative_v(f), nu), det3(derivative_u(nu), derivative_v(nu), nu)};
}

CurvatureSample regular_curvatures(const JetVec2d& f, const JetVec2d& nu, const Tolerances& tol) {
    CurvatureSample out;
    out.location = {f.x.base()[0], f.x.base()[1]};
    const auto [lambda, Lambda] = area_density_and_discriminant(f, nu);
    out.lambda = lambda.value();
    out.Lambda = Lambda.value();
    if (std::abs(out.lambda) <= tol.sing) return out;

    const Eigen::Vector3d fu = partial(f, 1, 0), fv = partial(f, 0, 1);
    const Eigen::Vector3d fuu = partial(f, 2, 0), fuv = partial(f, 1, 1), fvv = partial(f, 0, 2);
    const Eigen::Vector3d n = nu.value();
    const double E = fu.dot(fu), F = fu.dot(fv), G = fv.dot(fv);
    const double L = fuu.dot(n), M = fuv.dot(n), N = fvv.dot(n);
    const double EG = E * G - F * F;
    const double K = out.Lambda / out.lambda;
    const double H = (E * N - 2.0 * F * M + G * L) / (2.0 * EG);
    const double disc = std::sqrt(std::max(H * H - K, 0.0));
    // the root of larger magnitude directly, the other from the product (no cancellation near the edge)
    const double big = H + std::copysign(disc, H);
    const double small = big != 0.0 ? K / big : H - disc;
    out.K = K;
    out.H = H;
    out.k1 = std::max(big, small);
    out.k2 = std::min(big, small);
    return out;
}

CurvatureSample curvatures_at(const SurfaceDefinition& s, double u, double v, const Tolerances& tol) {
    const JetVec2d f = surface_jet(s, u, v, 3);
    const Eigen::Vector3d n = cross(derivative_u(f), derivative_v(f)).value();
    if (n.norm() <= tol.sing) {
        CurvatureSample out;
        out.location = {u, v};
        out.lambda = s.co_orientation * n.norm();
        return out;
    }
    Tolerances relaxed = tol;
    relaxed.reg = 0.0;
    return regular_curvatures(f, unit_normal(f, s.co_orientation, relaxed), tol);
}

ModifiedFundamentalForms modified_forms(const JetVec2d& f, const JetVec2d& nu, const JetVec2d& h) {
    const JetVec2d fu = derivative_u(f);
    const JetVec2d nu_u = derivative_u(nu), nu_v = derivative_v(nu);
    ModifiedFundamentalForms m;
    m.E = dot(fu, fu);
    m.F = dot(fu, h);
    m.G = dot(h, h);
    m.L = -dot(fu, nu_u);
    m.M = -dot(h, nu_u);
    m.N = -dot(h, nu_v);
    return m;
}

WeingartenDerivatives weingarten_derivatives(const ModifiedFundamentalForms& m, const JetVec2d& f, const JetVec2d& h,
                                             const Tolerances& tol) {
    const double E = m.E.value(), F = m.F.value(), G = m.G.value();
    const double L = m.L.value(), M = m.M.value(), N = m.N.value();
    const double v = f.x.base()[1];
    const double D = E * G - F * F;
    if (D <= tol.reg) throw GeometryError("degenerate frame {f_u, h}");
    const Eigen::Vector3d fu = partial(f, 1, 0), hv = h.value();
    WeingartenDerivatives w;
    w.nu_u = ((F * M - G * L) * fu + (F * L - E * M) * hv) / D;
    w.nu_v = ((F * N - v * G * M) * fu + (v * F * M - E * N) * hv) / D;
    return w;
}

BoundedCurvatureData bounded_curvature_data(const TransverseSampler& sample, double kappa_nu, double h0) {
    BoundedCurvatureData out;
    struct Branches {
        double bounded, unbounded_scaled;
    };
    auto split = [&](double s) {
        const CurvatureSample c = sample(s);
        if (!c.k1 || !c.k2) throw GeometryError("transverse sample hit the singular set");
        const double d1 = std::abs(*c.k1 - kappa_nu), d2 = std::abs(*c.k2 - kappa_nu);
        if (std::abs(d1 - d2) <= 1e-3 * (1.0 + std::abs(*c.k1 - *c.k2)) && std::abs(s) >= h0 * 0.1)
            out.ambiguous_branch = true;
        const double bounded = d1 <= d2 ? *c.k1 : *c.k2;
        const double unbounded = d1 <= d2 ? *c.k2 : *c.k1;
        return Branches{bounded, c.lambda * unbounded};
    };
    // branch check at the fixed probe distance
    for (double s : {1e-3, -1e-3}) (void)split(s);

    const auto khat = richardson(
        [&](double h) { return 0.5 * (split(h).unbounded_scaled + split(-h).unbounded_scaled); }, h0, 4);
    const auto kap = richardson([&](double h) { return 0.5 * (split(h).bounded + split(-h).bounded); }, h0, 4);
    const auto dv = richardson([&](double h) { return (split(h).bounded - split(-h).bounded) / (2.0 * h); }, h0, 4);
    out.kappa_hat = khat.value;
    out.kappa = kap.value;
    out.d_v_kappa = dv.value;
    out.extrapolation_error = std::max({khat.error, kap.error, dv.error});
    return out;
}

}  // namespace cusp
