#include "cuspidal/spherical.hpp"

#include <cmath>

#include <Eigen/Geometry>

namespace cusp {

JetVec1d covariant_derivative(const JetVec1d& c, const JetVec1d& X) {
    const JetVec1d dX = derivative(X);
    const int n = dX.x.order();
    const JetVec1d cc = c.map([n](const Jet1& a) { return a.truncated(n); });
    return dX - cc * dot(dX, cc);
}

CuspData cuspidal_curvature(const JetVec1d& c, double scale, const Tolerances& tol) {
    CuspData out;
    const JetVec1d dc = derivative(c);
    const JetVec1d D1 = covariant_derivative(c, dc);
    const JetVec1d D2 = covariant_derivative(c, D1);
    const Eigen::Vector3d c0 = c.value(), d1 = D1.value(), d2 = D2.value();
    out.speed = dc.value().norm();
    out.det = c0.dot(d1.cross(d2));
    const double n1 = d1.norm(), n2 = d2.norm();
    out.det_normalized = n1 > 0.0 && n2 > 0.0 ? out.det / (n1 * n2) : 0.0;
    out.ordinary_cusp = out.speed <= tol.cusp * std::max(scale, n1) && std::abs(out.det_normalized) > tol.cusp;
    if (out.ordinary_cusp) {
        out.mu = out.det / std::pow(n1, 2.5);
        out.sign = out.mu > 0.0 ? "zig" : "zag";
    }
    return out;
}

JetVec1d gauss_locus_jet(const SurfaceDefinition& s, const CurvePoint& p, const AnalysisOptions& opt) {
    const AdaptedChart special = build_special_adapted_chart(s, p, opt);
    return restrict_u_axis(chart_jets(s, special, opt.tol).nu);
}

}  // namespace cusp
