#include "cuspidal/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include <Eigen/Geometry>

#include "cuspidal/numerics.hpp"

namespace cusp {

namespace {

double max_coefficient(const Jet2& a) {
    double m = 0.0;
    for (int i = 0; i <= a.order(); ++i)
        for (int j = 0; i + j <= a.order(); ++j) m = std::max(m, std::abs(a.coeff(i, j)));
    return m;
}

/// Invariant values and their jet derivatives, without the finite-difference route.
EdgeInvariants invariants_core(const SurfaceDefinition& s, const CurvePoint& p, const AnalysisOptions& opt) {
    const AdaptedChart A = build_adapted_chart(s, p, opt);
    const ChartJets J = chart_jets(s, A, opt.tol);
    const JetVec2d Ft = derivative_u(J.f), Fs = derivative_v(J.f);
    const JetVec2d Fss = derivative_v(Fs);
    const JetVec1d ft = restrict_u_axis(Ft);
    const JetVec1d ftt = restrict_u_axis(derivative_u(Ft));
    const JetVec1d fss = restrict_u_axis(Fss);
    const JetVec1d fsss = restrict_u_axis(derivative_v(Fss));
    const JetVec1d ftss = restrict_u_axis(derivative_u(Fss));
    const JetVec1d nu = restrict_u_axis(J.nu);

    const Jet1 sp = norm(ft);
    const Jet1 sp2 = sp * sp;
    const JetVec1d cr = cross(ft, fss);
    const Jet1 cr2 = dot(cr, cr);
    const Jet1 ks = det3(ft, ftt, nu) / (sp2 * sp);
    const Jet1 kn = dot(ftt, nu) / sp2;
    const Jet1 kc = pow_const(sp, 1.5) * det3(ft, fss, fsss) / pow_const(cr2, 1.25);
    const Jet1 kt = det3(ft, fss, ftss) / cr2 - dot(ft, fss) * det3(ft, fss, ftt) / (sp2 * cr2);

    EdgeInvariants inv;
    inv.t = p.t;
    inv.uv = p.uv;
    inv.nu = nu.value();
    inv.kappa_s = ks.value();
    inv.kappa_nu = kn.value();
    inv.kappa_c = kc.value();
    inv.kappa_t = kt.value();
    inv.speed = sp.value();
    inv.kappa_s_prime = ks.derivative().value() / inv.speed;
    inv.kappa_nu_prime = kn.derivative().value() / inv.speed;
    inv.kappa_t_prime = kt.derivative().value() / inv.speed;

    const Eigen::Vector2d T = p.tangent.normalized();
    const Eigen::Vector2d eta(A.u.coeff(0, 1), A.v.coeff(0, 1));
    const double jac = T.x() * eta.y() - T.y() * eta.x();
    inv.eta_lambda = det3(Ft, J.h, J.nu).value() / jac;
    inv.curvature_scale = ftt.value().norm() / inv.speed / inv.speed + std::abs(inv.kappa_c);

    const JetVec2d nut = derivative_u(J.nu), nus = derivative_v(J.nu);
    const int n = std::min(nut.x.order(), nus.x.order());
    auto cut = [n](const JetVec2d& a) { return a.map([n](const Jet2& c) { return c.truncated(n); }); };
    inv.Lambda_max = max_coefficient(det3(cut(nut), cut(nus), cut(J.nu)));
    return inv;
}

CurvePoint curve_point_from_jets(const SurfaceDefinition& s, const std::pair<Jet1, Jet1>& g, const CurvePoint& p,
                                 double tau, const AnalysisOptions& opt) {
    const Jet1 du = g.first.derivative(), dv = g.second.derivative();
    Eigen::Vector2d q(g.first.evaluate(tau), g.second.evaluate(tau));
    Eigen::Vector2d T(du.evaluate(tau), dv.evaluate(tau));
    if (const auto c = correct_onto_curve(s, q, singular_normal(s, q, opt.tol), opt.tol)) q = *c;
    return {p.t + tau, q, T.normalized()};
}

}  // namespace

EdgeInvariants invariants_at(const SurfaceDefinition& s, const CurvePoint& p, const AnalysisOptions& opt,
                             bool finite_differences) {
    EdgeInvariants inv = invariants_core(s, p, opt);
    if (!finite_differences) return inv;
    const auto g = curve_jets(s, p, opt.order + 2, opt.tol);
    const double h0 = 0.01 * s.domain.diameter();
    auto diff = [&](double EdgeInvariants::*field) {
        return richardson(
            [&](double h) {
                const EdgeInvariants a = invariants_core(s, curve_point_from_jets(s, g, p, h, opt), opt);
                const EdgeInvariants b = invariants_core(s, curve_point_from_jets(s, g, p, -h, opt), opt);
                return (a.*field - b.*field) / (2.0 * h);
            },
            h0, 3);
    };
    inv.kappa_t_prime_fd = diff(&EdgeInvariants::kappa_t).value / inv.speed;
    inv.kappa_nu_prime_fd = diff(&EdgeInvariants::kappa_nu).value / inv.speed;
    return inv;
}

namespace {

std::vector<double> sample_parameters(const SingularCurve& curve, int count) {
    std::vector<double> ts;
    const double a = curve.t_min(), b = curve.t_max();
    if (count <= 1) return {curve.samples[curve.seed_index].t};
    for (int i = 0; i < count; ++i) ts.push_back(a + (b - a) * i / (count - 1));
    return ts;
}

}  // namespace

std::vector<EdgeInvariants> sample_invariants(const SurfaceDefinition& s, const SingularCurve& curve, int count,
                                              const AnalysisOptions& opt) {
    std::vector<EdgeInvariants> out;
    for (double t : sample_parameters(curve, count)) out.push_back(invariants_at(s, point_at(s, curve, t, opt), opt));
    return out;
}

std::vector<EdgeInvariants> sample_invariants_parallel(const SurfaceDefinition& s, const SingularCurve& curve,
                                                       int count, const AnalysisOptions& opt) {
    const auto ts = sample_parameters(curve, count);
    std::vector<EdgeInvariants> out(ts.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < ts.size(); ++i) {
        try {
            out[i] = invariants_at(s, point_at(s, curve, ts[i], opt), opt);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

bool is_bounded_K(const std::vector<EdgeInvariants>& samples, const Tolerances& tol) {
    return std::all_of(samples.begin(), samples.end(), [&](const EdgeInvariants& e) {
        return std::abs(e.kappa_nu) <= tol.bound * e.curvature_scale;
    });
}

bool is_curvature_line(const std::vector<EdgeInvariants>& samples, const Tolerances& tol) {
    return std::all_of(samples.begin(), samples.end(), [&](const EdgeInvariants& e) {
        return std::abs(e.kappa_t) <= tol.bound * e.curvature_scale;
    });
}

std::optional<double> transverse_K(const SurfaceDefinition& s, const AdaptedChart& chart, double offset,
                                   const Tolerances& tol) {
    const CurvatureSample c = curvatures_at(s, chart.u.evaluate(0.0, offset), chart.v.evaluate(0.0, offset), tol);
    return c.K;
}

LimitCurvature limit_gaussian_curvature(const SurfaceDefinition& s, const CurvePoint& p, const EdgeInvariants& inv,
                                        const AnalysisOptions& opt) {
    LimitCurvature out;
    out.formula = -inv.kappa_t * inv.kappa_t - 0.25 * inv.kappa_s * inv.kappa_c * inv.kappa_c;
    const AdaptedChart A = build_adapted_chart(s, p, opt);
    const auto K = [&](double h) {
        const auto a = transverse_K(s, A, h, opt.tol), b = transverse_K(s, A, -h, opt.tol);
        if (!a || !b) return std::numeric_limits<double>::quiet_NaN();
        return 0.5 * (*a + *b);
    };
    const auto r = richardson(K, std::min(0.05, 0.02 * s.domain.diameter()), 5);
    out.extrapolated = r.value;
    out.extrapolation_error = r.error;
    out.agree = std::abs(out.formula - out.extrapolated) <= opt.tol.K * std::max(1.0, std::abs(out.formula));
    return out;
}

TransverseSampler special_chart_sampler(const SurfaceDefinition& s, const AdaptedChart& special, const Tolerances& tol) {
    const ChartJets J = chart_jets(s, special, tol);
    return [&s, special, J, tol](double offset) {
        const Jet2 U = special.u.shifted(0.0, offset), V = special.v.shifted(0.0, offset);
        const JetVec2d f = pullback(s, U, V);
        const JetVec2d n = cross(derivative_u(f), derivative_v(f));
        CurvatureSample out;
        out.location = {U.value(), V.value()};
        if (!(n.value().norm() > 0.0)) return out;
        const Eigen::Vector3d ref(J.nu.x.evaluate(0.0, offset), J.nu.y.evaluate(0.0, offset),
                                  J.nu.z.evaluate(0.0, offset));
        const JetVec2d nu = normalized(n) * (n.value().dot(ref) >= 0.0 ? 1.0 : -1.0);
        return regular_curvatures(f, nu, tol);
    };
}

BoundedCurvatureData principal_curvature_data(const SurfaceDefinition& s, const CurvePoint& p,
                                              const EdgeInvariants& inv, const AnalysisOptions& opt) {
    const AdaptedChart special = build_special_adapted_chart(s, p, opt);
    return bounded_curvature_data(special_chart_sampler(s, special, opt.tol), inv.kappa_nu,
                                  std::min(0.05, 0.02 * s.domain.diameter()));
}

double d_v_kappa_formula(const EdgeInvariants& inv) {
    return -(4.0 * inv.kappa_t * inv.kappa_t + inv.kappa_s * inv.kappa_c * inv.kappa_c) / (2.0 * inv.kappa_c);
}

}  // namespace cusp
