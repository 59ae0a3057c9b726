#include "cuspidal/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include <Eigen/Geometry>
#include <boost/math/tools/roots.hpp>

namespace cusp {

std::string to_string(GaussClass c) {
    switch (c) {
        case GaussClass::Regular: return "regular";
        case GaussClass::Fold: return "fold";
        case GaussClass::Cusp: return "cusp";
        case GaussClass::NondegenerateOther: return "nondegenerate_other";
        case GaussClass::Degenerate: return "degenerate";
    }
    return "unknown";
}

std::string to_string(CheckStatus c) {
    switch (c) {
        case CheckStatus::Passed: return "passed";
        case CheckStatus::Failed: return "failed";
        case CheckStatus::HypothesesNotMet: return "hypotheses_not_met";
    }
    return "unknown";
}

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

NondegeneracyWitness is_nondegenerate_gauss_singularity(const SurfaceDefinition& s, const CurvePoint& p,
                                                        const EdgeInvariants& inv, const AnalysisOptions& opt) {
    NondegeneracyWitness w;
    const double S = inv.curvature_scale;
    w.kappa_nu_prime = inv.kappa_nu_prime;
    w.fold_discriminant = 4.0 * inv.kappa_t * inv.kappa_t + inv.kappa_s * inv.kappa_c * inv.kappa_c;
    w.lemma = std::abs(w.kappa_nu_prime) > opt.tol.zero * S * S || std::abs(w.fold_discriminant) > opt.tol.zero * S * S * S;
    const BoundedCurvatureData b = principal_curvature_data(s, p, inv, opt);
    w.du_kappa = inv.kappa_nu_prime_fd;
    w.dv_kappa = b.d_v_kappa;
    w.direct = std::hypot(w.du_kappa, w.dv_kappa) > opt.tol.zero * S * S;
    w.agree = w.lemma == w.direct;
    return w;
}

double cusp_mu_via_invariants(const EdgeInvariants& inv) {
    return 2.0 * inv.kappa_s / std::sqrt(std::abs(inv.kappa_t_prime));
}

Classification classify(const SurfaceDefinition& s, const CurvePoint& p, const EdgeInvariants& inv, bool bounded_K,
                        const AnalysisOptions& opt) {
    Classification c;
    c.t = p.t;
    c.uv = p.uv;
    c.bounded_K = bounded_K;
    const double S = inv.curvature_scale;
    if (std::abs(inv.kappa_nu) > opt.tol.bound * S) {
        c.cls = GaussClass::Regular;
        c.note = "kappa_nu != 0, so Lambda != 0 and nu is regular here";
        return c;
    }
    c.witness = is_nondegenerate_gauss_singularity(s, p, inv, opt);
    if (!c.witness.lemma) {
        c.cls = GaussClass::Degenerate;
        c.note = "kappa_nu' = 0 and 4 kappa_t^2 + kappa_s kappa_c^2 = 0";
        return c;
    }
    if (!bounded_K) {
        c.cls = GaussClass::NondegenerateOther;
        c.note = "K is unbounded near the edge; fold and cusp criteria need bounded K";
        return c;
    }
    const bool kt_zero = std::abs(inv.kappa_t) <= opt.tol.zero * S;
    const bool disc_zero = std::abs(c.witness.fold_discriminant) <= opt.tol.zero * S * S * S;
    if (!kt_zero && !disc_zero) {
        c.cls = GaussClass::Fold;
        return c;
    }
    if (kt_zero && std::abs(inv.kappa_t_prime) > opt.tol.zero * S * S && std::abs(inv.kappa_s) > opt.tol.zero * S) {
        c.cls = GaussClass::Cusp;
        c.mu_formula = cusp_mu_via_invariants(inv);
        const CuspData cd = cuspidal_curvature(gauss_locus_jet(s, p, opt), S, opt.tol);
        c.mu_jet = cd.mu;
        c.sign = cd.ordinary_cusp ? cd.sign : (c.mu_formula > 0.0 ? "zig" : "zag");
        if (!cd.ordinary_cusp) c.note = "singular locus of nu failed the ordinary-cusp test numerically";
        return c;
    }
    c.cls = GaussClass::NondegenerateOther;
    return c;
}

std::vector<double> kappa_t_zeros(const SurfaceDefinition& s, const SingularCurve& curve,
                                  const std::vector<EdgeInvariants>& samples, const AnalysisOptions& opt) {
    std::vector<const EdgeInvariants*> signif;
    for (const auto& e : samples)
        if (std::abs(e.kappa_t) > 10.0 * opt.tol.bound * e.curvature_scale) signif.push_back(&e);
    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < signif.size(); ++i) {
        const EdgeInvariants &a = *signif[i], &b = *signif[i + 1];
        if (sign_of(a.kappa_t) == sign_of(b.kappa_t)) continue;
        auto f = [&](double t) { return invariants_at(s, point_at(s, curve, t, opt), opt, false).kappa_t; };
        std::uintmax_t iters = 100;
        const auto r = boost::math::tools::toms748_solve(f, a.t, b.t, a.kappa_t, b.kappa_t,
                                                         boost::math::tools::eps_tolerance<double>(50), iters);
        roots.push_back(0.5 * (r.first + r.second));
    }
    return roots;
}

std::vector<double> probe_K(const SurfaceDefinition& s, const CurvePoint& p, int count, double s_min, double s_max,
                            const AnalysisOptions& opt) {
    const AdaptedChart A = build_adapted_chart(s, p, opt);
    std::vector<double> out;
    for (int i = 0; i < count; ++i) {
        const double frac = count > 1 ? static_cast<double>(i) / (count - 1) : 0.0;
        const double mag = s_min * std::pow(s_max / s_min, frac);
        const double off = (i % 2 == 0) ? mag : -mag;
        const double t = 0.5 * s_max * (2.0 * static_cast<double>((i * 37) % count) / std::max(count - 1, 1) - 1.0);
        const CurvatureSample c = curvatures_at(s, A.u.evaluate(t, off), A.v.evaluate(t, off), opt.tol);
        out.push_back(c.K ? *c.K : std::numeric_limits<double>::quiet_NaN());
    }
    return out;
}

TheoremCheck check_sign_of_K(const SurfaceDefinition& s, const CurvePoint& p, const EdgeInvariants& inv,
                             const Classification& c, const AnalysisOptions& opt) {
    TheoremCheck chk;
    chk.name = "sign_of_K";
    if (c.bounded_K && c.cls == GaussClass::Fold) {
        const LimitCurvature L = limit_gaussian_curvature(s, p, inv, opt);
        const bool ok = !(L.formula > 0.0 && inv.kappa_s > 0.0);
        chk.status = ok ? CheckStatus::Passed : CheckStatus::Failed;
        chk.values = {{"K_limit_formula", L.formula}, {"kappa_s", inv.kappa_s}};
        chk.detail = "fold: K > 0 requires kappa_s <= 0";
        return chk;
    }
    if (!c.bounded_K ||!(c.cls == GaussClass::Cusp || c.cls == GaussClass::NondegenerateOther)) {
        chk.detail = "needs bounded K and a non-degenerate singular point of nu other than a fold";
        return chk;
    }
    const LimitCurvature L = limit_gaussian_curvature(s, p, inv, opt);
    const auto probes = probe_K(s, p, 100, 1e-3, 1e-1, opt);
    const double lo = *std::min_element(probes.begin(), probes.end());
    const double hi = *std::max_element(probes.begin(), probes.end());
    const int sK = sign_of(L.formula);
    const bool probes_ok = std::all_of(probes.begin(), probes.end(), [&](double k) { return sign_of(k) == sK; });
    const bool ok = sK != 0 && sK == -sign_of(inv.kappa_s) && probes_ok && L.agree;
    chk.status = ok ? CheckStatus::Passed : CheckStatus::Failed;
    chk.values = {{"K_limit_formula", L.formula}, {"K_limit_extrapolated", L.extrapolated},
                  {"kappa_s", inv.kappa_s},      {"probe_K_min", lo},
                  {"probe_K_max", hi}};
    std::ostringstream os;
    os << "sign K = " << sK << ", sign kappa_s = " << sign_of(inv.kappa_s) << ", probes "
       << (probes_ok ? "constant sign" : "change sign") << ", limit routes " << (L.agree ? "agree" : "disagree");
    chk.detail = os.str();
    return chk;
}

TheoremCheck check_cusp_sign(const EdgeInvariants& inv, const Classification& c, const AnalysisOptions& opt) {
    TheoremCheck chk;
    chk.name = "cusp_sign";
    if (c.cls != GaussClass::Cusp) {
        chk.detail = "needs a cusp of the Gauss map with bounded non-zero K";
        return chk;
    }
    const bool routes = std::abs(c.mu_jet - c.mu_formula) <= opt.tol.mu * std::abs(c.mu_formula);
    const bool ok = sign_of(c.mu_jet) == sign_of(inv.kappa_s) && routes;
    chk.status = ok ? CheckStatus::Passed : CheckStatus::Failed;
    chk.values = {{"mu_jet", c.mu_jet}, {"mu_formula", c.mu_formula}, {"kappa_s", inv.kappa_s}};
    chk.detail = c.sign + (routes ? ", mu routes agree" : ", mu routes disagree");
    return chk;
}

TheoremCheck check_cusp_sign_from_K(const SurfaceDefinition& s, const CurvePoint& p, const EdgeInvariants& inv,
                                    const Classification& c, const AnalysisOptions& opt) {
    TheoremCheck chk;
    chk.name = "cusp_sign_from_K";
    if (c.cls != GaussClass::Cusp) {
        chk.detail = "needs a cusp of the Gauss map with bounded non-zero K";
        return chk;
    }
    const LimitCurvature L = limit_gaussian_curvature(s, p, inv, opt);
    const bool ok = (L.formula > 0.0 && c.sign == "zag") || (L.formula < 0.0 && c.sign == "zig");
    chk.status = ok ? CheckStatus::Passed : CheckStatus::Failed;
    chk.values = {{"K_limit", L.formula}, {"mu_jet", c.mu_jet}};
    chk.detail = std::string(L.formula > 0.0 ? "K > 0, " : "K < 0, ") + c.sign;
    return chk;
}

TheoremCheck cone_point_check(const std::vector<EdgeInvariants>& samples, bool bounded_K,
                              const std::vector<LimitCurvature>& limits, const AnalysisOptions& opt) {
    TheoremCheck chk;
    chk.name = "cone_point";
    const bool nonzero = !limits.empty() && std::all_of(limits.begin(), limits.end(), [&](const LimitCurvature& L) {
        return std::abs(L.formula) > opt.tol.zero;
    });
    if (samples.empty() || !bounded_K || !nonzero || !is_curvature_line(samples, opt.tol)) {
        chk.detail = "needs bounded non-zero K and kappa_t = 0 along the curve";
        return chk;
    }
    double diam = 0.0;
    for (const auto& a : samples)
        for (const auto& b : samples) diam = std::max(diam, (a.nu - b.nu).norm());
    const Eigen::Vector3d v = samples.front().nu;
    chk.status = diam < opt.tol.point ? CheckStatus::Passed : CheckStatus::Failed;
    chk.values = {{"diameter", diam}, {"nu_x", v.x()}, {"nu_y", v.y()}, {"nu_z", v.z()}};
    std::ostringstream os;
    os << "Gauss-map image of the curve has diameter " << diam;
    chk.detail = os.str();
    return chk;
}

double FrameIdentityResiduals::max() const {
    return std::max({kappa_s, kappa_nu, kappa_c, kappa_t, nu_u, nu_v, h_u, frame});
}

FrameIdentityResiduals frame_identity_checks(const SurfaceDefinition& s, const CurvePoint& p, const EdgeInvariants& inv,
                                             const AnalysisOptions& opt) {
    const AdaptedChart special = build_special_adapted_chart(s, p, opt);
    const ChartJets J = chart_jets(s, special, opt.tol);
    const ModifiedFundamentalForms m = modified_forms(J.f, J.nu, J.h);
    const Eigen::Vector3d fu = partial(J.f, 1, 0), h = J.h.value(), nu = J.nu.value();
    FrameIdentityResiduals r;
    r.kappa_s = std::abs(inv.kappa_s + 0.5 * m.E.partial(0, 2));
    r.kappa_nu = std::abs(inv.kappa_nu - m.L.value());
    r.kappa_c = std::abs(inv.kappa_c - 2.0 * m.N.value());
    r.kappa_t = std::abs(inv.kappa_t - m.M.value());
    r.nu_u = (partial(J.nu, 1, 0) - (-inv.kappa_nu * fu - inv.kappa_t * h)).norm();
    r.nu_v = (partial(J.nu, 0, 1) - (-0.5 * inv.kappa_c * h)).norm();
    r.h_u = (partial(J.h, 1, 0) - (-inv.kappa_s * fu + inv.kappa_t * nu)).norm();
    r.frame = std::max({std::abs(fu.squaredNorm() - 1.0), std::abs(h.squaredNorm() - 1.0), std::abs(fu.dot(h)),
                        std::abs(fu.dot(nu)), std::abs(h.dot(nu)), std::abs(fu.cross(h).dot(nu) - 1.0)});
    return r;
}

}  // namespace cusp
