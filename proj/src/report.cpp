#include "cuspidal/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>

#include <Eigen/Geometry>

#include "cuspidal/kernels.hpp"

namespace cusp {

namespace {

using nlohmann::ordered_json;

ordered_json num(double x) {
    if (std::isfinite(x)) return x;
    return "unbounded";
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
    return buf;
}

TheoremCheck make_check(std::string name, bool ok, std::string detail,
                        std::vector<std::pair<std::string, double>> values = {}) {
    TheoremCheck c;
    c.name = std::move(name);
    c.status = ok ? CheckStatus::Passed : CheckStatus::Failed;
    c.detail = std::move(detail);
    c.values = std::move(values);
    return c;
}

TheoremCheck not_met(std::string name, std::string detail) {
    TheoremCheck c;
    c.name = std::move(name);
    c.detail = std::move(detail);
    return c;
}

std::vector<double> classification_parameters(const SurfaceDefinition& s, const CurveAnalysis& ca,
                                              const AnalysisOptions& opt) {
    std::vector<double> ts;
    if (!ca.curvature_line) ts = kappa_t_zeros(s, ca.curve, ca.samples, opt);
    ts.push_back(ca.curve.samples[ca.curve.seed_index].t);
    std::sort(ts.begin(), ts.end());
    const double eps = 1e-9 * s.domain.diameter();
    std::vector<double> out;
    for (double t : ts)
        if (out.empty() || t - out.back() > eps) out.push_back(t);
    return out;
}

void point_checks(const SurfaceDefinition& s, const CurveAnalysis& ca, const PointAnalysis& pa,
                  const AnalysisOptions& opt, std::vector<TheoremCheck>& out) {
    const Tolerances& tol = opt.tol;
    const EdgeInvariants& inv = pa.invariants;
    const Classification& c = pa.classification;

    if (pa.K_limit) {
        const LimitCurvature& L = *pa.K_limit;
        out.push_back(make_check("limit_K_routes", L.agree, "4K = -4 kappa_t^2 - kappa_s kappa_c^2 against lim Lambda/lambda",
                                 {{"formula", L.formula},
                                  {"extrapolated", L.extrapolated},
                                  {"extrapolation_error", L.extrapolation_error}}));
    } else {
        out.push_back(not_met("limit_K_routes", "K is unbounded near the curve"));
    }

    if (!ca.bounded_K || c.cls == GaussClass::Regular) {
        out.push_back(not_met("nondegeneracy_crosscheck", "needs bounded K and Lambda = 0 at the point"));
    } else {
        const NondegeneracyWitness& w = c.witness;
        out.push_back(make_check("nondegeneracy_crosscheck", w.agree,
                                 std::string("lemma ") + (w.lemma ? "true" : "false") + ", direct " +
                                     (w.direct ? "true" : "false"),
                                 {{"kappa_nu_p", w.kappa_nu_prime},
                                  {"fold_discriminant", w.fold_discriminant},
                                  {"du_kappa", w.du_kappa},
                                  {"dv_kappa", w.dv_kappa}}));
    }

    try {
        const FrameIdentityResiduals f = frame_identity_checks(s, pa.point, inv, opt);
        const double id = std::max({f.kappa_s, f.kappa_nu, f.kappa_c, f.kappa_t, f.nu_u, f.nu_v, f.h_u});
        const bool ok = id < tol.id && f.frame < tol.frame;
        std::string worst = "none";
        const std::vector<std::pair<std::string, double>> vals = {
            {"kappa_s", f.kappa_s}, {"kappa_nu", f.kappa_nu}, {"kappa_c", f.kappa_c}, {"kappa_t", f.kappa_t},
            {"nu_u", f.nu_u},       {"nu_v", f.nu_v},         {"h_u", f.h_u},         {"frame", f.frame}};
        if (!ok)
            worst = std::max_element(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
                        return a.second < b.second;
                    })->first;
        out.push_back(make_check("frame_identities", ok, ok ? "all residuals within tolerance" : "largest residual: " + worst,
                                 vals));
    } catch (const std::exception& e) {
        out.push_back(make_check("frame_identities", false, e.what()));
    }

    if (!ca.bounded_K) {
        out.push_back(not_met("kappa_hat", "K is unbounded near the curve"));
        out.push_back(not_met("d_v_kappa", "K is unbounded near the curve"));
    } else {
        try {
            const BoundedCurvatureData b = principal_curvature_data(s, pa.point, inv, opt);
            const double half = 0.5 * inv.kappa_c;
            out.push_back(make_check("kappa_hat", std::abs(b.kappa_hat - half) <= tol.limit * std::max(1.0, std::abs(half)),
                                     "lim lambda k_unbounded = kappa_c / 2",
                                     {{"kappa_hat", b.kappa_hat}, {"half_kappa_c", half},
                                      {"extrapolation_error", b.extrapolation_error}}));
            if (std::abs(inv.kappa_c) <= tol.zero * inv.curvature_scale) {
                out.push_back(not_met("d_v_kappa", "kappa_c = 0"));
            } else {
                const double formula = d_v_kappa_formula(inv);
                out.push_back(make_check("d_v_kappa",
                                         std::abs(b.d_v_kappa - formula) <= tol.limit * std::max(1.0, std::abs(formula)),
                                         "d_v kappa = -(4 kappa_t^2 + kappa_s kappa_c^2) / (2 kappa_c)",
                                         {{"extrapolated", b.d_v_kappa}, {"formula", formula}}));
            }
        } catch (const std::exception& e) {
            out.push_back(make_check("kappa_hat", false, e.what()));
            out.push_back(make_check("d_v_kappa", false, e.what()));
        }
    }

    out.push_back(check_sign_of_K(s, pa.point, inv, c, opt));
    out.push_back(check_cusp_sign(inv, c, opt));
    out.push_back(check_cusp_sign_from_K(s, pa.point, inv, c, opt));
}

void analyze_curve(const SurfaceDefinition& s, const RunOptions& ro, bool run_checks, std::size_t index,
                   CurveAnalysis& ca, std::vector<CheckEntry>& checks) {
    const AnalysisOptions& opt = ro.analysis;
    const CurvePoint& seed = ca.curve.samples[ca.curve.seed_index];
    auto add = [&](std::optional<double> t, TheoremCheck c) { checks.push_back({index, t, std::move(c)}); };

    if (run_checks)
        add(std::nullopt, make_check("cuspidal_edge", ca.edge.is_cuspidal_edge, "seed is a cuspidal edge of a front",
                                     {{"eta_lambda", ca.edge.eta_lambda},
                                      {"eta_lambda_normalized", ca.edge.eta_lambda_normalized},
                                      {"nu_eta_normalized", ca.edge.nu_eta_normalized}}));
    if (!ca.edge.is_cuspidal_edge) return;

    ca.samples = opt.parallel ? sample_invariants_parallel(s, ca.curve, ro.samples, opt)
                              : sample_invariants(s, ca.curve, ro.samples, opt);
    ca.bounded_K = is_bounded_K(ca.samples, opt.tol);
    ca.curvature_line = is_curvature_line(ca.samples, opt.tol);

    for (double t : classification_parameters(s, ca, opt)) {
        PointAnalysis pa;
        pa.point = std::abs(t - seed.t) == 0.0 ? seed : point_at(s, ca.curve, t, opt);
        pa.invariants = invariants_at(s, pa.point, opt);
        pa.classification = classify(s, pa.point, pa.invariants, ca.bounded_K, opt);
        if (ca.bounded_K) pa.K_limit = limit_gaussian_curvature(s, pa.point, pa.invariants, opt);
        ca.points.push_back(std::move(pa));
    }
    if (!run_checks) return;

    for (const PointAnalysis& pa : ca.points) {
        std::vector<TheoremCheck> out;
        point_checks(s, ca, pa, opt, out);
        for (auto& c : out) add(pa.point.t, std::move(c));
    }
    std::vector<LimitCurvature> limits;
    for (const PointAnalysis& pa : ca.points)
        if (pa.K_limit) limits.push_back(*pa.K_limit);
    add(std::nullopt, cone_point_check(ca.samples, ca.bounded_K, limits, opt));
}

ordered_json surface_json(const SurfaceDefinition& s, const RunOptions& opt) {
    auto expr = [](const Expr& e) { return e.source().empty() ? to_string(e) : e.source(); };
    return {{"name", s.name},
            {"x", expr(s.x)},
            {"y", expr(s.y)},
            {"z", expr(s.z)},
            {"u_range", {s.domain.u_min, s.domain.u_max}},
            {"v_range", {s.domain.v_min, s.domain.v_max}},
            {"co_orientation", s.co_orientation},
            {"analysis",
             {{"order", opt.analysis.order},
              {"grid", opt.analysis.grid},
              {"step", trace_step(s, opt.analysis)},
              {"samples", opt.samples},
              {"seed", opt.seed}}}};
}

ordered_json tolerances_json(const Tolerances& t) {
    return {{"reg", t.reg},     {"sing", t.sing},   {"crit", t.crit},   {"axis", t.axis},
            {"bound", t.bound}, {"cusp", t.cusp},   {"mu", t.mu},       {"K", t.K},
            {"frame", t.frame}, {"id", t.id},       {"point", t.point}, {"zero", t.zero},
            {"limit", t.limit}};
}

double K_limit_of(const EdgeInvariants& e) {
    return -e.kappa_t * e.kappa_t - 0.25 * e.kappa_s * e.kappa_c * e.kappa_c;
}

bool sample_bounded(const EdgeInvariants& e, const Tolerances& tol) {
    return std::abs(e.kappa_nu) <= tol.bound * e.curvature_scale;
}

}  // namespace

AnalysisResult analyze_surface(const SurfaceDefinition& s, const RunOptions& ro, bool run_checks) {
    const AnalysisOptions& opt = ro.analysis;
    AnalysisResult r;
    r.surface = s;
    const auto located = locate_singular_points(s, opt.grid, opt);
    if (located.empty()) {
        r.exit_code = kExitNothing;
        r.message = "no singular points found";
        return r;
    }
    for (SingularCurve& c : trace_all_curves(s, located, opt)) {
        CurveAnalysis ca;
        ca.curve = std::move(c);
        ca.edge = is_cuspidal_edge(s, ca.curve.samples[ca.curve.seed_index].uv, opt);
        r.curves.push_back(std::move(ca));
    }
    if (r.curves.empty()) {
        r.exit_code = kExitNothing;
        r.message = "no singular curve could be traced";
        return r;
    }
    const bool any_front = std::any_of(r.curves.begin(), r.curves.end(),
                                       [](const CurveAnalysis& c) { return c.edge.is_front && c.edge.corank_one; });
    if (!any_front) {
        const Eigen::Vector2d q = r.curves.front().curve.samples[r.curves.front().curve.seed_index].uv;
        std::ostringstream os;
        os << "not a front: d nu vanishes on the null direction at (" << fmt17(q.x()) << ", " << fmt17(q.y()) << ")";
        r.exit_code = kExitInputError;
        r.message = os.str();
        return r;
    }
    for (std::size_t i = 0; i < r.curves.size(); ++i) {
        try {
            analyze_curve(s, ro, run_checks, i, r.curves[i], r.checks);
        } catch (const std::exception& e) {
            r.curves[i].curve.diagnostic = e.what();
            if (run_checks) r.checks.push_back({i, std::nullopt, make_check("curve_analysis", false, e.what())});
        }
    }
    const auto failed = std::find_if(r.checks.begin(), r.checks.end(),
                                     [](const CheckEntry& c) { return c.check.status == CheckStatus::Failed; });
    if (failed != r.checks.end()) {
        r.exit_code = kExitCheckFailure;
        r.message = "check failed: " + failed->check.name + " on curve " + std::to_string(failed->curve) +
                    (failed->t ? " at t = " + fmt17(*failed->t) : std::string()) + " (" + failed->check.detail + ")";
    }
    return r;
}

std::string invariants_csv(const AnalysisResult& r) {
    std::string out = "t,u,v,kappa_s,kappa_nu,kappa_c,kappa_t,kappa_nu_p,kappa_t_p,K_limit\n";
    const Tolerances tol;
    for (const CurveAnalysis& ca : r.curves)
        for (const EdgeInvariants& e : ca.samples) {
            for (double x : {e.t, e.uv.x(), e.uv.y(), e.kappa_s, e.kappa_nu, e.kappa_c, e.kappa_t, e.kappa_nu_prime,
                             e.kappa_t_prime})
                out += fmt17(x) + ",";
            if (sample_bounded(e, tol)) out += fmt17(K_limit_of(e));
            out += "\n";
        }
    return out;
}

ordered_json report_json(const AnalysisResult& r, const RunOptions& opt) {
    const Tolerances& tol = opt.analysis.tol;
    ordered_json curves = ordered_json::array();
    ordered_json classes = ordered_json::array();
    ordered_json checks = ordered_json::array();
    for (std::size_t i = 0; i < r.curves.size(); ++i) {
        const CurveAnalysis& ca = r.curves[i];
        const CurvePoint& seed = ca.curve.samples[ca.curve.seed_index];
        ordered_json samples = ordered_json::array();
        for (const EdgeInvariants& e : ca.samples)
            samples.push_back({{"t", e.t},
                               {"u", e.uv.x()},
                               {"v", e.uv.y()},
                               {"kappa_s", num(e.kappa_s)},
                               {"kappa_nu", num(e.kappa_nu)},
                               {"kappa_c", num(e.kappa_c)},
                               {"kappa_t", num(e.kappa_t)},
                               {"kappa_nu_p", num(e.kappa_nu_prime)},
                               {"kappa_t_p", num(e.kappa_t_prime)},
                               {"K_limit", sample_bounded(e, tol) ? num(K_limit_of(e)) : ordered_json("unbounded")}});
        std::string status = "analyzed";
        if (!ca.edge.is_front || !ca.edge.corank_one)
            status = "rejected: not a front";
        else if (!ca.edge.is_cuspidal_edge)
            status = "skipped: not a cuspidal edge";
        curves.push_back({{"index", i},
                          {"status", status},
                          {"closed", ca.curve.closed},
                          {"period", ca.curve.period},
                          {"diagnostic", ca.curve.diagnostic},
                          {"t_min", ca.curve.t_min()},
                          {"t_max", ca.curve.t_max()},
                          {"traced_points", ca.curve.samples.size()},
                          {"seed", {{"t", seed.t}, {"u", seed.uv.x()}, {"v", seed.uv.y()}}},
                          {"cuspidal_edge",
                           {{"corank_one", ca.edge.corank_one},
                            {"is_front", ca.edge.is_front},
                            {"is_cuspidal_edge", ca.edge.is_cuspidal_edge},
                            {"eta_lambda", num(ca.edge.eta_lambda)},
                            {"eta_lambda_normalized", num(ca.edge.eta_lambda_normalized)},
                            {"nu_eta", num(ca.edge.nu_eta)},
                            {"nu_eta_normalized", num(ca.edge.nu_eta_normalized)}}},
                          {"bounded_K", ca.bounded_K},
                          {"curvature_line", ca.curvature_line},
                          {"samples", samples}});
        for (const PointAnalysis& pa : ca.points) {
            const Classification& c = pa.classification;
            const EdgeInvariants& e = pa.invariants;
            classes.push_back(
                {{"curve", i},
                 {"t", c.t},
                 {"u", c.uv.x()},
                 {"v", c.uv.y()},
                 {"class", to_string(c.cls)},
                 {"supported", c.bounded_K},
                 {"cusp_sign", c.sign},
                 {"mu_nu", num(c.mu_jet)},
                 {"mu_nu_formula", num(c.mu_formula)},
                 {"K_limit", pa.K_limit ? num(pa.K_limit->formula) : ordered_json("unbounded")},
                 {"witnesses",
                  {{"kappa_s", num(e.kappa_s)},
                   {"kappa_nu", num(e.kappa_nu)},
                   {"kappa_c", num(e.kappa_c)},
                   {"kappa_t", num(e.kappa_t)},
                   {"kappa_t_p", num(e.kappa_t_prime)},
                   {"kappa_nu_p", num(e.kappa_nu_prime)},
                   {"fold_discriminant", num(c.witness.fold_discriminant)},
                   {"lemma", c.witness.lemma},
                   {"du_kappa", num(c.witness.du_kappa)},
                   {"dv_kappa", num(c.witness.dv_kappa)},
                   {"direct", c.witness.direct}}},
                 {"note", c.bounded_K ? c.note : "unsupported: K is unbounded along the curve"}});
        }
    }
    for (const CheckEntry& ce : r.checks) {
        ordered_json values = ordered_json::object();
        for (const auto& [k, v] : ce.check.values) values[k] = num(v);
        ordered_json entry = {{"curve", ce.curve}};
        entry["t"] = ce.t ? ordered_json(*ce.t) : ordered_json(nullptr);
        entry["name"] = ce.check.name;
        entry["status"] = to_string(ce.check.status);
        entry["hypotheses_met"] = ce.check.status != CheckStatus::HypothesesNotMet;
        entry["conclusion_holds"] = ce.check.status == CheckStatus::Passed;
        entry["detail"] = ce.check.detail;
        entry["values"] = values;
        checks.push_back(entry);
    }
    ordered_json surface = surface_json(r.surface, opt);
    surface["exit_code"] = r.exit_code;
    surface["message"] = r.message;
    return {{"surface", surface},  {"curves", curves},   {"classifications", classes},
            {"checks", checks},    {"tolerances", tolerances_json(tol)}, {"version", kVersion}};
}

namespace {

CommandOutput report_output(const AnalysisResult& r, const RunOptions& opt, const std::string& suffix) {
    CommandOutput out;
    out.exit_code = r.exit_code;
    out.message = r.message;
    out.files[r.surface.name + suffix + ".json"] = report_json(r, opt).dump(2) + "\n";
    return out;
}

}  // namespace

CommandOutput run_analyze(const SurfaceDefinition& s, const RunOptions& opt) {
    const AnalysisResult r = analyze_surface(s, opt, false);
    CommandOutput out = report_output(r, opt, "_analysis");
    out.files[s.name + "_invariants.csv"] = invariants_csv(r);
    return out;
}

CommandOutput run_classify(const SurfaceDefinition& s, const RunOptions& opt) {
    return report_output(analyze_surface(s, opt, false), opt, "_classification");
}

CommandOutput run_verify(const SurfaceDefinition& s, const RunOptions& opt) {
    return report_output(analyze_surface(s, opt, true), opt, "_verification");
}

namespace {

/// Unit normals of the grid made continuous across the singular set (sign
/// aligned with the nearest left or lower non-zero normal); gaps filled from neighbors.
std::vector<Eigen::Vector3d> smooth_normals(const std::vector<GridCurvature>& g, int m) {
    std::vector<Eigen::Vector3d> n(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) n[k] = g[k].normal;
    for (int pass = 0; pass < 2; ++pass)
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < m; ++i) {
                Eigen::Vector3d& x = n[static_cast<std::size_t>(j * m + i)];
                if (x.isZero()) {
                    if (pass == 0) continue;
                    Eigen::Vector3d sum = Eigen::Vector3d::Zero();
                    for (auto [di, dj] : {std::pair{-1, 0}, {1, 0}, {0, -1}, {0, 1}}) {
                        const int a = i + di, b = j + dj;
                        if (a >= 0 && a < m && b >= 0 && b < m) sum += n[static_cast<std::size_t>(b * m + a)];
                    }
                    if (sum.norm() > 0.0) x = sum.normalized();
                    continue;
                }
                if (pass == 1) continue;
                const Eigen::Vector3d* ref = nullptr;
                for (int a = i - 1; a >= 0 && !ref; --a)
                    if (!n[static_cast<std::size_t>(j * m + a)].isZero()) ref = &n[static_cast<std::size_t>(j * m + a)];
                for (int b = j - 1; b >= 0 && !ref; --b)
                    if (!n[static_cast<std::size_t>(b * m + i)].isZero()) ref = &n[static_cast<std::size_t>(b * m + i)];
                if (ref && ref->dot(x) < 0.0) x = -x;
            }
    return n;
}

void obj_vertex(std::string& out, const Eigen::Vector3d& p) {
    out += "v " + fmt17(p.x()) + " " + fmt17(p.y()) + " " + fmt17(p.z()) + "\n";
}

void obj_faces(std::string& out, int m) {
    for (int j = 0; j + 1 < m; ++j)
        for (int i = 0; i + 1 < m; ++i) {
            const int a = j * m + i + 1, b = a + 1, c = a + m, d = c + 1;
            out += "f " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(d) + "\n";
            out += "f " + std::to_string(a) + " " + std::to_string(d) + " " + std::to_string(c) + "\n";
        }
}

void obj_polyline(std::string& out, std::size_t first, std::size_t count) {
    if (count < 2) return;
    out += "l";
    for (std::size_t k = 0; k < count; ++k) out += " " + std::to_string(first + k);
    out += "\n";
}

}  // namespace

CommandOutput run_mesh(const SurfaceDefinition& s, const RunOptions& opt) {
    const AnalysisOptions& a = opt.analysis;
    const int m = std::max(a.grid, 1) + 1;
    const auto grid = a.parallel ? sample_grid_parallel(s, a.grid, a.tol) : sample_grid_serial(s, a.grid, a.tol);
    const auto normals = smooth_normals(grid, m);

    AnalysisResult r;
    try {
        r = analyze_surface(s, opt, false);
    } catch (const std::exception& e) {
        r.message = e.what();
    }
    double flip = 1.0;
    for (const CurveAnalysis& ca : r.curves) {
        if (ca.samples.empty()) continue;
        const EdgeInvariants& e = ca.samples[ca.samples.size() / 2];
        std::size_t best = 0;
        for (std::size_t k = 1; k < grid.size(); ++k)
            if ((grid[k].location - e.uv).norm() < (grid[best].location - e.uv).norm()) best = k;
        if (normals[best].dot(e.nu) < 0.0) flip = -1.0;
        break;
    }

    std::string surf, gauss;
    for (const auto& g : grid) obj_vertex(surf, g.point);
    for (const auto& n : normals) obj_vertex(gauss, flip * n);
    obj_faces(surf, m);
    obj_faces(gauss, m);
    std::size_t next = grid.size() + 1;
    for (const CurveAnalysis& ca : r.curves) {
        for (const EdgeInvariants& e : ca.samples) {
            obj_vertex(surf, surface_point(s, e.uv.x(), e.uv.y()));
            obj_vertex(gauss, e.nu);
        }
        obj_polyline(surf, next, ca.samples.size());
        obj_polyline(gauss, next, ca.samples.size());
        next += ca.samples.size();
    }
    CommandOutput out;
    out.message = r.message;
    out.files[s.name + "_surface.obj"] = surf;
    out.files[s.name + "_gauss.obj"] = gauss;
    return out;
}

}  // namespace cusp
