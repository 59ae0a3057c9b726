#include "cuspidal/singular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Geometry>
#include <Eigen/SVD>

#include "cuspidal/kernels.hpp"

namespace cusp {

namespace {

struct Svd {
    double s_max, s_min;
    Eigen::Vector2d null;
};

Svd jacobian_svd(const SurfaceDefinition& s, const Eigen::Vector2d& p) {
    const JetVec2d f = surface_jet(s, p.x(), p.y(), 1);
    Eigen::Matrix<double, 3, 2> J;
    J.col(0) = partial(f, 1, 0);
    J.col(1) = partial(f, 0, 1);
    Eigen::JacobiSVD<Eigen::Matrix<double, 3, 2>> svd(J, Eigen::ComputeFullV);
    Eigen::Vector2d eta = svd.matrixV().col(1);
    const int k = std::abs(eta.x()) >= std::abs(eta.y()) ? 0 : 1;
    if (eta[k] < 0.0) eta = -eta;
    return {svd.singularValues()[0], svd.singularValues()[1], eta};
}

/// Jet of f in the rotated chart (a, b) -> p + a xi + b eta.
JetVec2d rotated_jet(const SurfaceDefinition& s, const Eigen::Vector2d& p, const Eigen::Vector2d& xi,
                     const Eigen::Vector2d& eta, int order) {
    const Jet2 a = Jet2::variable_u(order, {0.0, 0.0});
    const Jet2 b = Jet2::variable_v(order, {0.0, 0.0});
    return pullback(s, a * xi.x() + b * eta.x() + p.x(), a * xi.y() + b * eta.y() + p.y());
}

Eigen::Vector2d left_of(const Eigen::Vector2d& t) { return {-t.y(), t.x()}; }

struct LocalGeometry {
    Eigen::Vector2d eta, xi;  // (xi, eta) positively oriented
    Eigen::Vector3d fa, fab, fbb, fbbb;
};

LocalGeometry local_geometry(const SurfaceDefinition& s, const Eigen::Vector2d& p, const Tolerances& tol) {
    const Svd svd = jacobian_svd(s, p);
    if (svd.s_max <= tol.reg) {
        std::ostringstream os;
        os << "corank-two singular point at (" << p.x() << ", " << p.y() << ")";
        throw SingularLocusError(os.str());
    }
    LocalGeometry g;
    g.eta = svd.null;
    g.xi = {g.eta.y(), -g.eta.x()};
    const JetVec2d f = rotated_jet(s, p, g.xi, g.eta, 3);
    g.fa = partial(f, 1, 0);
    g.fab = partial(f, 1, 1);
    g.fbb = partial(f, 0, 2);
    g.fbbb = partial(f, 0, 3);
    return g;
}

std::optional<Eigen::Vector2d> newton_onto(const SurfaceDefinition& s, Eigen::Vector2d q, const Eigen::Vector3d& n) {
    const double scale = 1.0 + s.domain.diameter();
    double last = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 60; ++it) {
        const Jet2 g = singular_indicator(s, q, n, 1);
        const Eigen::Vector2d grad(g.coeff(1, 0), g.coeff(0, 1));
        const double gg = grad.squaredNorm();
        if (!(gg > 0.0)) return std::nullopt;
        const Eigen::Vector2d dq = -g.value() * grad / gg;
        q += dq;
        last = dq.norm();
        if (last <= 1e-15 * scale) break;
    }
    if (!(last <= 1e-10 * scale) || !std::isfinite(q.x()) || !std::isfinite(q.y())) return std::nullopt;
    return q;
}

Eigen::Vector2d tangent_at(const SurfaceDefinition& s, const Eigen::Vector2d& q, const Eigen::Vector3d& n) {
    const Jet2 g = singular_indicator(s, q, n, 1);
    const Eigen::Vector2d grad(g.coeff(1, 0), g.coeff(0, 1));
    if (!(grad.norm() > 0.0)) throw SingularLocusError("the singular set is not a regular curve here");
    return Eigen::Vector2d(-grad.y(), grad.x()).normalized();
}

Eigen::Vector2d seed_direction(const Eigen::Vector2d& t, int co_orientation) {
    const int k = std::abs(t.x()) >= std::abs(t.y()) ? 0 : 1;
    Eigen::Vector2d d = t[k] < 0.0 ? Eigen::Vector2d(-t) : t;
    return co_orientation < 0 ? Eigen::Vector2d(-d) : d;
}

Jet1 padded(const Jet1& a, int order) {
    Jet1 r(order, 0.0, a.base());
    for (int k = 0; k <= std::min(order, a.order()); ++k) r[k] = a[k];
    return r;
}

JetVec1d along(const JetVec2d& F, const Jet1& U, const Jet1& V) {
    return {plug_curve(F.x, U, V), plug_curve(F.y, U, V), plug_curve(F.z, U, V)};
}

}  // namespace

double trace_step(const SurfaceDefinition& s, const AnalysisOptions& opt) {
    return opt.step > 0.0 ? opt.step : s.domain.diameter() / 200.0;
}

Eigen::Vector2d null_direction(const SurfaceDefinition& s, const Eigen::Vector2d& p, const Tolerances& tol) {
    const Svd svd = jacobian_svd(s, p);
    if (svd.s_max <= tol.reg) {
        std::ostringstream os;
        os << "corank-two singular point at (" << p.x() << ", " << p.y() << ")";
        throw SingularLocusError(os.str());
    }
    return svd.null;
}

Eigen::Vector3d singular_normal(const SurfaceDefinition& s, const Eigen::Vector2d& p, const Tolerances& tol) {
    const LocalGeometry g = local_geometry(s, p, tol);
    Eigen::Vector3d n = g.fa.cross(g.fbb);
    if (n.norm() <= tol.reg * std::max(1.0, g.fa.norm() * g.fbb.norm())) n = g.fa.cross(g.fab);
    if (!(n.norm() > 0.0)) throw SingularLocusError("no normal direction at a degenerate singular point");
    return n.normalized();
}

Jet2 singular_indicator(const SurfaceDefinition& s, const Eigen::Vector2d& p, const Eigen::Vector3d& n, int order) {
    const JetVec2d f = surface_jet(s, p.x(), p.y(), order + 1);
    const JetVec2d c = cross(derivative_u(f), derivative_v(f));
    return c.x * n.x() + c.y * n.y() + c.z * n.z();
}

std::optional<Eigen::Vector2d> correct_onto_curve(const SurfaceDefinition& s, const Eigen::Vector2d& guess,
                                                  const Eigen::Vector3d& n, const Tolerances&) {
    return newton_onto(s, guess, n);
}

std::vector<SingularPointSample> locate_singular_points(const SurfaceDefinition& s, int grid_resolution,
                                                        const AnalysisOptions& opt) {
    const auto roots = opt.parallel ? scan_singular_grid_parallel(s, grid_resolution, opt.tol)
                                    : scan_singular_grid_serial(s, grid_resolution, opt.tol);
    std::vector<SingularPointSample> out;
    out.reserve(roots.size());
    for (const auto& r : roots) {
        SingularPointSample p;
        p.location = r;
        const CuspidalEdgeEvidence ev = is_cuspidal_edge(s, r, opt);
        p.corank_one = ev.corank_one;
        p.is_front = ev.is_front;
        p.is_cuspidal_edge = ev.is_cuspidal_edge;
        if (p.corank_one) {
            p.eta = null_direction(s, r, opt.tol);
            try {
                const Jet2 g = singular_indicator(s, r, singular_normal(s, r, opt.tol), 1);
                p.lambda = g.value();
                p.grad_lambda = {g.coeff(1, 0), g.coeff(0, 1)};
            } catch (const SingularLocusError&) {
            }
        }
        out.push_back(p);
    }
    return out;
}

CuspidalEdgeEvidence is_cuspidal_edge(const SurfaceDefinition& s, const Eigen::Vector2d& p, const AnalysisOptions& opt) {
    CuspidalEdgeEvidence ev;
    LocalGeometry g;
    try {
        g = local_geometry(s, p, opt.tol);
    } catch (const SingularLocusError&) {
        ev.corank_one = false;
        return ev;
    }
    const double fa = g.fa.norm(), fbb = g.fbb.norm();
    const Eigen::Vector3d cr = g.fa.cross(g.fbb);
    ev.eta_lambda = cr.norm();
    ev.eta_lambda_normalized = fbb > 0.0 ? ev.eta_lambda / (fa * fbb) : 0.0;
    if (!(ev.eta_lambda_normalized > opt.tol.crit)) return ev;

    // Solve for d nu(eta) in the plane normal to nu from <nu_b, f_a> = -<nu, f_ab>
    // and <nu_b, f_bb> = -<nu, f_bbb> / 2 (differentiated orthogonality at f_b = 0).
    const Eigen::Vector3d n = cr.normalized();
    const Eigen::Vector3d e1 = g.fa / fa, e2 = n.cross(e1);
    const double alpha = -n.dot(g.fab) / fa;
    const double beta = (-0.5 * n.dot(g.fbbb) - alpha * e1.dot(g.fbb)) / e2.dot(g.fbb);
    ev.nu_eta = std::hypot(alpha, beta);
    ev.nu_eta_normalized = ev.nu_eta * fa / fbb;
    ev.is_front = ev.nu_eta_normalized > opt.tol.crit;
    ev.is_cuspidal_edge = ev.is_front;
    return ev;
}

SingularCurve trace_singular_curve(const SurfaceDefinition& s, const Eigen::Vector2d& seed, const AnalysisOptions& opt,
                                   double max_len) {
    const double h = trace_step(s, opt);
    if (max_len <= 0.0) max_len = 8.0 * s.domain.diameter();
    const auto q0 = correct_onto_curve(s, seed, singular_normal(s, seed, opt.tol), opt.tol);
    if (!q0) throw SingularLocusError("seed does not converge onto the singular set");
    const Eigen::Vector2d t0 = seed_direction(tangent_at(s, *q0, singular_normal(s, *q0, opt.tol)), s.co_orientation);

    SingularCurve curve;
    std::vector<CurvePoint> branch[2];
    const long max_steps = static_cast<long>(std::ceil(max_len / h));
    for (int b = 0; b < 2 && !curve.closed; ++b) {
        const double dir = b == 0 ? 1.0 : -1.0;
        Eigen::Vector2d q = *q0, T = dir * t0;
        double t = 0.0, travelled = 0.0, step = h;
        for (long k = 0; k < max_steps; ++k) {
            std::optional<Eigen::Vector2d> next;
            Eigen::Vector2d Tn;
            try {
                const Eigen::Vector3d n = singular_normal(s, q, opt.tol);
                for (int attempt = 0; attempt < 6 && !next; ++attempt, step *= 0.5) {
                    next = correct_onto_curve(s, q + step * T, n, opt.tol);
                    if (!next) continue;
                    Tn = tangent_at(s, *next, singular_normal(s, *next, opt.tol));
                    if (Tn.dot(T) < 0.0) Tn = -Tn;
                    if (Tn.dot(T) < 0.8 || ((*next - q).norm() > 2.0 * step)) next.reset();
                }
            } catch (const std::exception& e) {
                curve.diagnostic = e.what();
                break;
            }
            if (!next) {
                std::ostringstream os;
                os << "tracing stopped near (" << q.x() << ", " << q.y() << "): corrector failed";
                curve.diagnostic = os.str();
                break;
            }
            if (!s.domain.contains(next->x(), next->y())) break;
            step = std::min(h, 2.0 * step);
            const double ds = (*next - q).norm();
            t += dir * ds;
            travelled += ds;
            q = *next;
            T = Tn;
            if (b == 0 && travelled > 4.0 * h && (q - *q0).norm() < 0.75 * h) {
                curve.closed = true;
                curve.period = t + (*q0 - q).dot(T);  // q may sit just past the seed
                break;
            }
            branch[b].push_back({t, q, dir > 0.0 ? T : Eigen::Vector2d(-T)});
        }
    }
    std::reverse(branch[1].begin(), branch[1].end());
    curve.samples = branch[1];
    curve.seed_index = curve.samples.size();
    curve.samples.push_back({0.0, *q0, t0});
    curve.samples.insert(curve.samples.end(), branch[0].begin(), branch[0].end());
    return curve;
}

CurvePoint foot_point(const SurfaceDefinition& s, const CurvePoint& start, const Eigen::Vector2d& q,
                      const AnalysisOptions& opt) {
    CurvePoint c = start;
    const double scale = 1.0 + s.domain.diameter();
    const double max_move = 0.1 * s.domain.diameter();
    for (int it = 0; it < 200; ++it) {
        const Eigen::Vector3d n = singular_normal(s, c.uv, opt.tol);
        Eigen::Vector2d T = tangent_at(s, c.uv, n);
        if (T.dot(c.tangent) < 0.0) T = -T;
        c.tangent = T;
        double step = (q - c.uv).dot(T);
        if (std::abs(step) <= 1e-14 * scale) break;
        step = std::clamp(step, -max_move, max_move);
        const auto next = correct_onto_curve(s, c.uv + step * T, n, opt.tol);
        if (!next) break;
        c.t += std::copysign((*next - c.uv).norm(), step);
        c.uv = *next;
    }
    return c;
}

std::vector<SingularCurve> trace_all_curves(const SurfaceDefinition& s, const std::vector<SingularPointSample>& samples,
                                            const AnalysisOptions& opt) {
    std::vector<SingularCurve> curves;
    std::vector<const SingularPointSample*> order;
    for (const auto& p : samples)
        if (p.corank_one) order.push_back(&p);
    if (order.empty()) return curves;
    const Eigen::Vector2d center = s.domain.center();
    std::stable_sort(order.begin(), order.end(), [&](const SingularPointSample* a, const SingularPointSample* b) {
        return (a->location - center).norm() < (b->location - center).norm();
    });
    const double h = trace_step(s, opt);
    const double grid_spacing = s.domain.diameter() / std::max(opt.grid, 1);
    auto near_traced = [&](const Eigen::Vector2d& q) {
        for (const auto& c : curves)
            for (const auto& p : c.samples)
                if ((p.uv - q).norm() <= 2.0 * grid_spacing + 2.0 * h) return true;
        return false;
    };
    for (std::size_t i = 0; i < order.size() && curves.size() < 32; ++i) {
        const Eigen::Vector2d r = order[i]->location;
        if (near_traced(r)) continue;
        try {
            Eigen::Vector2d seed = r;
            if (curves.empty()) {
                CurvePoint start{0.0, r, tangent_at(s, r, singular_normal(s, r, opt.tol))};
                seed = foot_point(s, start, center, opt).uv;
            }
            curves.push_back(trace_singular_curve(s, seed, opt));
        } catch (const SingularLocusError&) {
            continue;
        }
    }
    return curves;
}

CurvePoint point_at(const SurfaceDefinition& s, const SingularCurve& curve, double t, const AnalysisOptions& opt) {
    const auto& pts = curve.samples;
    auto it = std::lower_bound(pts.begin(), pts.end(), t, [](const CurvePoint& p, double x) { return p.t < x; });
    if (it == pts.end()) it = std::prev(pts.end());
    if (it != pts.begin() && std::abs(std::prev(it)->t - t) < std::abs(it->t - t)) it = std::prev(it);
    const CurvePoint& ref = *it;
    if (ref.t == t) return ref;
    const Eigen::Vector3d n = singular_normal(s, ref.uv, opt.tol);
    const auto q = correct_onto_curve(s, ref.uv + (t - ref.t) * ref.tangent, n, opt.tol);
    if (!q) throw SingularLocusError("cannot locate the curve point at the requested parameter");
    Eigen::Vector2d T = tangent_at(s, *q, singular_normal(s, *q, opt.tol));
    if (T.dot(ref.tangent) < 0.0) T = -T;
    return {t, *q, T};
}

std::pair<Jet1, Jet1> curve_jets(const SurfaceDefinition& s, const CurvePoint& p, int order, const Tolerances& tol) {
    const Eigen::Vector2d T = p.tangent.normalized(), N = left_of(T);
    const Eigen::Vector3d n = singular_normal(s, p.uv, tol);
    // indicator in the chart (t, w) -> p + t T + w N, to one order beyond the result
    const JetVec2d f = rotated_jet(s, p.uv, T, N, order + 2);
    const JetVec2d c = cross(derivative_u(f), derivative_v(f));
    const Jet2 G = c.x * n.x() + c.y * n.y() + c.z * n.z();
    const Jet2 Gw = G.derivative_v();
    const Jet1 t = Jet1::variable(order, 0.0);
    Jet1 W(order, 0.0, 0.0);
    for (int it = 0; it < order + 3; ++it) {
        const Jet1 r = plug_curve(G, t, W);
        const Jet1 d = plug_curve(Gw, t, W);
        if (!(std::abs(d.value()) > 0.0)) throw SingularLocusError("the singular set is not a regular curve here");
        W = W - r.truncated(order) / d.truncated(order);
    }
    return {t * T.x() + W * N.x() + p.uv.x(), t * T.y() + W * N.y() + p.uv.y()};
}

AdaptedChart build_adapted_chart(const SurfaceDefinition& s, const CurvePoint& p, const AnalysisOptions& opt) {
    const int N = opt.order + 2;
    const auto [U, V] = curve_jets(s, p, N, opt.tol);
    const JetVec2d f = surface_jet(s, p.uv.x(), p.uv.y(), N + 1);
    const JetVec1d fu = along(derivative_u(f), U, V), fv = along(derivative_v(f), U, V);
    const JetVec1d& w = fu.value().norm() >= fv.value().norm() ? fu : fv;
    // df(eta) = <f_v, w> f_u - <f_u, w> f_v vanishes wherever f_u and f_v are parallel
    Jet1 ex = dot(fv, w), ey = -dot(fu, w);
    const Eigen::Vector2d T = p.tangent.normalized();
    if (T.x() * ey.value() - T.y() * ex.value() < 0.0) {
        ex = -ex;
        ey = -ey;
    }
    const Jet1 len = sqrt(ex * ex + ey * ey);
    ex = ex / len;
    ey = ey / len;
    const std::array<double, 2> o{0.0, 0.0};
    const Jet2 sv = Jet2::variable_v(N, o);
    AdaptedChart chart;
    chart.kind = ChartKind::Adapted;
    chart.base = p;
    chart.u = Jet2::from_u(padded(U, N), o) + sv * Jet2::from_u(padded(ex, N), o);
    chart.v = Jet2::from_u(padded(V, N), o) + sv * Jet2::from_u(padded(ey, N), o);
    return chart;
}

AdaptedChart build_special_adapted_chart(const SurfaceDefinition& s, const CurvePoint& p, const AnalysisOptions& opt) {
    const AdaptedChart A = build_adapted_chart(s, p, opt);
    const int N = A.u.order();
    const JetVec2d F = pullback(s, A.u, A.v);
    const JetVec1d ft = restrict_u_axis(derivative_u(F));
    const JetVec1d fss = restrict_u_axis(derivative_v(derivative_v(F)));
    const Jet1 ft2 = dot(ft, ft);
    const Jet1 proj = dot(fss, ft) / ft2;
    const JetVec1d perp = fss - ft * proj;
    const Jet1 c2 = 1.0 / norm(perp);
    const Jet1 c = sqrt(c2);
    const Jet1 b = proj * c2 * -0.5;

    // arclength of f along the axis: T' = 1 / |f_t(T)|
    const Jet1 inv_speed = 1.0 / sqrt(ft2);
    Jet1 T = Jet1::variable(1, 0.0) * inv_speed.value();
    for (int k = 0; k < N; ++k) T = compose(inv_speed, T).truncated(N - 1).integral(0.0);

    const std::array<double, 2> o{0.0, 0.0};
    const Jet2 sigma = Jet2::variable_v(N, o);
    const Jet2 tJ = Jet2::from_u(padded(T, N), o) + Jet2::from_u(padded(compose(b, T), N), o) * sigma * sigma;
    const Jet2 sJ = Jet2::from_u(padded(compose(c, T), N), o) * sigma;
    AdaptedChart chart;
    chart.kind = ChartKind::SpecialAdapted;
    chart.base = p;
    chart.u = compose(A.u, tJ, sJ).truncated(opt.order + 1);
    chart.v = compose(A.v, tJ, sJ).truncated(opt.order + 1);
    return chart;
}

ChartJets chart_jets(const SurfaceDefinition& s, const AdaptedChart& chart, const Tolerances& tol) {
    ChartJets out;
    out.f = pullback(s, chart.u, chart.v);
    const JetVec2d ft = derivative_u(out.f);
    const double scale = std::max(1.0, ft.value().norm());
    try {
        out.h = divide_by_v(derivative_v(out.f), tol.axis * scale);
        out.nu = normalized(cross(ft, out.h));
    } catch (const JetError& e) {
        throw GeometryError(std::string("chart is not adapted to a cuspidal edge: ") + e.what());
    }
    return out;
}

AdaptedChart shifted_chart(const AdaptedChart& chart, double t, double s) {
    AdaptedChart out = chart;
    out.u = chart.u.shifted(t, s);
    out.v = chart.v.shifted(t, s);
    out.base.t = chart.base.t + t;
    out.base.uv = {out.u.value(), out.v.value()};
    return out;
}

double oriented_lambda(const SurfaceDefinition& s, const Eigen::Vector2d& q, const Eigen::Vector3d& nu_at_curve) {
    const JetVec2d f = surface_jet(s, q.x(), q.y(), 1);
    return partial(f, 1, 0).cross(partial(f, 0, 1)).dot(nu_at_curve);
}

}  // namespace cusp
