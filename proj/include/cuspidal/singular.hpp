#pragma once

// Singular set of a front: grid location, tracing, null directions, the
// cuspidal-edge test and adapted / special adapted charts along the curve.
//
// Orientation convention: a traced curve runs so that lambda > 0 on its left,
// where lambda = det(f_u, f_v, nu) for the smooth unit normal nu of the front.
// The normal is fixed per curve: with co_orientation = +1 the curve runs, at
// its seed, in the direction whose dominant (u or v) component is positive;
// co_orientation = -1 reverses the curve and therefore flips nu.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "cuspidal/frontal.hpp"
#include "cuspidal/jet.hpp"
#include "cuspidal/options.hpp"
#include "cuspidal/surface.hpp"

namespace cusp {

struct SingularPointSample {
    Eigen::Vector2d location{0.0, 0.0};
    double lambda = 0.0;                  // <f_u x f_v, n> with n the unit normal at the point
    Eigen::Vector2d grad_lambda{0.0, 0.0};
    Eigen::Vector2d eta{0.0, 0.0};        // unit null direction
    bool corank_one = true;
    bool is_front = false;
    bool is_cuspidal_edge = false;
};

/// A point of a traced singular curve together with its oriented unit tangent.
struct CurvePoint {
    double t = 0.0;
    Eigen::Vector2d uv{0.0, 0.0};
    Eigen::Vector2d tangent{1.0, 0.0};
};

struct SingularCurve {
    std::vector<CurvePoint> samples;  // ordered, t = cumulative chord length from the seed
    std::size_t seed_index = 0;
    bool closed = false;
    double period = 0.0;              // chord length of the full loop when closed
    std::string diagnostic;           // why tracing stopped early, if it did

    double t_min() const { return samples.front().t; }
    double t_max() const { return samples.back().t; }
};

struct CuspidalEdgeEvidence {
    bool corank_one = true;
    bool is_front = false;
    double eta_lambda = 0.0;             // |eta lambda| for the unit null direction eta
    double eta_lambda_normalized = 0.0;  // sine of the angle between df(xi) and f_etaeta
    double nu_eta = 0.0;                 // |d nu (eta)|: the front (immersion) witness
    double nu_eta_normalized = 0.0;      // |d nu (eta)| |df(xi)| / |f_etaeta|
    bool is_cuspidal_edge = false;
};

enum class ChartKind { Adapted, SpecialAdapted };

/// Polynomial chart (t, s) -> (u, v) about (0, 0) whose t-axis is the singular
/// curve and whose s-direction is null along it.
struct AdaptedChart {
    ChartKind kind = ChartKind::Adapted;
    CurvePoint base;
    Jet2 u, v;
};

/// Pullback of f and the frontal frame in chart coordinates.
struct ChartJets {
    JetVec2d f;   // f o chart
    JetVec2d h;   // f_s = s h
    JetVec2d nu;  // (f_t x h) / |f_t x h|
};

class SingularLocusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unit null direction of df at p (smallest right singular vector).
/// Throws SingularLocusError at corank-two points.
Eigen::Vector2d null_direction(const SurfaceDefinition& s, const Eigen::Vector2d& p, const Tolerances& tol = {});

/// Unit normal direction at a singular point (up to sign): the derivative of
/// f_u x f_v along the null direction.
Eigen::Vector3d singular_normal(const SurfaceDefinition& s, const Eigen::Vector2d& p, const Tolerances& tol = {});

/// Jet of <f_u x f_v, n> about p: same zero set as lambda near the curve.
Jet2 singular_indicator(const SurfaceDefinition& s, const Eigen::Vector2d& p, const Eigen::Vector3d& n, int order);

/// Newton projection of a nearby point onto the singular set.
std::optional<Eigen::Vector2d> correct_onto_curve(const SurfaceDefinition& s, const Eigen::Vector2d& guess,
                                                  const Eigen::Vector3d& n, const Tolerances& tol = {});

/// Sign-change scan of lambda on a grid with root polishing along grid edges.
std::vector<SingularPointSample> locate_singular_points(const SurfaceDefinition& s, int grid_resolution,
                                                        const AnalysisOptions& opt = {});

CuspidalEdgeEvidence is_cuspidal_edge(const SurfaceDefinition& s, const Eigen::Vector2d& p,
                                      const AnalysisOptions& opt = {});

/// Predictor-corrector continuation of lambda = 0 through `seed` in both directions.
SingularCurve trace_singular_curve(const SurfaceDefinition& s, const Eigen::Vector2d& seed,
                                   const AnalysisOptions& opt = {}, double max_len = 0.0);

/// The curve point nearest to q (foot point), starting from a point on the curve.
CurvePoint foot_point(const SurfaceDefinition& s, const CurvePoint& start, const Eigen::Vector2d& q,
                      const AnalysisOptions& opt = {});

/// Trace every curve through the located samples; the first seed is the foot
/// point of the domain center on the nearest curve.
std::vector<SingularCurve> trace_all_curves(const SurfaceDefinition& s, const std::vector<SingularPointSample>& samples,
                                            const AnalysisOptions& opt = {});

/// Point of the curve at parameter t (predicted from the nearest sample and corrected).
CurvePoint point_at(const SurfaceDefinition& s, const SingularCurve& curve, double t, const AnalysisOptions& opt = {});

/// Jets (U(t), V(t)) of the singular curve through p, parametrized by the
/// projection onto the tangent (unit speed at p).
std::pair<Jet1, Jet1> curve_jets(const SurfaceDefinition& s, const CurvePoint& p, int order,
                                 const Tolerances& tol = {});

/// chart(t, s) = gamma(t) + s eta(t) with eta the unit null field, oriented to the left of the curve.
AdaptedChart build_adapted_chart(const SurfaceDefinition& s, const CurvePoint& p, const AnalysisOptions& opt = {});

/// Arclength in t, shear and transverse scaling so that {f_t, f_ss, nu} is
/// orthonormal along the axis.
AdaptedChart build_special_adapted_chart(const SurfaceDefinition& s, const CurvePoint& p,
                                         const AnalysisOptions& opt = {});

ChartJets chart_jets(const SurfaceDefinition& s, const AdaptedChart& chart, const Tolerances& tol = {});

/// Chart re-expanded about the chart point (t, s); exact since the chart is a polynomial.
AdaptedChart shifted_chart(const AdaptedChart& chart, double t, double s);

/// Tracing step: opt.step, or 1/200 of the domain diameter.
double trace_step(const SurfaceDefinition& s, const AnalysisOptions& opt);

/// lambda = det(f_u, f_v, nu) at q, with nu the smooth normal of the front at the curve point p.
double oriented_lambda(const SurfaceDefinition& s, const Eigen::Vector2d& q, const Eigen::Vector3d& nu_at_curve);

}  // namespace cusp
