#pragma once

// Geometric invariants of a cuspidal edge along its singular curve.
// Derivatives (') are taken with respect to the arclength of the singular
// locus f o gamma, in the orientation of the traced curve.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "cuspidal/frontal.hpp"
#include "cuspidal/options.hpp"
#include "cuspidal/singular.hpp"
#include "cuspidal/surface.hpp"

namespace cusp {

struct EdgeInvariants {
    double t = 0.0;
    Eigen::Vector2d uv{0.0, 0.0};
    Eigen::Vector3d nu{0.0, 0.0, 1.0};  // smooth unit normal of the front at the point

    double kappa_s = 0.0;   // singular curvature
    double kappa_nu = 0.0;  // limiting normal curvature
    double kappa_c = 0.0;   // cuspidal curvature
    double kappa_t = 0.0;   // cuspidal torsion

    // jet route: exact derivatives of the invariant jets along the axis
    double kappa_nu_prime = 0.0, kappa_t_prime = 0.0, kappa_s_prime = 0.0;
    // finite-difference route: Richardson-extrapolated central differences between curve points
    double kappa_nu_prime_fd = 0.0, kappa_t_prime_fd = 0.0;

    double speed = 0.0;          // |d(f o gamma)/dt| for the unit-speed curve parameter in the source
    double eta_lambda = 0.0;     // d lambda / ds for the unit null direction s (positive by orientation)
    double curvature_scale = 0.0;  // |f_tt| / |f_t|^2 + |kappa_c|, used to normalize "zero" tests
    double Lambda_max = 0.0;     // largest coefficient of the discriminant jet in the adapted chart
};

/// Invariants at a point of a traced singular curve; `finite_differences` = false skips the FD route.
EdgeInvariants invariants_at(const SurfaceDefinition& s, const CurvePoint& p, const AnalysisOptions& opt = {},
                             bool finite_differences = true);

/// Samples at `count` evenly spaced parameters over the traced range t_min .. t_max.
std::vector<EdgeInvariants> sample_invariants(const SurfaceDefinition& s, const SingularCurve& curve, int count,
                                              const AnalysisOptions& opt = {});

/// Same result computed with an OpenMP loop over the samples.
std::vector<EdgeInvariants> sample_invariants_parallel(const SurfaceDefinition& s, const SingularCurve& curve,
                                                       int count, const AnalysisOptions& opt = {});

/// kappa_nu vanishes (relative to the curvature scale) at every sample.
bool is_bounded_K(const std::vector<EdgeInvariants>& samples, const Tolerances& tol = {});
/// kappa_t vanishes at every sample: the singular curve is a line of curvature.
bool is_curvature_line(const std::vector<EdgeInvariants>& samples, const Tolerances& tol = {});

struct LimitCurvature {
    double formula = 0.0;    // -kappa_t^2 - kappa_s kappa_c^2 / 4
    double extrapolated = 0.0;  // lim Lambda / lambda across the edge
    double extrapolation_error = 0.0;
    bool agree = false;
};

/// Limit of the Gaussian curvature at an edge point with bounded K.
LimitCurvature limit_gaussian_curvature(const SurfaceDefinition& s, const CurvePoint& p, const EdgeInvariants& inv,
                                        const AnalysisOptions& opt = {});

/// Gaussian curvature at the point chart(0, s) of the adapted chart at p.
std::optional<double> transverse_K(const SurfaceDefinition& s, const AdaptedChart& chart, double offset,
                                   const Tolerances& tol = {});

/// Curvature data at chart(0, s) in the special adapted chart, with the chart's lambda and smooth normal.
TransverseSampler special_chart_sampler(const SurfaceDefinition& s, const AdaptedChart& special,
                                        const Tolerances& tol = {});

/// Bounded principal curvature, lambda * unbounded one and d_v kappa at p (special adapted chart).
BoundedCurvatureData principal_curvature_data(const SurfaceDefinition& s, const CurvePoint& p,
                                              const EdgeInvariants& inv, const AnalysisOptions& opt = {});

/// d_v kappa(p) in special adapted coordinates from the invariants.
double d_v_kappa_formula(const EdgeInvariants& inv);

}  // namespace cusp
