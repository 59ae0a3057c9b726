#pragma once

// Normal field, signed area density, discriminant and curvatures of a
// (possibly singular) parametrized surface, all computed on jets.

#include <functional>
#include <optional>
#include <stdexcept>

#include <Eigen/Core>

#include "cuspidal/jet.hpp"
#include "cuspidal/options.hpp"
#include "cuspidal/surface.hpp"

namespace cusp {

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// co_orientation * (f_u x f_v) / |f_u x f_v|; throws GeometryError at singular points.
JetVec2d unit_normal(const JetVec2d& f, int co_orientation, const Tolerances& tol = {});

struct AdaptedNormal {
    JetVec2d h;   // f_v = v h
    JetVec2d nu;  // (f_u x h) / |f_u x h|
};

/// Normal of a frontal in an adapted chart (f_v vanishes on v = 0).
AdaptedNormal frontal_unit_normal_adapted(const JetVec2d& f, const Tolerances& tol = {});

struct AreaDensity {
    Jet2 lambda;  // det(f_u, f_v, nu)
    Jet2 Lambda;  // det(nu_u, nu_v, nu)
};

AreaDensity area_density_and_discriminant(const JetVec2d& f, const JetVec2d& nu);

struct CurvatureSample {
    Eigen::Vector2d location{0.0, 0.0};
    double lambda = 0.0;
    double Lambda = 0.0;
    // nullopt marks a value that is unbounded (the point is on or too near the singular set).
    std::optional<double> K, H, k1, k2;
};

/// Regular-surface curvatures from jets of f and of a chosen unit normal nu (order >= 2 for f).
CurvatureSample regular_curvatures(const JetVec2d& f, const JetVec2d& nu, const Tolerances& tol = {});

/// Curvatures of the surface at (u, v) with nu = co_orientation * f_u x f_v / |f_u x f_v|.
CurvatureSample curvatures_at(const SurfaceDefinition& s, double u, double v, const Tolerances& tol = {});

struct ModifiedFundamentalForms {
    Jet2 E, F, G;  // |f_u|^2, <f_u, h>, |h|^2
    Jet2 L, M, N;  // -<f_u, nu_u>, -<h, nu_u>, -<h, nu_v>
};

ModifiedFundamentalForms modified_forms(const JetVec2d& f, const JetVec2d& nu, const JetVec2d& h);

struct WeingartenDerivatives {
    Eigen::Vector3d nu_u, nu_v;
};

/// nu_u and nu_v at the base point expressed in the frame {f_u, h}.
WeingartenDerivatives weingarten_derivatives(const ModifiedFundamentalForms& forms, const JetVec2d& f,
                                             const JetVec2d& h, const Tolerances& tol = {});

/// Curvature data at the chart point (0, s) of a special adapted chart, with
/// lambda measured in chart coordinates and nu the smooth normal of the front.
using TransverseSampler = std::function<CurvatureSample(double s)>;

struct BoundedCurvatureData {
    double kappa = 0.0;        // bounded principal curvature at p
    double kappa_hat = 0.0;    // limit of lambda * (unbounded principal curvature)
    double d_v_kappa = 0.0;    // derivative of kappa across the edge
    double extrapolation_error = 0.0;
    bool ambiguous_branch = false;
};

BoundedCurvatureData bounded_curvature_data(const TransverseSampler& sample, double kappa_nu, double h0 = 1e-2);

}  // namespace cusp
