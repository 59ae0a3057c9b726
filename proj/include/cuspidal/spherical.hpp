#pragma once

// Spherical curves c: I -> S^2 as jets: covariant derivative, ordinary cusp
// test and cuspidal curvature.

#include <string>

#include "cuspidal/jet.hpp"
#include "cuspidal/options.hpp"
#include "cuspidal/singular.hpp"
#include "cuspidal/surface.hpp"

namespace cusp {

/// D_t X = X' - <X', c> c for a vector field X along c.
JetVec1d covariant_derivative(const JetVec1d& c, const JetVec1d& X);

struct CuspData {
    double speed = 0.0;           // |c'(t0)|
    double det = 0.0;             // det(c, D c', D D c') at t0
    double det_normalized = 0.0;  // det / (|D c'| |D D c'|)
    bool ordinary_cusp = false;
    double mu = 0.0;              // cuspidal curvature (0 when not an ordinary cusp)
    std::string sign = "none";    // "zig" (mu > 0), "zag" (mu < 0) or "none"
};

/// Ordinary-cusp test and cuspidal curvature of c at its base parameter.
/// `scale` is a reference magnitude for |c'| (its vanishing is judged relative to it).
CuspData cuspidal_curvature(const JetVec1d& c, double scale, const Tolerances& tol = {});

/// Singular locus of the Gauss map along the curve through p: nu(tau, 0) in the
/// special adapted chart (tau = arclength of f o gamma).
JetVec1d gauss_locus_jet(const SurfaceDefinition& s, const CurvePoint& p, const AnalysisOptions& opt = {});

}  // namespace cusp
