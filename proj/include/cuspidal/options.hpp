#pragma once

namespace cusp {

/// Numerical thresholds. Jets are exact, so these guard round-off only.
struct Tolerances {
    double reg = 1e-8;    // |f_u x f_v| (or |f_u x h|) below this is treated as singular
    double sing = 1e-10;  // |lambda| accepted as zero after root polishing
    double crit = 1e-6;   // normalized |eta lambda| for the cuspidal-edge test, and |nu_eta| for the front test
    double axis = 1e-9;   // axis coefficients tolerated by divide_by_v
    double bound = 1e-7;  // normalized |kappa_nu| for bounded Gaussian curvature, and |kappa_t| for a curvature line
    double cusp = 1e-7;   // normalized determinant for the ordinary-cusp test
    double mu = 1e-4;     // relative agreement of the two cuspidal-curvature routes
    double K = 1e-6;      // agreement of the limit Gaussian curvature routes
    double frame = 1e-8;  // orthonormality of the special adapted frame on the axis
    double id = 1e-6;     // residuals of the frame identities
    double point = 1e-8;  // diameter of a degenerate Gauss locus
    double zero = 1e-6;   // "non-zero" threshold for classification witnesses
    double limit = 1e-5;  // Richardson limits of the principal-curvature data (kappa_hat, d_v kappa)
};

struct AnalysisOptions {
    int order = 5;       // jet order
    int grid = 64;       // resolution of the singular-set scan
    double step = 0.0;   // tracing step; 0 selects 1/200 of the domain diameter
    Tolerances tol;
    bool parallel = true;
};

}  // namespace cusp
