#pragma once

// Singularities of the Gauss map at cuspidal edges: non-degeneracy, fold / cusp
// classification, cusp sign, and checks of the sign relations between K,
// kappa_s and the cuspidal curvature of the Gauss-map singular locus.

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "cuspidal/invariants.hpp"
#include "cuspidal/spherical.hpp"

namespace cusp {

enum class GaussClass { Regular, Fold, Cusp, NondegenerateOther, Degenerate };
std::string to_string(GaussClass c);

struct NondegeneracyWitness {
    double kappa_nu_prime = 0.0;     // d_u kappa by the lemma
    double fold_discriminant = 0.0;  // 4 kappa_t^2 + kappa_s kappa_c^2
    bool lemma = false;              // kappa_nu' != 0 or the discriminant != 0
    double du_kappa = 0.0;           // direct: finite difference of kappa along the edge
    double dv_kappa = 0.0;           // direct: extrapolated transverse derivative of kappa
    bool direct = false;             // (du_kappa, dv_kappa) != 0
    bool agree = false;
};

/// Both non-degeneracy witnesses at an edge point that is a singular point of nu.
NondegeneracyWitness is_nondegenerate_gauss_singularity(const SurfaceDefinition& s, const CurvePoint& p,
                                                        const EdgeInvariants& inv, const AnalysisOptions& opt = {});

struct Classification {
    double t = 0.0;
    Eigen::Vector2d uv{0.0, 0.0};
    GaussClass cls = GaussClass::Regular;
    bool bounded_K = false;
    NondegeneracyWitness witness;
    std::string sign = "none";  // cusp sign: zig / zag
    double mu_jet = 0.0;        // cuspidal curvature of nu o gamma from its jet
    double mu_formula = 0.0;    // 2 kappa_s / sqrt|kappa_t'|
    std::string note;
};

/// Classify the Gauss map at p; `bounded_K` says whether kappa_nu vanishes along the curve.
Classification classify(const SurfaceDefinition& s, const CurvePoint& p, const EdgeInvariants& inv, bool bounded_K,
                        const AnalysisOptions& opt = {});

/// mu = 2 kappa_s / sqrt|kappa_t'|.
double cusp_mu_via_invariants(const EdgeInvariants& inv);

/// Zeros of kappa_t along the curve (sign changes of the samples, polished).
std::vector<double> kappa_t_zeros(const SurfaceDefinition& s, const SingularCurve& curve,
                                  const std::vector<EdgeInvariants>& samples, const AnalysisOptions& opt = {});

enum class CheckStatus { Passed, Failed, HypothesesNotMet };
std::string to_string(CheckStatus c);

struct TheoremCheck {
    std::string name;
    CheckStatus status = CheckStatus::HypothesesNotMet;
    std::string detail;
    std::vector<std::pair<std::string, double>> values;
};

/// Bounded K, non-degenerate and not a fold at p: sign K = -sign kappa_s (limit and probes).
TheoremCheck check_sign_of_K(const SurfaceDefinition& s, const CurvePoint& p, const EdgeInvariants& inv,
                             const Classification& c, const AnalysisOptions& opt = {});

/// Cusp of nu at p with non-zero bounded K: sign mu = sign kappa_s (and both mu routes agree).
TheoremCheck check_cusp_sign(const EdgeInvariants& inv, const Classification& c, const AnalysisOptions& opt = {});

/// Cusp with K > 0 (< 0) is a zag (zig).
TheoremCheck check_cusp_sign_from_K(const SurfaceDefinition& s, const CurvePoint& p, const EdgeInvariants& inv,
                                    const Classification& c, const AnalysisOptions& opt = {});

/// Bounded non-zero K and kappa_t = 0 along the curve: nu o gamma is a single point.
TheoremCheck cone_point_check(const std::vector<EdgeInvariants>& samples, bool bounded_K,
                              const std::vector<LimitCurvature>& limits, const AnalysisOptions& opt = {});

/// Signs of K at `count` probes chart(t, s) with |s| in [s_min, s_max] around p.
std::vector<double> probe_K(const SurfaceDefinition& s, const CurvePoint& p, int count, double s_min, double s_max,
                            const AnalysisOptions& opt = {});

struct FrameIdentityResiduals {
    double kappa_s = 0.0, kappa_nu = 0.0, kappa_c = 0.0, kappa_t = 0.0;  // form identities
    double nu_u = 0.0, nu_v = 0.0, h_u = 0.0;                            // vector identities
    double frame = 0.0;                                                  // orthonormality of {f_u, h, nu}
    double max() const;
};

/// Residuals of the special adapted identities at p (invariants from the general formulas).
FrameIdentityResiduals frame_identity_checks(const SurfaceDefinition& s, const CurvePoint& p,
                                             const EdgeInvariants& inv, const AnalysisOptions& opt = {});

}  // namespace cusp
