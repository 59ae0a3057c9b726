#pragma once

// Analysis driver and serialization: CSV of edge invariants, JSON reports,
// OBJ meshes. Every output is deterministic for fixed inputs and options.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cuspidal/gauss.hpp"

namespace cusp {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitNothing = 2, kExitInputError = 3 };

struct RunOptions {
    AnalysisOptions analysis;
    int samples = 50;         // invariant samples per curve
    std::uint64_t seed = 0;   // recorded in reports; drives randomized property suites
};

struct PointAnalysis {
    CurvePoint point;
    EdgeInvariants invariants;
    Classification classification;
    std::optional<LimitCurvature> K_limit;  // set when K is bounded
};

struct CurveAnalysis {
    SingularCurve curve;
    CuspidalEdgeEvidence edge;  // at the seed
    std::vector<EdgeInvariants> samples;
    bool bounded_K = false;
    bool curvature_line = false;
    std::vector<PointAnalysis> points;  // kappa_t zeros and the seed, ordered by t
};

struct CheckEntry {
    std::size_t curve = 0;
    std::optional<double> t;  // absent for per-curve checks
    TheoremCheck check;
};

struct AnalysisResult {
    SurfaceDefinition surface;
    std::vector<CurveAnalysis> curves;
    std::vector<CheckEntry> checks;
    int exit_code = kExitPass;
    std::string message;
};

/// Locate, trace and sample every singular curve; classify at the kappa_t
/// zeros and seeds; with `run_checks`, evaluate every identity and theorem check.
AnalysisResult analyze_surface(const SurfaceDefinition& s, const RunOptions& opt, bool run_checks);

/// CSV with header t,u,v,kappa_s,kappa_nu,kappa_c,kappa_t,kappa_nu_p,kappa_t_p,K_limit.
/// K_limit is left empty where K is unbounded.
std::string invariants_csv(const AnalysisResult& r);

/// Report with top-level keys surface, curves, classifications, checks, tolerances, version.
nlohmann::ordered_json report_json(const AnalysisResult& r, const RunOptions& opt);

struct CommandOutput {
    int exit_code = kExitPass;
    std::string message;
    std::map<std::string, std::string> files;  // file name -> content, in name order
};

CommandOutput run_analyze(const SurfaceDefinition& s, const RunOptions& opt);
CommandOutput run_classify(const SurfaceDefinition& s, const RunOptions& opt);
CommandOutput run_verify(const SurfaceDefinition& s, const RunOptions& opt);
/// OBJ meshes of f and nu on a grid x grid partition plus polylines of f o gamma and nu o gamma.
CommandOutput run_mesh(const SurfaceDefinition& s, const RunOptions& opt);

}  // namespace cusp
