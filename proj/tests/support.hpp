#pragma once

#include <string>

#include "cuspidal/invariants.hpp"

namespace cusp::test {

inline SurfaceDefinition fixture(const std::string& name) {
    return load_surface_file(std::string(CUSP_FIXTURES) + "/" + name + ".surf");
}

/// The first traced singular curve of s.
inline SingularCurve first_curve(const SurfaceDefinition& s, const AnalysisOptions& opt = {}) {
    const auto samples = locate_singular_points(s, opt.grid, opt);
    const auto curves = trace_all_curves(s, samples, opt);
    if (curves.empty()) throw std::runtime_error("no singular curve");
    return curves.front();
}

inline const CurvePoint& seed_of(const SingularCurve& c) { return c.samples[c.seed_index]; }

}  // namespace cusp::test
