#pragma once

// Grid kernels with a serial reference and an OpenMP version. Both return
// identical results (same order, same bits).

#include <vector>

#include <Eigen/Core>

#include "cuspidal/options.hpp"
#include "cuspidal/surface.hpp"

namespace cusp {

/// Points of the singular set on the edges of a grid x grid cell partition of
/// the domain, sorted lexicographically with duplicates removed.
std::vector<Eigen::Vector2d> scan_singular_grid_serial(const SurfaceDefinition& s, int grid, const Tolerances& tol);
std::vector<Eigen::Vector2d> scan_singular_grid_parallel(const SurfaceDefinition& s, int grid, const Tolerances& tol);

struct GridCurvature {
    Eigen::Vector2d location{0.0, 0.0};
    Eigen::Vector3d point{0.0, 0.0, 0.0};
    Eigen::Vector3d normal{0.0, 0.0, 0.0};  // zero where f_u x f_v vanishes
    double lambda = 0.0;                     // co_orientation * |f_u x f_v|
    bool has_K = false;
    double K = 0.0;
};

/// Point, normal and Gaussian curvature at the (grid+1)^2 nodes, row-major in v.
std::vector<GridCurvature> sample_grid_serial(const SurfaceDefinition& s, int grid, const Tolerances& tol);
std::vector<GridCurvature> sample_grid_parallel(const SurfaceDefinition& s, int grid, const Tolerances& tol);

}  // namespace cusp
